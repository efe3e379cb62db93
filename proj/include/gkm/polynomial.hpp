#pragma once

#include "gkm/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gkm {

/// Exponent vector of a monomial x1^a1 * ... * xn^an.
using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

/// Graded lexicographic order, greatest first: higher total degree wins, then
/// the lexicographically larger exponent vector (x1 > x2 > ... > xn).
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// All exponent vectors of total degree d in n variables, listed in
/// descending grlex order. Size C(d+n-1, n-1); n = 0 gives the constant
/// ring ({()} for d = 0, empty otherwise).
std::vector<Exponent> monomial_basis(std::size_t n, unsigned d);

/// Binomial coefficient C(n, k) as a machine integer (0 when k > n).
std::size_t binomial(std::size_t n, std::size_t k);

/// Element of Q[x1..xn]; terms keyed by exponent, no zero coefficients.
class Polynomial {
public:
    using Terms = std::map<Exponent, Rational, GrlexGreater>;

    explicit Polynomial(std::size_t num_vars = 1) : num_vars_(num_vars) {}

    static Polynomial constant(std::size_t num_vars, const Rational& c);
    /// The coordinate function x_{index+1}.
    static Polynomial variable(std::size_t num_vars, std::size_t index);
    static Polynomial monomial(const Exponent& e, const Rational& c = 1);
    /// Inverse of `coordinates`.
    static Polynomial from_coordinates(std::size_t num_vars, const std::vector<Exponent>& basis,
                                       const RatVector& coords);

    std::size_t num_vars() const { return num_vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// True for zero and for polynomials whose terms share one total degree.
    bool is_homogeneous() const;
    bool has_integer_coefficients() const;
    Rational coefficient(const Exponent& e) const;
    /// Coefficients along `basis`; terms outside the basis are ignored.
    RatVector coordinates(const std::vector<Exponent>& basis) const;

    /// Adds c * x^e, dropping the term if it cancels.
    void add_term(const Exponent& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    Polynomial pow(unsigned k) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }

private:
    void require_same_ring(const Polynomial& rhs) const;

    std::size_t num_vars_;
    Terms terms_;
};

/// Nonzero linear form with integer coefficients (a torus weight).
class LinearForm {
public:
    explicit LinearForm(IntVector coeffs);

    std::size_t num_vars() const { return coeffs_.size(); }
    const IntVector& coeffs() const { return coeffs_; }
    const Integer& operator[](std::size_t i) const { return coeffs_[i]; }

    /// Index of the last variable with a nonzero coefficient; this is the
    /// variable eliminated when working on the hyperplane form = 0.
    std::size_t pivot() const;
    Integer content() const { return gkm::content(coeffs_); }
    bool is_primitive() const { return content() == 1; }
    LinearForm primitive_part() const;
    LinearForm operator-() const;
    LinearForm scaled(const Integer& k) const;
    Integer pair(const IntVector& xi) const;
    Polynomial to_polynomial() const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
    IntVector coeffs_;
};

/// True when a and b are scalar multiples of each other over Q.
bool proportional(const LinearForm& a, const LinearForm& b);

/// True iff no two forms in the list are proportional.
bool pairwise_coprime(const std::vector<LinearForm>& forms);

/// p = quotient * form + remainder, where the remainder does not involve the
/// pivot variable of the form. The remainder is p restricted to the
/// hyperplane form = 0.
struct LinearDivision {
    Polynomial quotient;
    Polynomial remainder;
};

LinearDivision divide_with_remainder(const Polynomial& p, const LinearForm& form);

/// Exact quotient p / form, or nullopt when form does not divide p.
/// Requires p homogeneous (or zero).
std::optional<Polynomial> divide_by_linear_form(const Polynomial& p, const LinearForm& form);

/// The remainder of `divide_with_remainder` as a polynomial in the n-1
/// variables other than the pivot (variable order preserved).
Polynomial restrict_to_hyperplane(const Polynomial& p, const LinearForm& form);

struct LinearFactor {
    LinearForm form;
    unsigned multiplicity = 1;
};

/// Divides p by the product of form^multiplicity over the factors, or
/// returns nullopt when that product does not divide p. The forms must be
/// pairwise non-proportional (PreconditionError otherwise); p homogeneous.
std::optional<Polynomial> lemma42_divide(const Polynomial& p, const std::vector<LinearFactor>& factors);

/// Divisibility in Z[x1..xn]. With form = k * primitive, p must be divisible
/// by the primitive part and the quotient's coefficients divisible by k.
/// Requires integer coefficients in p.
std::optional<Polynomial> divide_over_integers(const Polynomial& p, const LinearForm& form);

/// Text form: terms `c*x1^a1*...*xn^an` joined by ` + ` / ` - `, in descending
/// grlex order; unit coefficients and unit exponents are omitted, zero is `0`.
std::string to_string(const Polynomial& p);

/// Accepts the output of `to_string` and looser spellings such as
/// `3/2 * x1^2*x2^0 + -1*x3`. Variables must be x1..x_{num_vars}.
Polynomial parse_polynomial(std::string_view text, std::size_t num_vars);

}  // namespace gkm
