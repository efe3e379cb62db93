#include "gkm/polynomial.hpp"

#include "gkm/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace gkm {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
    unsigned da = total_degree(a);
    unsigned db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void fill_basis(std::size_t pos, unsigned remaining, Exponent& current, std::vector<Exponent>& out) {
    if (pos + 1 == current.size()) {
        current[pos] = remaining;
        out.push_back(current);
        return;
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
        current[pos] = k;
        fill_basis(pos + 1, remaining - k, current, out);
    }
}

}  // namespace

std::vector<Exponent> monomial_basis(std::size_t n, unsigned d) {
    std::vector<Exponent> out;
    if (n == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Exponent current(n, 0);
    fill_basis(0, d, current, out);
    return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
    Polynomial p(num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars) throw DimensionMismatch("variable index out of range");
    Exponent e(num_vars, 0);
    e[index] = 1;
    return monomial(e);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
    Polynomial p(e.size());
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::from_coordinates(std::size_t num_vars, const std::vector<Exponent>& basis,
                                        const RatVector& coords) {
    if (basis.size() != coords.size()) throw DimensionMismatch("coordinate vector length differs from basis");
    Polynomial p(num_vars);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].size() != num_vars) throw DimensionMismatch("basis exponent of wrong length");
        p.add_term(basis[i], coords[i]);
    }
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.begin()->first));
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

bool Polynomial::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

Rational Polynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

RatVector Polynomial::coordinates(const std::vector<Exponent>& basis) const {
    RatVector out;
    out.reserve(basis.size());
    for (const auto& e : basis) out.push_back(coefficient(e));
    return out;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != num_vars_) throw DimensionMismatch("exponent length differs from number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void Polynomial::require_same_ring(const Polynomial& rhs) const {
    if (rhs.num_vars_ != num_vars_) {
        throw DimensionMismatch("polynomials in " + std::to_string(num_vars_) + " and " +
                                std::to_string(rhs.num_vars_) + " variables");
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    require_same_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    require_same_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    require_same_ring(rhs);
    Polynomial out(num_vars_);
    Exponent e(num_vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial out = constant(num_vars_, 1);
    for (unsigned i = 0; i < k; ++i) out *= *this;
    return out;
}

// ---------------------------------------------------------------------------
// LinearForm

LinearForm::LinearForm(IntVector coeffs) : coeffs_(std::move(coeffs)) {
    if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& z) { return z == 0; })) {
        throw PreconditionError("linear form must have a nonzero coefficient");
    }
}

std::size_t LinearForm::pivot() const {
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] != 0) return i;
    }
    return 0;  // unreachable: constructor rejects the zero form
}

LinearForm LinearForm::primitive_part() const {
    Integer g = content();
    IntVector v = coeffs_;
    for (auto& z : v) z /= g;
    return LinearForm(std::move(v));
}

LinearForm LinearForm::operator-() const {
    IntVector v = coeffs_;
    for (auto& z : v) z = -z;
    return LinearForm(std::move(v));
}

LinearForm LinearForm::scaled(const Integer& k) const {
    IntVector v = coeffs_;
    for (auto& z : v) z *= k;
    return LinearForm(std::move(v));
}

Integer LinearForm::pair(const IntVector& xi) const {
    if (xi.size() != coeffs_.size()) throw DimensionMismatch("direction and weight have different lengths");
    Integer s = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) s += coeffs_[i] * xi[i];
    return s;
}

Polynomial LinearForm::to_polynomial() const {
    Polynomial p(coeffs_.size());
    Exponent e(coeffs_.size(), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        e[i] = 1;
        p.add_term(e, Rational(coeffs_[i]));
        e[i] = 0;
    }
    return p;
}

bool proportional(const LinearForm& a, const LinearForm& b) {
    if (a.num_vars() != b.num_vars()) throw DimensionMismatch("linear forms of different ranks");
    // Both forms are nonzero, so vanishing 2x2 minors means rank one.
    for (std::size_t i = 0; i < a.num_vars(); ++i) {
        for (std::size_t j = i + 1; j < a.num_vars(); ++j) {
            if (a[i] * b[j] != a[j] * b[i]) return false;
        }
    }
    return true;
}

bool pairwise_coprime(const std::vector<LinearForm>& forms) {
    for (std::size_t i = 0; i < forms.size(); ++i) {
        for (std::size_t j = i + 1; j < forms.size(); ++j) {
            if (proportional(forms[i], forms[j])) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Division by linear forms

LinearDivision divide_with_remainder(const Polynomial& p, const LinearForm& form) {
    if (p.num_vars() != form.num_vars()) throw DimensionMismatch("polynomial and linear form of different ranks");
    const std::size_t j = form.pivot();
    const Rational lead(form[j]);
    const Polynomial divisor = form.to_polynomial();

    LinearDivision out{Polynomial(p.num_vars()), Polynomial(p.num_vars())};
    Polynomial rest = p;
    while (!rest.is_zero()) {
        // Term of highest x_j-degree; ties resolved by grlex position.
        const Exponent* best = nullptr;
        Rational coeff;
        for (const auto& [e, c] : rest.terms()) {
            if (best == nullptr || e[j] > (*best)[j]) {
                best = &e;
                coeff = c;
            }
        }
        if ((*best)[j] == 0) break;
        Exponent q = *best;
        q[j] -= 1;
        Polynomial step = Polynomial::monomial(q, coeff / lead);
        out.quotient += step;
        rest -= step * divisor;
    }
    out.remainder = std::move(rest);
    return out;
}

std::optional<Polynomial> divide_by_linear_form(const Polynomial& p, const LinearForm& form) {
    if (!p.is_homogeneous()) throw PreconditionError("divide_by_linear_form requires a homogeneous polynomial");
    auto division = divide_with_remainder(p, form);
    if (!division.remainder.is_zero()) return std::nullopt;
    return std::move(division.quotient);
}

Polynomial restrict_to_hyperplane(const Polynomial& p, const LinearForm& form) {
    const std::size_t j = form.pivot();
    auto remainder = divide_with_remainder(p, form).remainder;
    Polynomial out(p.num_vars() - 1);
    for (const auto& [e, c] : remainder.terms()) {
        Exponent reduced;
        reduced.reserve(e.size() - 1);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i != j) reduced.push_back(e[i]);
        }
        out.add_term(reduced, c);
    }
    return out;
}

std::optional<Polynomial> lemma42_divide(const Polynomial& p, const std::vector<LinearFactor>& factors) {
    std::vector<LinearForm> forms;
    forms.reserve(factors.size());
    for (const auto& f : factors) forms.push_back(f.form);
    if (!pairwise_coprime(forms)) throw PreconditionError("lemma42_divide: factors contain a proportional pair");
    if (!p.is_homogeneous()) throw PreconditionError("lemma42_divide requires a homogeneous polynomial");

    Polynomial q = p;
    for (const auto& f : factors) {
        for (unsigned k = 0; k < f.multiplicity; ++k) {
            auto next = divide_by_linear_form(q, f.form);
            if (!next) return std::nullopt;
            q = std::move(*next);
        }
    }
    return q;
}

std::optional<Polynomial> divide_over_integers(const Polynomial& p, const LinearForm& form) {
    if (!p.has_integer_coefficients()) throw PreconditionError("divide_over_integers requires integer coefficients");
    auto q = divide_by_linear_form(p, form.primitive_part());
    if (!q) return std::nullopt;
    const Integer k = form.content();
    for (const auto& [e, c] : q->terms()) {
        if (c.get_den() != 1 || c.get_num() % k != 0) return std::nullopt;
    }
    *q *= Rational(1, 1) / Rational(k);
    return q;
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;

        Rational magnitude = abs(c);
        bool constant_term = total_degree(e) == 0;
        bool wrote = false;
        if (magnitude != 1 || constant_term) {
            out << to_string(magnitude);
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) out << '*';
            out << 'x' << (i + 1);
            if (e[i] > 1) out << '^' << e[i];
            wrote = true;
        }
    }
    return out.str();
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t num_vars) : text_(text), n_(num_vars) {}

    Polynomial parse() {
        Polynomial result(n_);
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            bool signed_term = false;
            while (!at_end() && (peek() == '+' || peek() == '-')) {
                if (peek() == '-') sign = -sign;
                signed_term = true;
                ++pos_;
                skip_ws();
            }
            if (!first && !signed_term) fail("expected '+' or '-'");
            Polynomial term = parse_term();
            if (sign < 0) term = -term;
            result += term;
            first = false;
            skip_ws();
        }
        return result;
    }

private:
    Polynomial parse_term() {
        Polynomial term = Polynomial::constant(n_, 1);
        while (true) {
            skip_ws();
            term *= parse_factor();
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            return term;
        }
    }

    Polynomial parse_factor() {
        if (at_end()) fail("unexpected end of input");
        if (peek() == 'x') {
            ++pos_;
            unsigned long index = parse_digits();
            if (index < 1 || index > n_) fail("variable x" + std::to_string(index) + " out of range");
            unsigned long power = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                power = parse_digits();
            }
            Exponent e(n_, 0);
            e[index - 1] = static_cast<unsigned>(power);
            return Polynomial::monomial(e);
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (!at_end() && peek() == '/') {
                ++pos_;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            }
            try {
                return Polynomial::constant(n_, parse_rational(text_.substr(start, pos_ - start)));
            } catch (const ParseError& e) {
                fail(e.what());
            }
        }
        fail(std::string("unexpected character '") + peek() + "'");
    }

    unsigned long parse_digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        if (pos_ - start > 9) fail("integer too large");
        return std::stoul(std::string(text_.substr(start, pos_ - start)));
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t num_vars) {
    return PolyParser(text, num_vars).parse();
}

}  // namespace gkm
