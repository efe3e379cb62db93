#pragma once

// Shared fixtures and test-only oracles.

#include "gkm/builders.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/polynomial.hpp"

#include <random>
#include <string>
#include <vector>

namespace gkm::test {

inline Polynomial P(const std::string& text, std::size_t n) { return parse_polynomial(text, n); }

inline LinearForm L(std::initializer_list<long> coeffs) {
    IntVector v;
    for (long c : coeffs) v.emplace_back(c);
    return LinearForm(std::move(v));
}

inline MomentGraph cp1() { return builders::projective_space(1); }
inline MomentGraph cp2() { return builders::projective_space(2); }
inline MomentGraph cp3() { return builders::projective_space(3); }

inline MomentGraph s2xs2(long speed) {
    auto s = builders::sphere(L({speed}));
    return builders::product(s, s);
}

inline MomentGraph square_polytope() {
    return builders::from_delzant("0,0;1,0;1,1;0,1", "0-1;1-2;3-2;0-3");
}

struct NamedGraph {
    std::string name;
    MomentGraph graph;
};

inline std::vector<NamedGraph> builder_graphs() {
    return {{"CP1", cp1()},
            {"CP2", cp2()},
            {"CP3", cp3()},
            {"S2xS2 speed (1,1)", s2xs2(1)},
            {"S2xS2 speed (2,2)", s2xs2(2)},
            {"square polytope", square_polytope()}};
}

/// p(x) with every x_k replaced by images[k].
inline Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& images) {
    const std::size_t m = images.front().num_vars();
    Polynomial out(m);
    for (const auto& [e, c] : p.terms()) {
        Polynomial term = Polynomial::constant(m, c);
        for (std::size_t k = 0; k < e.size(); ++k) term *= images[k].pow(e[k]);
        out += term;
    }
    return out;
}

/// Oracle: order of vanishing of p along the hyperplane form = 0, via the
/// invertible substitution x_i = a_j s_i (i != j), x_j = t - sum_{i != j} a_i s_i
/// where j is the last variable with a_j != 0. Then form(x) = a_j t, and p
/// vanishes to order k iff every term of p(s, t) carries t^k or higher.
inline unsigned vanishing_order(const Polynomial& p, const LinearForm& form) {
    const std::size_t n = form.num_vars();
    if (p.is_zero()) return ~0u;
    std::size_t j = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (form[i] != 0) j = i;
    }
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) {
        if (i != j) {
            images.push_back(Polynomial::variable(n, i) * Rational(form[j]));
        } else {
            Polynomial xj = Polynomial::variable(n, j);
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) xj -= Polynomial::variable(n, k) * Rational(form[k]);
            }
            images.push_back(xj);
        }
    }
    const Polynomial composed = compose(p, images);
    unsigned order = ~0u;
    for (const auto& [e, c] : composed.terms()) order = std::min(order, e[j]);
    return order;
}

inline Polynomial random_homogeneous(std::mt19937& rng, std::size_t n, unsigned d, int max_coeff = 3) {
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    Polynomial p(n);
    for (const auto& e : monomial_basis(n, d)) p.add_term(e, coeff(rng));
    return p;
}

inline LinearForm random_form(std::mt19937& rng, std::size_t n, int max_coeff = 3) {
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    while (true) {
        IntVector v;
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            v.emplace_back(coeff(rng));
            nonzero = nonzero || v.back() != 0;
        }
        if (nonzero) return LinearForm(std::move(v));
    }
}

/// Up to `count` pairwise non-proportional random forms.
inline std::vector<LinearForm> random_coprime_forms(std::mt19937& rng, std::size_t n, std::size_t count) {
    std::vector<LinearForm> forms;
    for (int attempt = 0; forms.size() < count && attempt < 100; ++attempt) {
        auto f = random_form(rng, n);
        bool ok = true;
        for (const auto& g : forms) ok = ok && !proportional(f, g);
        if (ok) forms.push_back(f);
    }
    return forms;
}

}  // namespace gkm::test
