#include "support.hpp"

#include "gkm/errors.hpp"

#include <doctest.h>

using namespace gkm;
using gkm::test::L;
using gkm::test::P;

TEST_CASE("monomial basis is grlex and has binomial size") {
    CHECK(monomial_basis(1, 3) == std::vector<Exponent>{{3}});
    CHECK(monomial_basis(2, 2) == std::vector<Exponent>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(monomial_basis(3, 2).size() == 6);
    CHECK(monomial_basis(3, 2).front() == Exponent{2, 0, 0});
    CHECK(monomial_basis(3, 2).back() == Exponent{0, 0, 2});
    for (std::size_t n = 1; n <= 4; ++n) {
        for (unsigned d = 0; d <= 5; ++d) CHECK(monomial_basis(n, d).size() == binomial(d + n - 1, n - 1));
    }
    CHECK(monomial_basis(0, 0).size() == 1);
    CHECK(monomial_basis(0, 2).empty());
}

TEST_CASE("rational parsing is strict and canonical") {
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(to_string(parse_rational("-6/3")) == "-2");
    CHECK(to_string(parse_rational("1/3")) == "1/3");
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
}

TEST_CASE("ring arithmetic") {
    CHECK(P("x1 - x2", 2) * P("x1 + x2", 2) == P("x1^2 - x2^2", 2));
    CHECK(P("x1 + 3*x2", 2) + Polynomial(2) == P("x1 + 3*x2", 2));
    CHECK(P("2*x1", 2) * P("2*x2", 2) == P("4*x1*x2", 2));
    CHECK((P("x1", 2) - P("x1", 2)).is_zero());
    CHECK_THROWS_AS(P("x1", 1) + P("x1", 2), DimensionMismatch);
    CHECK_THROWS_AS(P("x1", 1) * P("x1", 2), DimensionMismatch);
}

TEST_CASE("ring axioms hold exactly on random polynomials") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 3;
        auto a = test::random_homogeneous(rng, n, trial % 3);
        auto b = test::random_homogeneous(rng, n, 1 + trial % 2);
        auto c = test::random_homogeneous(rng, n, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("text form round-trips") {
    CHECK(to_string(P("x1^2 - x2^2", 2)) == "x1^2 - x2^2");
    CHECK(to_string(P("3/2 * x1^1*x2^0 + -1*x3 + 2", 3)) == "3/2*x1 - x3 + 2");
    CHECK(to_string(Polynomial(2)) == "0");
    CHECK(to_string(P("-x1*x2", 2)) == "-x1*x2");
    CHECK_THROWS_AS(P("x3", 2), ParseError);
    CHECK_THROWS_AS(P("x1 +", 2), ParseError);
    CHECK_THROWS_AS(P("1.5*x1", 2), ParseError);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = test::random_homogeneous(rng, 3, trial % 4) * Rational(1, 1 + trial % 5);
        CHECK(parse_polynomial(to_string(p), 3) == p);
    }
}

TEST_CASE("division by a linear form") {
    CHECK(divide_by_linear_form(P("x1^2 - x2^2", 2), L({1, -1})) == P("x1 + x2", 2));
    CHECK_FALSE(divide_by_linear_form(P("x1*x2", 2), L({1, 1})).has_value());
    // The remainder is the value on the hyperplane x2 = -x1.
    CHECK(divide_with_remainder(P("x1*x2", 2), L({1, 1})).remainder == P("-x1^2", 2));
    CHECK(divide_by_linear_form(P("4*x1*x2", 2), L({2, 0})) == P("2*x2", 2));
    CHECK(divide_by_linear_form(Polynomial(2), L({1, 0})) == Polynomial(2));
    CHECK_THROWS_AS(divide_by_linear_form(P("x1^2 + x2", 2), L({1, 0})), PreconditionError);
}

TEST_CASE("division round-trip on random inputs") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 3;
        auto p = test::random_homogeneous(rng, n, trial % 4);
        auto a = test::random_form(rng, n);
        CHECK(divide_by_linear_form(p * a.to_polynomial(), a) == p);
    }
}

TEST_CASE("restriction to a hyperplane drops the pivot variable") {
    // x1^2 on x2 = -x1 stays x1^2; x2^2 becomes x1^2.
    CHECK(restrict_to_hyperplane(P("x2^2", 2), L({1, 1})) == P("x1^2", 1));
    CHECK(restrict_to_hyperplane(P("x1*x2 + x3", 3), L({0, 2, 0})) == P("x2", 2));
    CHECK(restrict_to_hyperplane(P("x1", 1), L({3})).is_zero());
    CHECK(restrict_to_hyperplane(P("5", 1), L({3})) == Polynomial::constant(0, 5));
}

TEST_CASE("lemma42_divide") {
    CHECK(lemma42_divide(P("x1^3*x2^2 + x1^2*x2^3", 2), {{L({1, 0}), 2}, {L({0, 1}), 2}}) == P("x1 + x2", 2));
    CHECK_FALSE(lemma42_divide(P("x1*x2", 2), {{L({1, 0}), 2}, {L({0, 1}), 1}}).has_value());
    CHECK(lemma42_divide(Polynomial(2), {{L({1, 0}), 2}, {L({1, 1}), 1}}) == Polynomial(2));
    CHECK_THROWS_AS(lemma42_divide(P("x1^2", 2), {{L({1, 0}), 1}, {L({-2, 0}), 1}}), PreconditionError);
}

TEST_CASE("pairwise coprimality is proportionality over Q") {
    CHECK(pairwise_coprime({L({1, 0}), L({0, 1}), L({1, 1})}));
    CHECK_FALSE(pairwise_coprime({L({1, 0}), L({2, 0})}));
    CHECK(pairwise_coprime({L({2, 0}), L({0, 2})}));
    CHECK_FALSE(pairwise_coprime({L({1, -1, 2}), L({-2, 2, -4})}));
}

TEST_CASE("lemma42_divide agrees with the hyperplane-vanishing oracle") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 3;
        auto forms = test::random_coprime_forms(rng, n, 1 + trial % 3);
        std::vector<LinearFactor> factors;
        Polynomial p = test::random_homogeneous(rng, n, trial % 4);
        for (const auto& f : forms) {
            unsigned m = 1 + trial % 2;
            factors.push_back({f, m});
            p *= f.to_polynomial().pow(static_cast<unsigned>(pick(rng)) % (m + 1));
        }
        bool oracle = true;
        for (const auto& f : factors) oracle = oracle && test::vanishing_order(p, f.form) >= f.multiplicity;
        auto q = lemma42_divide(p, factors);
        CHECK(q.has_value() == oracle);
        if (q) {
            Polynomial back = *q;
            for (const auto& f : factors) back *= f.form.to_polynomial().pow(f.multiplicity);
            CHECK(back == p);
        }
    }
}

TEST_CASE("integral divisibility needs the content to divide the quotient") {
    CHECK_FALSE(divide_over_integers(P("x1", 1), L({2})).has_value());
    CHECK(divide_over_integers(P("2*x1", 1), L({2})) == P("1", 1));
    CHECK(divide_over_integers(P("2*x1*x2", 2), L({2, 0})) == P("x2", 2));
    CHECK_FALSE(divide_over_integers(P("2*x1*x2", 2), L({2, 2})).has_value());
    CHECK_THROWS_AS(divide_over_integers(P("1/2*x1", 1), L({1})), PreconditionError);
}
