#include "support.hpp"

#include "gkm/errors.hpp"
#include "gkm/integral.hpp"

#include <doctest.h>

#include <sstream>

using namespace gkm;
using gkm::test::L;
using gkm::test::P;

namespace {

std::vector<Polynomial> tuple(const MomentGraph& g, std::initializer_list<std::pair<const char*, const char*>> entries) {
    std::vector<Polynomial> out(g.vertices().size(), Polynomial(g.torus_rank()));
    for (auto [id, text] : entries) out[g.index_of(id)] = P(text, g.torus_rank());
    return out;
}

// Oracle: congruences over Z checked edge by edge with divide_over_integers.
bool integral_congruences_hold(const MomentGraph& g, const std::vector<Polynomial>& values) {
    for (const auto& e : g.edges()) {
        auto diff = values[g.index_of(e.src)] - values[g.index_of(e.dst)];
        if (!divide_over_integers(diff, e.weight)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("integral kernel of spheres") {
    auto s1 = builders::sphere(L({1}));
    auto b = int_kernel_basis(s1, 0);
    CHECK(b.rank() == 1);
    CHECK(b.contains(tuple(s1, {{"S", "1"}, {"N", "1"}})));
    CHECK_FALSE(b.contains(tuple(s1, {{"S", "1"}})));

    auto s2 = builders::sphere(L({2}));
    auto b1 = int_kernel_basis(s2, 1);
    CHECK(b1.rank() == 2);
    CHECK_FALSE(b1.contains(tuple(s2, {{"S", "x1"}})));
    CHECK(b1.contains(tuple(s2, {{"S", "2*x1"}})));
    CHECK(b1.contains(tuple(s2, {{"S", "x1"}, {"N", "x1"}})));
}

TEST_CASE("integral kernel of the speed-two S2 x S2") {
    auto g = test::s2xs2(2);
    auto b = int_kernel_basis(g, 2);
    CHECK(b.rank() == kernel_dimension(g, 2));
    CHECK(b.contains(tuple(g, {{"NN", "2*x1*x2"}})));
    CHECK_FALSE(b.contains(tuple(g, {{"NN", "x1*x2"}})));
}

TEST_CASE("integral kernel elements satisfy the integral congruences") {
    for (const auto& [name, g] : test::builder_graphs()) {
        CAPTURE(name);
        for (unsigned d = 0; d <= 2; ++d) {
            auto b = int_kernel_basis(g, d);
            CHECK(b.rank() == kernel_dimension(g, d));
            for (std::size_t i = 0; i < b.rank(); ++i) CHECK(integral_congruences_hold(g, b.element(i)));
        }
    }
}

TEST_CASE("integral kernel is saturated against brute force") {
    // Every integer tuple with small coefficients that satisfies the
    // congruences over Z lies in the lattice, and conversely.
    auto g = builders::sphere(L({3}));
    auto b = int_kernel_basis(g, 1);
    for (int s = -7; s <= 7; ++s) {
        for (int n = -7; n <= 7; ++n) {
            std::vector<Polynomial> t{Polynomial::monomial({1}, s), Polynomial::monomial({1}, n)};
            CHECK(b.contains(t) == integral_congruences_hold(g, t));
        }
    }
    auto sq = test::s2xs2(2);
    auto b1 = int_kernel_basis(sq, 1);
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Polynomial> t;
        for (std::size_t v = 0; v < 4; ++v) {
            Polynomial p(2);
            p.add_term({1, 0}, coeff(rng));
            p.add_term({0, 1}, coeff(rng));
            t.push_back(p);
        }
        CHECK(b1.contains(t) == integral_congruences_hold(sq, t));
    }
}

TEST_CASE("Euler divisibility gap examples") {
    auto s1 = builders::sphere(L({1}));
    CHECK(euler_divisibility_gap(s1, Direction{{1}}, "N") == 1);

    auto s22 = test::s2xs2(2);
    auto xi = generic_direction(s22);
    CHECK(euler_divisibility_gap(s22, xi, "NN") == 2);

    auto s11 = test::s2xs2(1);
    for (const auto& v : s11.vertices()) CHECK(euler_divisibility_gap(s11, generic_direction(s11), v.id) == 1);
}

TEST_CASE("a single edge never has a gap") {
    for (long k = 1; k <= 5; ++k) CHECK(euler_divisibility_gap(builders::sphere(L({k})), Direction{{1}}, "N") == 1);
}

TEST_CASE("gap grows with the speed of S2 x S2") {
    Integer previous = 0;
    for (long k = 1; k <= 4; ++k) {
        auto g = test::s2xs2(k);
        Integer gap = euler_divisibility_gap(g, generic_direction(g), "NN");
        CHECK(gap == k);
        CHECK(gap >= previous);
        previous = gap;
    }
}

TEST_CASE("gap report lists vertices in critical order") {
    auto g = test::s2xs2(2);
    auto rows = gap_report(g, generic_direction(g));
    REQUIRE(rows.size() == 4);
    CHECK(rows.back().vertex == "NN");
    std::ostringstream out;
    write_gaps(out, rows);
    CHECK(out.str() == "SS 1\nNS 1\nSN 1\nNN 2\n");
}

TEST_CASE("gap errors") {
    auto broken = builders::from_delzant("0,0;1,0;1,1;0,1", "0-1;1-2;0-3");
    CHECK_THROWS_AS(euler_divisibility_gap(broken, Direction{{1, -2}}, "v2"), StructuralError);
    CHECK_THROWS_AS(euler_divisibility_gap(test::cp2(), Direction{{1, 1}}, "p0"), GenericityError);
}
