#include <doctest.h>

#include "cayley/curvature.hpp"
#include "cayley/errors.hpp"
#include "cayley/transport.hpp"
#include "cayley/zoo.hpp"

#include <random>

using namespace cayley;

TEST_CASE("Z at distance d >= 2: the identity shift is an optimal coupling") {
    auto z = make_abelian(1);
    Metric m(z, 8);
    for (long long d = 2; d <= 5; ++d) {
        Element g = *z->from_coords(std::vector<long long>{d});
        TransportInstance inst = make_transport_instance(m, z->identity(), g, 1);
        REQUIRE(inst.cost.size() == 3);
        CHECK(solve_assignment_brute_force(inst.cost) == 3 * d); // all 3! couplings enumerated
        CHECK(transport_distance(m, z->identity(), g, 1) == Rational(d));
        CHECK(kappa_transport(m, g, 1) == Rational(0));
    }
}

TEST_CASE("transport distance vanishes iff the centers coincide") {
    auto f2 = make_free(2);
    Metric m(f2, 4);
    CHECK(transport_distance(m, f2->identity(), f2->identity(), 1) == Rational(0));
    Element a = f2->generator(0);
    CHECK(transport_distance(m, a, a, 1) == Rational(0));
    CHECK(transport_distance(m, f2->identity(), a, 1) > 0);
}

TEST_CASE("solver equals exhaustive enumeration on random instances") {
    std::mt19937_64 rng(41);
    // Random integer cost matrices, n <= 7.
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rng() % 7);
        std::vector<std::vector<long long>> cost(n, std::vector<long long>(n));
        for (auto& row : cost) {
            for (auto& c : row) c = static_cast<long long>(rng() % 30);
        }
        CHECK(solve_assignment(cost) == solve_assignment_brute_force(cost));
    }
    // And on real group instances.
    struct Entry {
        OraclePtr g;
        int r;
    };
    std::vector<Entry> entries = {{make_free(2), 1}, {make_abelian(2), 1},
                                  {make_dihedral_inf(), 2}};
    for (const auto& [g, r] : entries) {
        Metric m(g, 6);
        REQUIRE(m.ball_size(r) <= 7);
        std::mt19937_64 grng(43);
        for (int t = 0; t < 70; ++t) {
            Element x = random_word(*g, t % 3, grng);
            Element y = random_word(*g, (t + 1) % 3, grng);
            TransportInstance inst = make_transport_instance(m, x, y, r);
            CHECK(solve_assignment(inst.cost) == solve_assignment_brute_force(inst.cost));
        }
    }
}

TEST_CASE("F_2 generator: the 5x5 assignment gives kappa^T = -4/5") {
    // By hand: B_1(e) and B_1(a) share {e, a} (cost 0), and the remaining
    // three points all sit at distance 3 from every leftover target.
    auto f2 = make_free(2);
    Metric m(f2, 4);
    Element a = f2->generator(0);
    TransportInstance inst = make_transport_instance(m, f2->identity(), a, 1);
    REQUIRE(inst.cost.size() == 5);
    CHECK(solve_assignment(inst.cost) == 9);
    CHECK(solve_assignment_brute_force(inst.cost) == 9);
    CHECK(transport_distance(m, f2->identity(), a, 1) == Rational(9, 5));
    CHECK(kappa_transport(m, a, 1) == Rational(-4, 5));
    // Here transport achieves the correspondence coupling exactly.
    CHECK(kappa_transport(m, a, 1) == kappa_r(m, a, 1, CompareMode::Ball));
}

TEST_CASE("transport never exceeds the correspondence coupling") {
    for (const auto& g : {make_free(2), make_abelian(2), make_dihedral_inf()}) {
        Metric m(g, 6);
        for (int d = 1; d <= 4; ++d) {
            for (const Element& x : m.sphere(d)) {
                Rational t = transport_distance(m, g->identity(), x, 1);
                Rational b = ball_comparison(m, g->identity(), x, 1);
                CHECK(t <= b);
                CHECK(kappa_transport(m, x, 1) >= kappa_r(m, x, 1, CompareMode::Ball));
            }
        }
    }
}

TEST_CASE("transport distance is symmetric and satisfies the triangle inequality") {
    auto z2 = make_abelian(2);
    Metric m(z2, 8);
    std::mt19937_64 rng(47);
    for (int t = 0; t < 40; ++t) {
        Element x = random_word(*z2, 2, rng);
        Element y = random_word(*z2, 2, rng);
        Element z = random_word(*z2, 2, rng);
        Rational xy = transport_distance(m, x, y, 1);
        Rational yx = transport_distance(m, y, x, 1);
        CHECK(xy == yx);
        CHECK(transport_distance(m, x, z, 1) <= xy + transport_distance(m, y, z, 1));
    }
}

TEST_CASE("abelian transport curvature is non-negative") {
    auto z2 = make_abelian(2);
    Metric m(z2, 7);
    for (int d = 1; d <= 5; ++d) {
        for (const Element& x : m.sphere(d)) {
            CHECK(kappa_transport(m, x, 1) >= 0);
        }
    }
}

TEST_CASE("solver budget and identity guards") {
    auto f2 = make_free(2);
    Metric m(f2, 4);
    CHECK_THROWS_AS((void)transport_distance(m, f2->identity(), f2->generator(0), 1, 3),
                    SolverBudgetExceeded);
    CHECK_THROWS_AS((void)kappa_transport(m, f2->identity(), 1), UndefinedAtIdentity);
}
