#include <doctest.h>

#include "cayley/errors.hpp"
#include "cayley/metric.hpp"
#include "cayley/zoo.hpp"

#include <cstdio>
#include <filesystem>
#include <random>

using namespace cayley;

TEST_CASE("shell sizes match the hand counts") {
    Metric z2(make_abelian(2), 2);
    CHECK(z2.sphere(0).size() == 1);
    CHECK(z2.sphere(1).size() == 4);
    CHECK(z2.sphere(2).size() == 8);

    Metric f2(make_free(2), 3);
    CHECK(f2.sphere(1).size() == 4);
    CHECK(f2.sphere(2).size() == 12);
    CHECK(f2.sphere(3).size() == 36);

    Metric d(make_dihedral_inf(), 3);
    CHECK(d.sphere(0).size() == 1);
    CHECK(d.sphere(1).size() == 2);
    CHECK(d.sphere(2).size() == 2);
    CHECK(d.sphere(3).size() == 2);
}

TEST_CASE("distance worked examples") {
    Metric z2(make_abelian(2), 4);
    auto c = [&](long long x, long long y) {
        return *z2.group().from_coords(std::vector<long long>{x, y});
    };
    CHECK(z2.distance(c(1, 1), c(1, 1)) == 0);
    CHECK(z2.distance(c(0, 0), c(2, 1)) == 3);

    Metric f2(make_free(2), 3);
    CHECK(f2.distance(f2.group().generator(0), f2.group().generator(1)) == 2); // |a^-1 b|
}

TEST_CASE("lengths are symmetric and triangle-bounded") {
    for (const auto& g : {make_free(2), make_abelian(2), make_heisenberg()}) {
        Metric m(g, 8);
        for (int r = 0; r <= 8; ++r) {
            for (const Element& x : m.sphere(r)) {
                CHECK(m.length(g->inverse(x)) == r);
            }
        }
        std::mt19937_64 rng(23);
        for (int t = 0; t < 1000; ++t) {
            Element x = random_word(*g, t % 4, rng);
            Element y = random_word(*g, (t + 1) % 4, rng);
            Element z = random_word(*g, (t + 2) % 4, rng);
            CHECK(m.distance(x, z) <= m.distance(x, y) + m.distance(y, z));
            // Left invariance.
            Element w = random_word(*g, 2, rng);
            CHECK(m.distance(g->multiply(w, x), g->multiply(w, y)) == m.distance(x, y));
        }
    }
}

TEST_CASE("conjugation moves length by at most 2 on B_{R-1}") {
    for (const auto& g : {make_heisenberg(), make_z2_rtimes_z6()}) {
        const int R = 8;
        Metric m(g, R);
        for (int r = 0; r <= R - 1; ++r) {
            for (const Element& x : m.sphere(r)) {
                for (int i = 0; i < g->genset_size(); ++i) {
                    auto len = m.table().find(g->conjugate(x, g->generator(i)));
                    if (len) {
                        CHECK(*len >= r - 2);
                        CHECK(*len <= r + 2);
                    } else {
                        // Missing means length >= R+1, which the upper bound
                        // |g|+2 only allows on the outermost tested shell.
                        CHECK(r == R - 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("out-of-table lookups throw") {
    Metric m(make_heisenberg(), 4);
    CHECK_THROWS_AS((void)m.length(heisenberg_triple(5, 1, 3)), OutOfTable);
    CHECK_THROWS_AS((void)m.sphere(9), OutOfTable);
    CHECK(m.covers_length(4));
    CHECK(!m.covers_length(5));
}

TEST_CASE("memory budget aborts with the completed radius") {
    BuildOptions opt;
    opt.max_elements = 30;
    try {
        Metric m(make_free(2), 6, opt);
        FAIL("expected MemoryBudgetExceeded");
    } catch (const MemoryBudgetExceeded& e) {
        CHECK(e.completed_radius >= 0);
        CHECK(e.completed_radius < 6);
    }
}

TEST_CASE("ball table cache round-trips byte-identically") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "cayley-cache-test";
    fs::remove_all(dir);

    BuildOptions opt;
    opt.cache_dir = dir.string();
    opt.cache_key = "heis-test";

    auto h = make_heisenberg();
    Metric first(h, 6, opt);  // cold: builds and writes
    CHECK(fs::exists(dir));
    Metric second(h, 6, opt); // warm: loads

    REQUIRE(first.table_radius() == second.table_radius());
    CHECK(first.table().length_of == second.table().length_of);
    for (int r = 0; r <= 6; ++r) {
        CHECK(first.sphere(r) == second.sphere(r));
    }

    // A different key must not hit the same file.
    BuildOptions other = opt;
    other.cache_key = "different";
    Metric third(h, 6, other);
    CHECK(third.table().length_of == first.table().length_of);

    // Corrupt the cache file: loader must fall back to a clean rebuild.
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::FILE* f = std::fopen(entry.path().c_str(), "r+b");
        REQUIRE(f);
        std::fseek(f, 0, SEEK_SET);
        std::fputc('X', f);
        std::fclose(f);
        break;
    }
    Metric fourth(h, 6, opt);
    CHECK(fourth.table().length_of == first.table().length_of);

    fs::remove_all(dir);
}

TEST_CASE("desk-scale radii stay within the default element budget") {
    Metric h(make_heisenberg(), 26);
    CHECK(h.ball_size(26) == 194581);
    Metric z(make_z2_rtimes_z6(), 20);
    CHECK(z.ball_size(20) == 6368);
}

TEST_CASE("deterministic shells: two builds agree element-for-element") {
    auto g = make_z2_rtimes_z6();
    Metric a(g, 6), b(g, 6);
    for (int r = 0; r <= 6; ++r) {
        CHECK(a.sphere(r) == b.sphere(r));
    }
}
