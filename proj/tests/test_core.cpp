#include <doctest.h>

#include "cayley/errors.hpp"
#include "cayley/group.hpp"
#include "cayley/metric.hpp"
#include "cayley/zoo.hpp"

#include <random>

using namespace cayley;

TEST_CASE("genset validation accepts the standard layouts") {
    auto gs = validate_genset({"a", "a^-1"}, {1, 0});
    CHECK(gs.size() == 2);
    CHECK(gs.inverse_index(0) == 1);

    // Self-paired involutions, as in <a, b | a^2, b^2>.
    auto inv = validate_genset({"a", "b"}, {0, 1});
    CHECK(inv.size() == 2);
    CHECK(inv.inverse_index(0) == 0);
}

TEST_CASE("genset validation rejects structural garbage") {
    CHECK_THROWS_AS(validate_genset({}, {}), EmptyGenset);
    CHECK_THROWS_AS(validate_genset({"a", "b"}, {1, 1}), NotInvolution);
    CHECK_THROWS_AS(validate_genset({"a", "b"}, {0, 5}), NotInvolution);
    CHECK_THROWS_AS(validate_genset({"a", "a"}, {0, 1}), NotInvolution);
}

namespace {

// Z with a generating set claiming a = a^-1: structurally an involution, but
// multiply(a, a) != e, so the oracle-level check must reject it.
class BadPairingZ final : public GroupOracle {
public:
    BadPairingZ()
        : GroupOracle(validate_genset({"a"}, {0}), Element{{0}}, {Element{{1}}}) {}
    Element multiply(const Element& g, const Element& h) const override {
        return Element{{g.payload[0] + h.payload[0]}};
    }
    Element inverse(const Element& g) const override { return Element{{-g.payload[0]}}; }
    std::string describe() const override { return "Z (bad pairing)"; }
    std::string format(const Element& g) const override {
        return std::to_string(g.payload[0]);
    }
};

// Z presented with the identity smuggled in as a generator.
class IdentityGenZ final : public GroupOracle {
public:
    IdentityGenZ()
        : GroupOracle(validate_genset({"a", "a^-1", "o"}, {1, 0, 2}), Element{{0}},
                      {Element{{1}}, Element{{-1}}, Element{{0}}}) {}
    Element multiply(const Element& g, const Element& h) const override {
        return Element{{g.payload[0] + h.payload[0]}};
    }
    Element inverse(const Element& g) const override { return Element{{-g.payload[0]}}; }
    std::string describe() const override { return "Z (identity gen)"; }
    std::string format(const Element& g) const override {
        return std::to_string(g.payload[0]);
    }
};

// Heisenberg with the commutator correction dropped from multiplication:
// the payloads no longer form a group (associativity breaks against inverse
// bookkeeping), and the probe must find a witness.
class CorruptedHeisenberg final : public GroupOracle {
public:
    CorruptedHeisenberg()
        : GroupOracle(letters_genset({"a", "b"}), Element{{0, 0, 0}},
                      {Element{{1, 0, 0}}, Element{{0, 1, 0}}, Element{{-1, 0, 0}},
                       Element{{0, -1, 0}}}) {}
    Element multiply(const Element& g, const Element& h) const override {
        // C-term dropped: abelianized product with a stale C coordinate.
        return Element{{g.payload[0] + h.payload[0], g.payload[1] + h.payload[1],
                        g.payload[2] + h.payload[2]}};
    }
    Element inverse(const Element& g) const override {
        return Element{{-g.payload[0], -g.payload[1], -g.payload[2] - g.payload[0] * g.payload[1]}};
    }
    std::string describe() const override { return "Heisenberg (corrupted)"; }
    std::string format(const Element& g) const override {
        return "(" + std::to_string(g.payload[0]) + "," + std::to_string(g.payload[1]) + "," +
               std::to_string(g.payload[2]) + ")";
    }
};

} // namespace

TEST_CASE("oracle-level genset validation uses the group arithmetic") {
    CHECK_THROWS_AS(validate_oracle_genset(BadPairingZ{}), PairingNotInverse);
    CHECK_THROWS_AS(validate_oracle_genset(IdentityGenZ{}), ContainsIdentity);
}

TEST_CASE("axiom probe passes on honest groups") {
    CHECK(group_axiom_probe(*make_free(2), 1000, 7).pass);
    CHECK(group_axiom_probe(*make_abelian(2), 1000, 7).pass);
    CHECK(group_axiom_probe(*make_heisenberg(), 500, 7).pass);
    CHECK(group_axiom_probe(*make_z2_rtimes_z6(), 500, 7).pass);
    CHECK(group_axiom_probe(*make_dihedral_inf(), 500, 7).pass);
    CHECK(group_axiom_probe(*make_raag(raag_graph_path(3)), 300, 7).pass);
    CHECK(group_axiom_probe(*make_symmetric(4, SymmetricMode::Neg), 300, 7).pass);
    CHECK(group_axiom_probe(*make_product(make_free(2), make_abelian(1)), 300, 7).pass);
    CHECK(group_axiom_probe(*make_free_product_free(make_abelian(2), 2), 300, 7).pass);
}

TEST_CASE("axiom probe catches a corrupted multiplication") {
    CorruptedHeisenberg bad;
    CHECK_THROWS_AS(group_axiom_probe(bad, 1000, 7), AxiomViolation);
}

TEST_CASE("inverse pairing multiplies to the identity in every zoo group") {
    std::vector<OraclePtr> zoo = {
        make_free(2),          make_abelian(3),      make_raag(raag_graph_cycle(4)),
        make_heisenberg(),     make_dihedral_inf(),  make_z2_rtimes_z6(),
        make_symmetric(4, SymmetricMode::Pos),       make_symmetric(5, SymmetricMode::Neg),
        make_product(make_free(2), make_abelian(1)), make_free_product_free(make_abelian(2), 2),
    };
    for (const auto& g : zoo) {
        for (int i = 0; i < g->genset_size(); ++i) {
            int j = g->generators().inverse_index(i);
            CHECK(g->multiply(g->generator(i), g->generator(j)) == g->identity());
        }
        // g * g^-1 = e on random elements, keyed canonically.
        std::mt19937_64 rng(11);
        for (int t = 0; t < 1000; ++t) {
            Element x = random_word(*g, t % 7, rng);
            CHECK(g->multiply(x, g->inverse(x)) == g->identity());
        }
    }
}

TEST_CASE("apply_generator agrees with multiply on all of B_4 x S") {
    for (const auto& g : {make_free(2), make_heisenberg(), make_z2_rtimes_z6(),
                          make_raag(raag_graph_path(3))}) {
        Metric m(g, 4);
        for (const Element& x : m.ball(4)) {
            for (int i = 0; i < g->genset_size(); ++i) {
                CHECK(g->apply_generator(x, i) == g->multiply(x, g->generator(i)));
            }
        }
    }
}

TEST_CASE("is_central matches the obvious centers") {
    auto z2 = make_abelian(2);
    CHECK(is_central(*z2, *z2->from_coords(std::vector<long long>{3, -1})));

    auto f2 = make_free(2);
    CHECK(is_central(*f2, f2->identity()));
    CHECK(!is_central(*f2, f2->generator(0)));

    auto h = make_heisenberg();
    CHECK(is_central(*h, heisenberg_triple(0, 0, 5)));
    CHECK(!is_central(*h, heisenberg_triple(1, 0, 0)));
}

TEST_CASE("word parsing understands labels, inverses, powers, and runs") {
    auto f2 = make_free(2);
    CHECK(parse_word(*f2, "a b a^-1") == f2->multiply(f2->multiply(f2->generator(0), f2->generator(1)),
                                                      f2->generator(2)));
    CHECK(parse_word(*f2, "ab") == parse_word(*f2, "a b"));
    CHECK(parse_word(*f2, "a^3") == parse_word(*f2, "a a a"));
    CHECK(parse_word(*f2, "a^-2") == parse_word(*f2, "a^-1 a^-1"));
    CHECK(parse_word(*f2, "e") == f2->identity());
    CHECK_THROWS_AS(parse_word(*f2, "q"), ParseError);

    auto h = make_heisenberg();
    CHECK(parse_element(*h, "2,1,10") == heisenberg_triple(2, 1, 10));
    CHECK_THROWS_AS(parse_element(*h, "2,x,1"), ParseError);
}
