#include <doctest.h>

#include "cayley/descriptor.hpp"
#include "cayley/errors.hpp"

#include <filesystem>
#include <fstream>

using namespace cayley;

TEST_CASE("shorthands expand to the right descriptors") {
    CHECK(group_arg_to_descriptor("f2") == Json{{"type", "free"}, {"rank", 2}});
    CHECK(group_arg_to_descriptor("z3") == Json{{"type", "abelian"}, {"rank", 3}});
    CHECK(group_arg_to_descriptor("heis") == Json{{"type", "heisenberg"}});
    CHECK(group_arg_to_descriptor("dinf") == Json{{"type", "dihedral_inf"}});
    CHECK(group_arg_to_descriptor("z2xz6") == Json{{"type", "z2_rtimes_z6"}});
    CHECK(group_arg_to_descriptor("s4pos") ==
          Json{{"type", "symmetric"}, {"degree", 4}, {"mode", "pos"}});
    CHECK(group_arg_to_descriptor("s5neg") ==
          Json{{"type", "symmetric"}, {"degree", 5}, {"mode", "neg"}});
    CHECK_THROWS_AS(group_arg_to_descriptor("nosuch"), ParseError);
}

TEST_CASE("descriptors build every zoo group") {
    CHECK(make_group(group_arg_to_descriptor("f2"))->describe() == "F_2");
    CHECK(make_group(group_arg_to_descriptor("z2xz6"))->genset_size() == 6);
    CHECK(make_group(group_arg_to_descriptor("s4pos"))->genset_size() == 21);
    CHECK(make_group(group_arg_to_descriptor("f2xz"))->genset_size() == 6);

    Json raag{{"type", "raag"},
              {"vertices", 3},
              {"edges", Json::array({Json::array({0, 1}), Json::array({1, 2})})},
              {"labels", Json::array({"a", "z", "b"})}};
    auto g = make_group(raag);
    CHECK(g->genset_size() == 6);

    Json fp{{"type", "free_product_free"}, {"base", Json{{"type", "abelian"}, {"rank", 2}}},
            {"rank", 3}};
    CHECK(make_group(fp)->genset_size() == 10);

    Json custom{{"type", "symmetric"},
                {"degree", 3},
                {"mode", "custom"},
                {"generators", Json::array({Json::array({1, 0, 2}), Json::array({0, 2, 1})})}};
    CHECK(make_group(custom)->genset_size() == 2);
}

TEST_CASE("malformed descriptors raise ParseError") {
    CHECK_THROWS_AS(make_group(Json{{"type", "nosuch"}}), ParseError);
    CHECK_THROWS_AS(make_group(Json{{"type", "free"}}), ParseError);
    CHECK_THROWS_AS(make_group(Json{{"type", "free"}, {"rank", 0}}), ParseError);
    CHECK_THROWS_AS(make_group(Json{{"type", "product"}, {"factors", Json::array()}}),
                    ParseError);
    CHECK_THROWS_AS(make_group(Json::array()), ParseError);
    Json loop{{"type", "raag"}, {"vertices", 2}, {"edges", Json::array({Json::array({0, 0})})}};
    CHECK_THROWS_AS(make_group(loop), ParseError);
}

TEST_CASE("raag graph files parse edges and optional vertex counts") {
    namespace fs = std::filesystem;
    fs::path p = fs::temp_directory_path() / "gamma-test.txt";
    {
        std::ofstream out(p);
        out << "# path on three vertices\n";
        out << "0 1\n";
        out << "1 2\n";
    }
    RaagGraph g = raag_graph_from_file(p.string());
    CHECK(g.vertices == 3);
    CHECK(g.edges.size() == 2);

    {
        std::ofstream out(p);
        out << "vertices 4\n"; // isolated vertex 3
        out << "0 1\n";
    }
    RaagGraph h = raag_graph_from_file(p.string());
    CHECK(h.vertices == 4);
    fs::remove(p);

    Json via_file{{"type", "raag"}, {"graph_file", p.string()}};
    CHECK_THROWS_AS(make_group(via_file), ParseError); // file removed
}

TEST_CASE("cache keys are stable across key order and runs") {
    Json a{{"type", "symmetric"}, {"degree", 4}, {"mode", "pos"}};
    Json b{{"mode", "pos"}, {"degree", 4}, {"type", "symmetric"}};
    CHECK(canonical_descriptor(a) == canonical_descriptor(b));
    CHECK(descriptor_cache_key(a) == descriptor_cache_key(b));
    CHECK(descriptor_cache_key(a) != descriptor_cache_key(Json{{"type", "heisenberg"}}));
}
