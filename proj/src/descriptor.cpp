#include "cayley/descriptor.hpp"

#include "cayley/ball.hpp"
#include "cayley/errors.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace cayley {

namespace {

int require_int(const Json& j, const char* key, int lo, int hi) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw ParseError(std::string("descriptor needs integer '") + key + "'");
    }
    int v = j[key].get<int>();
    if (v < lo || v > hi) {
        throw ParseError(std::string("'") + key + "' out of range [" + std::to_string(lo) + "," +
                         std::to_string(hi) + "]");
    }
    return v;
}

OraclePtr make_raag_from_json(const Json& j) {
    if (j.contains("graph_file")) {
        return make_raag(raag_graph_from_file(j["graph_file"].get<std::string>()));
    }
    RaagGraph g;
    g.vertices = require_int(j, "vertices", 1, 26);
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a [u,v] pair");
            g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    if (j.contains("labels")) {
        for (const auto& l : j["labels"]) g.labels.push_back(l.get<std::string>());
    }
    return make_raag(std::move(g));
}

OraclePtr make_symmetric_from_json(const Json& j) {
    int degree = require_int(j, "degree", 2, 8);
    std::string mode = j.value("mode", "neg");
    if (mode == "pos") return make_symmetric(degree, SymmetricMode::Pos);
    if (mode == "neg") return make_symmetric(degree, SymmetricMode::Neg);
    if (mode == "complete") return make_symmetric_complete(degree);
    if (mode == "custom") {
        if (!j.contains("generators")) throw ParseError("custom mode needs 'generators'");
        std::vector<std::vector<int>> perms;
        for (const auto& p : j["generators"]) perms.push_back(p.get<std::vector<int>>());
        return make_symmetric_custom(degree, std::move(perms));
    }
    throw ParseError("unknown symmetric mode '" + mode + "'");
}

} // namespace

OraclePtr make_group(const Json& j) {
    if (!j.is_object() || !j.contains("type")) {
        throw ParseError("group descriptor must be an object with a 'type'");
    }
    const std::string type = j["type"].get<std::string>();
    if (type == "free") return make_free(require_int(j, "rank", 1, 26));
    if (type == "abelian") return make_abelian(require_int(j, "rank", 1, 26));
    if (type == "raag") return make_raag_from_json(j);
    if (type == "symmetric") return make_symmetric_from_json(j);
    if (type == "heisenberg") return make_heisenberg();
    if (type == "dihedral_inf") return make_dihedral_inf();
    if (type == "z2_rtimes_z6") return make_z2_rtimes_z6();
    if (type == "product") {
        if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].size() != 2) {
            throw ParseError("product needs exactly two 'factors'");
        }
        return make_product(make_group(j["factors"][0]), make_group(j["factors"][1]));
    }
    if (type == "free_product_free") {
        if (!j.contains("base")) throw ParseError("free_product_free needs 'base'");
        return make_free_product_free(make_group(j["base"]), require_int(j, "rank", 1, 26));
    }
    throw ParseError("unknown group type '" + type + "'");
}

Json group_arg_to_descriptor(const std::string& arg) {
    if (arg.empty()) throw ParseError("empty group argument");

    auto all_digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(),
                                         [](unsigned char c) { return std::isdigit(c); });
    };

    if (arg == "heis" || arg == "heisenberg") return Json{{"type", "heisenberg"}};
    if (arg == "dinf") return Json{{"type", "dihedral_inf"}};
    if (arg == "z2xz6") return Json{{"type", "z2_rtimes_z6"}};
    if (arg == "f2xz") {
        return Json{{"type", "product"},
                    {"factors", Json::array({Json{{"type", "free"}, {"rank", 2}},
                                             Json{{"type", "abelian"}, {"rank", 1}}})}};
    }
    if (arg.size() >= 2 && arg[0] == 'f' && all_digits(arg.substr(1))) {
        return Json{{"type", "free"}, {"rank", std::stoi(arg.substr(1))}};
    }
    if (arg.size() >= 2 && arg[0] == 'z' && all_digits(arg.substr(1))) {
        return Json{{"type", "abelian"}, {"rank", std::stoi(arg.substr(1))}};
    }
    if (arg[0] == 's') {
        for (const char* mode : {"pos", "neg", "complete"}) {
            const std::string m = mode;
            if (arg.size() > 1 + m.size() && arg.substr(arg.size() - m.size()) == m) {
                std::string digits = arg.substr(1, arg.size() - 1 - m.size());
                if (all_digits(digits)) {
                    return Json{{"type", "symmetric"},
                                {"degree", std::stoi(digits)},
                                {"mode", m}};
                }
            }
        }
    }
    if (arg.front() == '{') {
        try {
            return Json::parse(arg);
        } catch (const Json::parse_error& e) {
            throw ParseError(std::string("bad inline JSON descriptor: ") + e.what());
        }
    }
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        try {
            Json j;
            in >> j;
            return j;
        } catch (const Json::parse_error& e) {
            throw ParseError("bad JSON descriptor file " + arg + ": " + e.what());
        }
    }
    throw ParseError("unknown group '" + arg +
                     "' (expected a shorthand like f2/z2/heis/dinf/z2xz6/s4pos, inline JSON, "
                     "or a descriptor file path)");
}

std::string canonical_descriptor(const Json& descriptor) {
    return descriptor.dump(); // nlohmann objects keep sorted keys
}

std::string descriptor_cache_key(const Json& descriptor) {
    std::uint64_t h = fnv1a64(canonical_descriptor(descriptor));
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace cayley
