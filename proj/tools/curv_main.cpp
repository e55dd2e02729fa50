#include "cayley/census.hpp"
#include "cayley/curvature.hpp"
#include "cayley/descriptor.hpp"
#include "cayley/errors.hpp"
#include "cayley/metric.hpp"
#include "cayley/transport.hpp"
#include "cayley/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace cayley;

struct GlobalOpts {
    std::string group;
    std::string graph_file;
    std::string format = "table";
    std::string out;
    std::string cache_dir;
    std::size_t mem_limit = 10'000'000;
    int threads = 1;
    unsigned long long seed = 12345;
};

std::ostream& open_out(const GlobalOpts& g, std::ofstream& file) {
    if (g.out.empty()) return std::cout;
    file.open(g.out);
    if (!file) throw Error("cannot open output file " + g.out);
    return file;
}

Json resolve_descriptor(const GlobalOpts& g) {
    if (!g.graph_file.empty()) {
        return Json{{"type", "raag"}, {"graph_file", g.graph_file}};
    }
    if (g.group.empty()) throw ParseError("missing --group");
    return group_arg_to_descriptor(g.group);
}

BuildOptions build_options(const GlobalOpts& g, const Json& descriptor) {
    BuildOptions b;
    b.max_elements = g.mem_limit;
    if (!g.cache_dir.empty()) {
        b.cache_dir = g.cache_dir;
        b.cache_key = descriptor_cache_key(descriptor);
    }
    return b;
}

// Grows the table until every requested element is covered deeply enough
// for curvature at comparison radius r.
Metric metric_covering(const OraclePtr& oracle, const Json& descriptor, const GlobalOpts& g,
                       const std::vector<Element>& elements, int r, int forced_radius) {
    if (forced_radius >= 0) {
        return Metric(oracle, forced_radius, build_options(g, descriptor));
    }
    int radius = r;
    while (true) {
        Metric m(oracle, radius, build_options(g, descriptor));
        bool ok = true;
        for (const Element& e : elements) {
            auto len = oracle->has_closed_length() ? oracle->closed_length(e)
                                                   : m.table().find(e);
            if (!len || !m.covers_length(*len + 2 * r)) {
                ok = false;
                break;
            }
        }
        if (ok) return m;
        radius += std::max(2, radius); // geometric growth; budget caps the loop
    }
}

struct EvalRow {
    CurvatureReport base;
    std::string variant;
    int r = 1;
    Rational variant_kappa;
    bool has_variant = false;
};

void emit_eval(std::ostream& os, const std::string& format, const std::vector<EvalRow>& rows) {
    if (format == "csv") {
        os << "element,length,av,kappa,kappa_approx,sign,variant,r,variant_kappa\n";
        for (const auto& r : rows) {
            os << '"' << r.base.element << "\"," << r.base.length << ','
               << to_fraction_string(r.base.av) << ',' << to_fraction_string(r.base.kappa) << ','
               << to_approx(r.base.kappa) << ',' << r.base.sign << ',' << r.variant << ',' << r.r
               << ',' << (r.has_variant ? to_fraction_string(r.variant_kappa) : "") << '\n';
        }
        return;
    }
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json row{{"element", r.base.element},
                     {"length", r.base.length},
                     {"av", to_fraction_string(r.base.av)},
                     {"kappa", to_fraction_string(r.base.kappa)},
                     {"kappa_approx", to_approx(r.base.kappa)},
                     {"sign", r.base.sign}};
            if (r.has_variant) {
                row["variant"] = r.variant;
                row["r"] = r.r;
                row["variant_kappa"] = to_fraction_string(r.variant_kappa);
            }
            arr.push_back(row);
        }
        os << arr.dump(2) << '\n';
        return;
    }
    for (const auto& r : rows) {
        os << r.base.element << ": |g| = " << r.base.length
           << ", Av = " << to_fraction_string(r.base.av)
           << ", kappa = " << to_fraction_string(r.base.kappa) << " (~" << to_approx(r.base.kappa)
           << ")";
        if (r.has_variant) {
            os << ", kappa^" << (r.variant == "transport" ? "T" : "B") << "_" << r.r << " = "
               << to_fraction_string(r.variant_kappa);
        }
        os << '\n';
    }
}

int cmd_eval(const GlobalOpts& g, const std::vector<std::string>& words,
             const std::vector<std::string>& coords, const std::string& variant, int r,
             int forced_radius) {
    Json descriptor = resolve_descriptor(g);
    OraclePtr oracle = make_group(descriptor);

    std::vector<Element> elements;
    for (const auto& w : words) elements.push_back(parse_word(*oracle, w));
    for (const auto& c : coords) elements.push_back(parse_element(*oracle, c));
    if (elements.empty()) throw ParseError("no elements given (use --word or --coords)");

    Metric m = metric_covering(oracle, descriptor, g, elements, r, forced_radius);

    std::vector<EvalRow> rows;
    for (const Element& e : elements) {
        EvalRow row;
        row.base = curvature_report(m, e);
        row.variant = variant;
        row.r = r;
        if (e != oracle->identity()) {
            if (variant == "ball") {
                row.variant_kappa = kappa_r(m, e, r, CompareMode::Ball);
                row.has_variant = true;
            } else if (variant == "transport") {
                row.variant_kappa = kappa_transport(m, e, r);
                row.has_variant = true;
            } else if (variant == "sphere" && r != 1) {
                row.variant_kappa = kappa_r(m, e, r, CompareMode::Sphere);
                row.has_variant = true;
            }
        }
        rows.push_back(std::move(row));
    }

    std::ofstream file;
    emit_eval(open_out(g, file), g.format, rows);
    return 0;
}

int cmd_census(const GlobalOpts& g, int radius) {
    Json descriptor = resolve_descriptor(g);
    OraclePtr oracle = make_group(descriptor);
    Metric m(oracle, radius + 2, build_options(g, descriptor));

    std::ofstream file;
    std::ostream& os = open_out(g, file);
    if (g.format == "json") {
        Json arr = Json::array();
        for (int n = 1; n <= radius; ++n) {
            SignCensus c = sign_census(m, n, g.threads);
            Rational avg = average_kappa(m, n, g.threads);
            arr.push_back(Json{{"n", n},
                               {"ball", c.ball_size},
                               {"positive", c.positive},
                               {"zero", c.zero},
                               {"negative", c.negative},
                               {"prop_positive", to_fraction_string(c.prop_positive)},
                               {"prop_zero", to_fraction_string(c.prop_zero)},
                               {"prop_negative", to_fraction_string(c.prop_negative)},
                               {"avg_kappa", to_fraction_string(avg)},
                               {"avg_kappa_approx", to_approx(avg)}});
        }
        os << arr.dump(2) << '\n';
        return 0;
    }
    const char sep = g.format == "csv" ? ',' : '\t';
    os << "n" << sep << "ball" << sep << "positive" << sep << "zero" << sep << "negative" << sep
       << "prop_positive" << sep << "prop_zero" << sep << "prop_negative" << sep << "avg_kappa"
       << sep << "avg_kappa_approx\n";
    for (int n = 1; n <= radius; ++n) {
        SignCensus c = sign_census(m, n, g.threads);
        Rational avg = average_kappa(m, n, g.threads);
        os << n << sep << c.ball_size << sep << c.positive << sep << c.zero << sep << c.negative
           << sep << to_fraction_string(c.prop_positive) << sep
           << to_fraction_string(c.prop_zero) << sep << to_fraction_string(c.prop_negative)
           << sep << to_fraction_string(avg) << sep << to_approx(avg) << '\n';
    }
    return 0;
}

int cmd_flux(const GlobalOpts& g, int n_max) {
    Json descriptor = resolve_descriptor(g);
    OraclePtr oracle = make_group(descriptor);
    Metric m(oracle, 2 * n_max + 3, build_options(g, descriptor));
    ShellFlux f = shell_flux(m, n_max);

    std::ofstream file;
    std::ostream& os = open_out(g, file);
    if (g.format == "json") {
        os << Json{{"n_max", f.n_max},
                   {"c", f.c},
                   {"k", f.k},
                   {"c_identity_ok", f.c_identity_ok},
                   {"k_identity_ok", f.k_identity_ok},
                   {"witnesses", f.witnesses}}
                  .dump(2)
           << '\n';
    } else {
        const char sep = g.format == "csv" ? ',' : '\t';
        os << "n" << sep << "c_n" << sep << "k_n\n";
        for (std::size_t n = 0; n < f.c.size(); ++n) {
            os << n << sep << f.c[n] << sep;
            if (n < f.k.size()) os << f.k[n];
            os << '\n';
        }
    }
    if (!f.ok()) {
        for (const auto& w : f.witnesses) std::cerr << "flux identity violation: " << w << '\n';
        return 1;
    }
    return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& which) {
    VerifyOptions opt;
    opt.max_elements = g.mem_limit;
    opt.threads = g.threads;
    opt.seed = g.seed;
    opt.cache_dir = g.cache_dir;

    std::vector<std::string> names;
    if (which == "all") {
        names = verify_suite_names();
    } else {
        names.push_back(which);
    }

    std::vector<SuiteResult> results;
    bool all_pass = true;
    for (const auto& name : names) {
        SuiteResult r = run_verify_suite(name, opt);
        all_pass = all_pass && r.pass;
        std::ostringstream line;
        line << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.seconds << " s)";
        std::cout << line.str() << '\n';
        for (const auto& n : r.notes) std::cout << "    " << n << '\n';
        for (const auto& w : r.witnesses) std::cout << "    witness: " << w << '\n';
        results.push_back(std::move(r));
    }

    if (!g.out.empty()) {
        std::ofstream file(g.out);
        if (!file) throw Error("cannot open output file " + g.out);
        file << suite_results_to_json(results).dump(2) << '\n';
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"medium-scale curvature on Cayley graphs"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("CURV_CACHE_DIR")) g.cache_dir = env;

    auto add_common = [&](CLI::App* cmd, bool needs_group) {
        if (needs_group) {
            cmd->add_option("--group", g.group, "group shorthand, inline JSON, or descriptor file");
            cmd->add_option("--graph-file", g.graph_file, "RAAG adjacency list file");
        }
        cmd->add_option("--format", g.format, "output format: table|csv|json")
            ->check(CLI::IsMember({"table", "csv", "json"}));
        cmd->add_option("--out", g.out, "write output to file instead of stdout");
        cmd->add_option("--mem-limit", g.mem_limit, "ball table element budget");
        cmd->add_option("--threads", g.threads, "worker threads for census sweeps");
        cmd->add_option("--seed", g.seed, "seed for randomized sweeps");
        cmd->add_option("--cache-dir", g.cache_dir,
                        "ball table cache directory (env CURV_CACHE_DIR)");
    };

    auto* eval = app.add_subcommand("eval", "curvature of given elements");
    std::vector<std::string> words, coords;
    std::string variant = "sphere";
    int r = 1, eval_radius = -1;
    eval->add_option("--word", words, "element as a word in the generators (repeatable)");
    eval->add_option("--coords", coords, "element as coordinates, e.g. 5,1,3 (repeatable)");
    eval->add_option("--variant", variant, "sphere|ball|transport")
        ->check(CLI::IsMember({"sphere", "ball", "transport"}));
    eval->add_option("--r", r, "comparison radius (default 1)");
    eval->add_option("--radius", eval_radius, "force a table radius");
    add_common(eval, true);

    auto* census = app.add_subcommand("census", "sign census and average curvature per radius");
    int census_radius = 6;
    census->add_option("--radius", census_radius, "largest ball radius")->required();
    add_common(census, true);

    auto* flux = app.add_subcommand("flux", "shell flux table (c_n, k_n) and identities");
    int n_max = 3;
    flux->add_option("--n-max", n_max, "largest annulus index")->required();
    add_common(flux, true);

    auto* verify = app.add_subcommand("verify", "run named verification suites");
    std::string which = "all";
    verify->add_option("suite", which, "suite name or 'all'");
    add_common(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(g, words, coords, variant, r, eval_radius);
        if (census->parsed()) return cmd_census(g, census_radius);
        if (flux->parsed()) return cmd_flux(g, n_max);
        if (verify->parsed()) return cmd_verify(g, which);
    } catch (const MemoryBudgetExceeded& e) {
        std::cerr << "resource budget: " << e.what() << '\n';
        return 3;
    } catch (const SolverBudgetExceeded& e) {
        std::cerr << "resource budget: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
