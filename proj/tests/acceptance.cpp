// Acceptance suite: one line per criterion, exact values, pinned runtime
// budgets. Exits nonzero if any criterion fails.

#include "cayley/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace {

using cayley::SuiteResult;
using cayley::VerifyOptions;

struct Criterion {
    int id;
    std::string label;
    double budget_seconds;
    std::vector<std::string> suites;
};

// Each criterion is backed by one or more verification suites; the suites
// hold the exact tolerances (all equalities are exact rationals).
const std::vector<Criterion> kCriteria = {
    {1, "free-group Av and kappa formulas on B_6, F_2 and F_3", 5, {"free-groups"}},
    {2, "F_2 x Z: kappa(a) = -2/3, ball identity, ball-value discrepancy reported", 1, {"f2xz"}},
    {3, "Symm(n) sign manipulation, n = 4,5,6, incl. Av(sigma) = 26/21", 60, {"symm-sign"}},
    {4, "Heisenberg closed-form length = BFS on its region up to length 14", 60,
     {"heisenberg-metric"}},
    {5, "Heisenberg census at n = 14,16: all three signs >= |B_n|/200; sector predictor exact",
     300, {"heisenberg-census", "heisenberg-sector"}},
    {6, "RAAG dichotomy on 7 graphs over B_5", 120, {"raag-dichotomy"}},
    {7, "virtually abelian suite: Z^2 x| Z/6 exact values, va genset zeros, D_inf", 120,
     {"va-genset"}},
    {8, "Laplacian identity exact on 500+ sampled points", 30, {"laplacian"}},
    {9, "product formula vs direct averages on 200 random pairs", 30, {"product-formula"}},
    {10, "transport dominance and solver-vs-brute-force equality", 120, {"transport-dominance"}},
    {11, "embeddings into G x Symm(n) at smallest admissible n; G * F_n", 180, {"embeddings"}},
    {12, "shell-flux identities on F_2, D_inf, Heisenberg, Z^2 x| Z/6", 120, {"shell-flux"}},
    {13, "damping bound for all k < n; F_2 average matches closed form", 60, {"damping"}},
    {14, "all verification suites pass within the 10-minute budget", 600, {}},
};

} // namespace

int main() {
    VerifyOptions opt;
    int failures = 0;
    double total_seconds = 0;

    std::vector<SuiteResult> all_results;
    for (const auto& criterion : kCriteria) {
        bool pass = true;
        double seconds = 0;
        std::vector<std::string> witnesses;

        std::vector<std::string> notes;
        if (criterion.id == 14) {
            // Run the full registry, as `verify all` does.
            auto start = std::chrono::steady_clock::now();
            for (const auto& name : cayley::verify_suite_names()) {
                SuiteResult r = cayley::run_verify_suite(name, opt);
                pass = pass && r.pass;
                for (const auto& w : r.witnesses) witnesses.push_back(name + ": " + w);
            }
            seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        } else {
            for (const auto& name : criterion.suites) {
                SuiteResult r = cayley::run_verify_suite(name, opt);
                seconds += r.seconds;
                pass = pass && r.pass;
                for (const auto& w : r.witnesses) witnesses.push_back(w);
                for (const auto& n : r.notes) notes.push_back(n);
                all_results.push_back(std::move(r));
            }
        }

        bool in_budget = seconds < criterion.budget_seconds;
        bool ok = pass && in_budget;
        failures += ok ? 0 : 1;
        total_seconds += seconds;

        std::printf("[%s] criterion %2d: %s (%.2f s / budget %.0f s)\n", ok ? "PASS" : "FAIL",
                    criterion.id, criterion.label.c_str(), seconds, criterion.budget_seconds);
        for (const auto& n : notes) std::printf("         %s\n", n.c_str());
        if (!pass) {
            for (const auto& w : witnesses) std::printf("         witness: %s\n", w.c_str());
        }
        if (!in_budget) {
            std::printf("         runtime %.2f s exceeded the %.0f s budget\n", seconds,
                        criterion.budget_seconds);
        }
    }

    std::printf("%d/%zu criteria passed (%.2f s total)\n",
                static_cast<int>(kCriteria.size()) - failures, kCriteria.size(), total_seconds);
    return failures == 0 ? 0 : 1;
}
