#pragma once

#include "cayley/descriptor.hpp"

#include <string>
#include <vector>

namespace cayley {

struct VerifyOptions {
    std::size_t max_elements = 10'000'000;
    int threads = 1;
    unsigned long long seed = 12345;
    std::string cache_dir; // empty: no ball-table cache
};

struct SuiteResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::vector<std::string> notes;     // values and counts worth reading
    std::vector<std::string> witnesses; // failure evidence
};

// raag-dichotomy, heisenberg-sector, symm-sign, va-genset, product-formula,
// laplacian, shell-flux, embeddings, damping, transport-dominance, plus
// free-groups, f2xz, heisenberg-metric, heisenberg-census, zero-gen.
std::vector<std::string> verify_suite_names();

SuiteResult run_verify_suite(const std::string& name, const VerifyOptions& opt);

Json suite_results_to_json(const std::vector<SuiteResult>& results);

} // namespace cayley
