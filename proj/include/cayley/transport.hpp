#pragma once

#include "cayley/metric.hpp"
#include "cayley/rational.hpp"

#include <vector>

namespace cayley {

// Uniform-measure optimal transport between B_r(x) and B_r(y): equal point
// counts (vertex transitivity), so the L1 Wasserstein distance reduces to a
// min-cost perfect assignment on exact integer distances.
struct TransportInstance {
    std::vector<Element> source; // x * w for w in B_r
    std::vector<Element> target; // y * w for w in B_r
    std::vector<std::vector<long long>> cost; // cost[i][j] = d(source[i], target[j])
};

TransportInstance make_transport_instance(const Metric& m, const Element& x, const Element& y,
                                          int r);

// Exact min-cost perfect assignment (potentials / shortest augmenting path,
// O(n^3)); integer costs in, integer optimum out.
long long solve_assignment(const std::vector<std::vector<long long>>& cost);

// Exhaustive permutation enumeration; the independence oracle for the
// solver. n <= 9.
long long solve_assignment_brute_force(const std::vector<std::vector<long long>>& cost);

inline constexpr std::size_t kDefaultSolverBudget = 1024;

// T_r(x,y) = (min assignment cost) / |B_r| as an exact rational.
// Throws SolverBudgetExceeded when |B_r| > budget.
Rational transport_distance(const Metric& m, const Element& x, const Element& y, int r,
                            std::size_t budget = kDefaultSolverBudget);

// kappa^T_r(g) = (|g| - T_r(e,g)) / |g|.
Rational kappa_transport(const Metric& m, const Element& g, int r,
                         std::size_t budget = kDefaultSolverBudget);

} // namespace cayley
