#pragma once

#include "cayley/curvature.hpp"
#include "cayley/metric.hpp"
#include "cayley/rational.hpp"
#include "cayley/zoo.hpp"

#include <string>
#include <vector>

namespace cayley {

// Sign counts over B_n \ {e}; kappa(e) is excluded (0/0) and reported via
// the ball size. Proportions are counts / |B_n|.
struct SignCensus {
    int n = 0;
    long long ball_size = 0;
    long long positive = 0, zero = 0, negative = 0;
    Rational prop_positive, prop_zero, prop_negative;
};

SignCensus sign_census(const Metric& m, int n, int threads = 1);

// (sum of kappa over B_n) / |B_n| under the kappa(e) := 0 convention.
Rational average_kappa(const Metric& m, int n, int threads = 1);

// |average| <= (2|B_k| + (2/k)(|B_n| - |B_k|)) / |B_n|, exact.
bool damping_bound_holds(const Metric& m, int n, int k, const Rational& average);

// ---- Heisenberg sector analysis ----------------------------------------

// Predictor region: A > B > 0, C > 0, C <= A^2 - AB (low height), and the
// sector A/5 <= B < 2A/5.
bool heisenberg_predictor_region(long long A, long long B, long long C);

// Writes C = kA + r and predicts sign(kappa) from r alone:
//   positive for 1 <= r <= B, zero for B < r <= A-B,
//   negative for A-B < r <= A-1 and for r = 0 (multiples of A).
// Throws OutsideRegion outside the region above.
int heisenberg_lowheight_predict(long long A, long long B, long long C);

struct SectorReport {
    long long checked = 0;
    long long mismatches = 0;
    std::vector<std::string> witnesses;
    // High-height diagnostic (not asserted): kappa != 0 points should hug
    // perfect squares of C + AB.
    long long high_checked = 0;
    long long high_nonzero = 0;
    long long high_max_gap = -1; // max distance of C+AB from a square among kappa != 0
    bool ok() const { return mismatches == 0; }
};

// Exhaustive predictor-vs-actual comparison over B_n (needs coverage n+2).
SectorReport heisenberg_sector_verify(const Metric& heis, int n, int threads = 1);

// ---- zero-curvature generating sets ------------------------------------

struct ZeroGenReport {
    bool av_all_one = false;       // Av(a) = 1 for every a in S
    bool conjugation_closed = false; // s^-1 a s in S for all a, s in S
    std::vector<std::string> witnesses;
    bool sides_agree() const { return av_all_one == conjugation_closed; }
};

ZeroGenReport zero_gen_equivalence(const Metric& m);

// ---- shell flux ----------------------------------------------------------

// w_{g,s} = |g| - |s^-1 g s|; c_n sums w over S_n x S; A_n = S_2n ∪ S_2n+1;
// k_n sums w over pairs of A_n x S conjugating into A_{n-1}.
struct ShellFlux {
    int n_max = 0;
    std::vector<long long> c; // c_0 .. c_{2 n_max + 1}
    std::vector<long long> k; // k_0 .. k_{n_max + 1}
    bool c_identity_ok = false; // c_n = n |S| sum_{S_n} kappa, via the rational path
    bool k_identity_ok = false; // c_2n + c_2n+1 = k_n - k_{n+1}
    std::vector<std::string> witnesses;
    std::vector<std::string> positive_annulus_notes; // bound diagnostics when kappa > 0 on A_n
    bool ok() const { return c_identity_ok && k_identity_ok; }
};

// Needs table radius >= 2*n_max + 3.
ShellFlux shell_flux(const Metric& m, int n_max);

// ---- products and embeddings ---------------------------------------------

// Split-genset closed form:
// (|S1| Av(x) + |S1||y| + |S2||x| + |S2| Av(y)) / (|S1| + |S2|).
Rational product_av(const Metric& m1, const Metric& m2, const Element& x, const Element& y);

enum class EmbedMode { Pos, Neg };

// Smallest degree passing the largeness condition for the mode
// (pos: -n! + 2n + 2|S| < 0 and n >= 4; neg: 2n - 2 - 2|S| > 0), or -1.
int smallest_admissible_degree(int genset_size, EmbedMode mode, int max_degree = 8);

struct EmbeddingReport {
    int degree = 0;
    long long sigma_length = 0;
    long long checked = 0;
    bool isometric_ok = false; // |i(g)| = |g| + |sigma| on B_radius(G)
    bool sign_ok = false;      // sign(kappa(i(g))) as promised
    bool defect_ok = false;    // d(i(gh), i(g)i(h)) <= 2 (pos) / 1 (neg)
    std::vector<std::string> witnesses;
    bool ok() const { return isometric_ok && sign_ok && defect_ok; }
};

// i(g) = (g, sigma) into G x Symm(degree) with the split generating set.
// Throws ConditionNotMet when the degree fails the mode's inequality.
EmbeddingReport embedding_check(const OraclePtr& g, int degree, EmbedMode mode, int radius = 4);

struct NegEmbedReport {
    long long checked = 0;
    bool isometry_ok = false; // |phi(g)|_H = |g|_G on B_radius(G)
    bool sign_ok = false;     // kappa(h) < 0 on B_radius(H) \ {e}
    std::vector<std::string> witnesses;
    bool ok() const { return isometry_ok && sign_ok; }
};

// H = G * F_rank with T ∪ U; requires rank > |T|/2 (ConditionNotMet).
NegEmbedReport negembed_homomorphic_check(const OraclePtr& g, int rank, int radius = 4);

// ---- normal cyclic subgroups ----------------------------------------------

struct NormalCyclicReport {
    long long checked = 0;
    bool normal_ok = false; // s^-1 z^k s stays in <z> for all sampled k, s
    bool zero_ok = false;   // kappa(z^k) = 0 for 1 <= k <= n within coverage
    std::vector<std::string> witnesses;
    bool ok() const { return normal_ok && zero_ok; }
};

NormalCyclicReport zhaszeroes_check(const Metric& m, const Element& z, int n);

} // namespace cayley
