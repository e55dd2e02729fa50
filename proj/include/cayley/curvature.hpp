#pragma once

#include "cayley/metric.hpp"
#include "cayley/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace cayley {

// Av(g) = (1/|S|) sum over a in S of |a^-1 g a|. Requires coverage |g|+2
// (conjugation moves length by at most 2); the bound is enforced, not
// documented away.
Rational avg_conj_length(const Metric& m, const Element& g);

// kappa(g) = (|g| - Av(g)) / |g|; undefined at the identity.
Rational kappa(const Metric& m, const Element& g);

// Sign of kappa without rational arithmetic: sign(|S|*|g| - sum of
// conjugate lengths). Used by census sweeps.
int kappa_sign(const Metric& m, const Element& g);

// Radius-r comparison distances: average of d(xw, yw) over w in the sphere
// (ball) of radius r. The ball includes e, so B_1 averages |S|+1 points and
// B_1 = (d + |S|*S_1) / (|S|+1).
Rational spherical_comparison(const Metric& m, const Element& x, const Element& y, int r);
Rational ball_comparison(const Metric& m, const Element& x, const Element& y, int r);

enum class CompareMode { Sphere, Ball };

// kappa^S_r / kappa^B_r at (e, g).
Rational kappa_r(const Metric& m, const Element& g, int r, CompareMode mode);

struct LaplacianCheck {
    Rational kappa_times_f;  // kappa(x) * f_x(x)
    Rational laplacian;      // f_x(x) - mean of f_x over Cayley neighbors of x
    bool equal = false;
};

// f_x(y) = |y^-1 x y| on the neighbors y = xa; checks the exact identity
// kappa(x) * f_x(x) = (grad f_x)(x).
LaplacianCheck graph_laplacian_check(const Metric& m, const Element& x);

// Neighbors of g in the automorphic Cayley graph for inner automorphisms:
// {u^-1 g u : u in conjugators}, in input order, duplicates kept.
std::vector<Element> automorphic_graph_neighbors(const GroupOracle& g,
                                                 std::span<const Element> conjugators,
                                                 const Element& x);

struct CurvatureReport {
    std::string element;
    long long length = 0;
    Rational av;
    Rational kappa;
    int sign = 0; // -1, 0, +1
};

CurvatureReport curvature_report(const Metric& m, const Element& g);

} // namespace cayley
