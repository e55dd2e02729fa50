#include "cayley/curvature.hpp"

#include "cayley/errors.hpp"

namespace cayley {

namespace {

void require_coverage(const Metric& m, long long need, const char* what) {
    if (!m.covers_length(need)) {
        throw OutOfTable(std::string(what) + " needs length coverage " + std::to_string(need) +
                         " but table radius is " + std::to_string(m.table_radius()) + " in " +
                         m.group().describe());
    }
}

long long conjugate_length_sum(const Metric& m, const Element& g) {
    const auto& G = m.group();
    long long sum = 0;
    for (int i = 0; i < G.genset_size(); ++i) {
        sum += m.length(G.conjugate(g, G.generator(i)));
    }
    return sum;
}

} // namespace

Rational avg_conj_length(const Metric& m, const Element& g) {
    const long long len = m.length(g);
    require_coverage(m, len + 2, "avg_conj_length");
    return Rational(BigInt(conjugate_length_sum(m, g)), BigInt(m.group().genset_size()));
}

Rational kappa(const Metric& m, const Element& g) {
    if (g == m.group().identity()) {
        throw UndefinedAtIdentity("kappa(e) is undefined (0/0)");
    }
    const long long len = m.length(g);
    Rational av = avg_conj_length(m, g);
    return (Rational(len) - av) / Rational(len);
}

int kappa_sign(const Metric& m, const Element& g) {
    if (g == m.group().identity()) {
        throw UndefinedAtIdentity("kappa(e) is undefined (0/0)");
    }
    const long long len = m.length(g);
    require_coverage(m, len + 2, "kappa_sign");
    long long diff = m.group().genset_size() * len - conjugate_length_sum(m, g);
    return diff > 0 ? 1 : diff < 0 ? -1 : 0;
}

namespace {

Rational comparison_average(const Metric& m, const Element& x, const Element& y, int r,
                            bool include_interior) {
    const auto& G = m.group();
    if (r < 0) throw Error("comparison radius must be >= 0");
    if (r > m.table_radius()) {
        throw OutOfTable("comparison radius " + std::to_string(r) + " exceeds table radius " +
                         std::to_string(m.table_radius()));
    }
    const long long d = m.distance(x, y);
    require_coverage(m, d + 2 * r, "comparison distance");

    long long total = 0;
    long long count = 0;
    const int lo = include_interior ? 0 : r;
    for (int s = lo; s <= r; ++s) {
        for (const Element& w : m.sphere(s)) {
            total += m.distance(G.multiply(x, w), G.multiply(y, w));
            ++count;
        }
    }
    return Rational(BigInt(total), BigInt(count));
}

} // namespace

Rational spherical_comparison(const Metric& m, const Element& x, const Element& y, int r) {
    return comparison_average(m, x, y, r, /*include_interior=*/false);
}

Rational ball_comparison(const Metric& m, const Element& x, const Element& y, int r) {
    return comparison_average(m, x, y, r, /*include_interior=*/true);
}

Rational kappa_r(const Metric& m, const Element& g, int r, CompareMode mode) {
    if (g == m.group().identity()) {
        throw UndefinedAtIdentity("kappa_r(e) is undefined (0/0)");
    }
    const long long d = m.length(g);
    Rational c = mode == CompareMode::Sphere ? spherical_comparison(m, m.group().identity(), g, r)
                                             : ball_comparison(m, m.group().identity(), g, r);
    return (Rational(d) - c) / Rational(d);
}

LaplacianCheck graph_laplacian_check(const Metric& m, const Element& x) {
    const auto& G = m.group();
    if (x == G.identity()) {
        throw UndefinedAtIdentity("laplacian check needs x != e");
    }
    const long long fx = m.length(x); // f_x(x) = |x^-1 x x| = |x|
    require_coverage(m, fx + 2, "graph_laplacian_check");

    long long neighbor_sum = 0;
    for (int i = 0; i < G.genset_size(); ++i) {
        Element y = G.apply_generator(x, i);
        neighbor_sum += m.length(G.multiply(G.multiply(G.inverse(y), x), y));
    }
    Rational mean(BigInt(neighbor_sum), BigInt(G.genset_size()));

    LaplacianCheck out;
    out.laplacian = Rational(fx) - mean;
    out.kappa_times_f = kappa(m, x) * Rational(fx);
    out.equal = out.kappa_times_f == out.laplacian;
    return out;
}

std::vector<Element> automorphic_graph_neighbors(const GroupOracle& g,
                                                 std::span<const Element> conjugators,
                                                 const Element& x) {
    std::vector<Element> out;
    out.reserve(conjugators.size());
    for (const Element& u : conjugators) {
        out.push_back(g.conjugate(x, u));
    }
    return out;
}

CurvatureReport curvature_report(const Metric& m, const Element& g) {
    CurvatureReport r;
    r.element = m.group().format(g);
    r.length = m.length(g);
    r.av = avg_conj_length(m, g);
    if (g == m.group().identity()) {
        r.kappa = 0; // reported convention; kappa(e) itself is undefined
        r.sign = 0;
    } else {
        r.kappa = kappa(m, g);
        r.sign = sign_of(r.kappa);
    }
    return r;
}

} // namespace cayley
