#include "cayley/census.hpp"

#include "cayley/errors.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace cayley {

namespace {

void require_coverage(const Metric& m, long long need, const char* what) {
    if (!m.covers_length(need)) {
        throw OutOfTable(std::string(what) + " needs length coverage " + std::to_string(need) +
                         " but table radius is " + std::to_string(m.table_radius()));
    }
}

// Flat view of B_n in (shell, key) order.
std::vector<const Element*> ball_view(const Metric& m, int n) {
    std::vector<const Element*> out;
    out.reserve(static_cast<std::size_t>(m.ball_size(n)));
    for (int s = 0; s <= n; ++s) {
        for (const Element& e : m.sphere(s)) out.push_back(&e);
    }
    return out;
}

// Contiguous chunks over [0, count); per-chunk states merged in chunk order,
// so results do not depend on the worker count.
template <typename State, typename Work>
std::vector<State> chunked_run(std::size_t count, int threads, Work work) {
    int n = std::max(1, threads);
    n = static_cast<int>(std::min<std::size_t>(n, std::max<std::size_t>(count, 1)));
    std::vector<State> states(n);
    if (n == 1) {
        for (std::size_t i = 0; i < count; ++i) work(states[0], i);
        return states;
    }
    std::vector<std::thread> pool;
    for (int c = 0; c < n; ++c) {
        std::size_t begin = count * c / n;
        std::size_t end = count * (c + 1) / n;
        pool.emplace_back([&, c, begin, end] {
            for (std::size_t i = begin; i < end; ++i) work(states[c], i);
        });
    }
    for (auto& t : pool) t.join();
    return states;
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

SignCensus sign_census(const Metric& m, int n, int threads) {
    require_coverage(m, n + 2, "sign_census");
    auto view = ball_view(m, n);

    struct Counts {
        long long pos = 0, zero = 0, neg = 0;
    };
    auto states = chunked_run<Counts>(view.size(), threads, [&](Counts& st, std::size_t i) {
        if (*view[i] == m.group().identity()) return;
        int s = kappa_sign(m, *view[i]);
        if (s > 0) ++st.pos;
        else if (s < 0) ++st.neg;
        else ++st.zero;
    });

    SignCensus out;
    out.n = n;
    out.ball_size = static_cast<long long>(view.size());
    for (const auto& st : states) {
        out.positive += st.pos;
        out.zero += st.zero;
        out.negative += st.neg;
    }
    out.prop_positive = Rational(BigInt(out.positive), BigInt(out.ball_size));
    out.prop_zero = Rational(BigInt(out.zero), BigInt(out.ball_size));
    out.prop_negative = Rational(BigInt(out.negative), BigInt(out.ball_size));
    return out;
}

Rational average_kappa(const Metric& m, int n, int threads) {
    require_coverage(m, n + 2, "average_kappa");
    const long long gens = m.group().genset_size();

    // Within shell s every kappa has denominator s*|S|, so per-shell integer
    // sums of (s*|S| - conjugate sum) carry the whole computation exactly.
    auto view = ball_view(m, n);
    using ShellSums = std::vector<long long>;
    auto states = chunked_run<ShellSums>(view.size(), threads, [&](ShellSums& st, std::size_t i) {
        const Element& g = *view[i];
        if (g == m.group().identity()) return; // kappa(e) := 0 convention
        if (st.empty()) st.assign(n + 1, 0);
        long long len = m.length(g);
        st[static_cast<std::size_t>(len)] += len * gens - conjugate_length_sum(m, g);
    });

    Rational total = 0;
    for (int s = 1; s <= n; ++s) {
        long long sum = 0;
        for (const auto& st : states) {
            if (!st.empty()) sum += st[static_cast<std::size_t>(s)];
        }
        if (sum != 0) total += Rational(BigInt(sum), BigInt(s * gens));
    }
    return total / Rational(m.ball_size(n));
}

bool damping_bound_holds(const Metric& m, int n, int k, const Rational& average) {
    if (k < 1 || k >= n) throw Error("damping bound needs 1 <= k < n");
    Rational bn(m.ball_size(n));
    Rational bk(m.ball_size(k));
    Rational bound = (2 * bk + Rational(2, k) * (bn - bk)) / bn;
    Rational mag = average < 0 ? -average : average;
    return mag <= bound;
}

// ---- Heisenberg sector ----------------------------------------------------

bool heisenberg_predictor_region(long long A, long long B, long long C) {
    // A >= 5 keeps a full period of remainders inside low height, which is
    // what the three-case table is stated for.
    return A >= 5 && A > B && B > 0 && C > 0 && C <= A * A - A * B && A <= 5 * B && 5 * B < 2 * A;
}

int heisenberg_lowheight_predict(long long A, long long B, long long C) {
    if (!heisenberg_predictor_region(A, B, C)) {
        throw OutsideRegion(
            "predictor region is A >= 5, A > B > 0, C > 0, C <= A^2-AB, A/5 <= B < 2A/5");
    }
    long long r = C % A;
    if (r == 0) return -1;          // multiples of A: negative
    if (r <= B) return 1;           // Case 1
    if (r <= A - B) return 0;       // Case 3
    return -1;                      // Case 2: A-B < r <= A-1
}

namespace {

long long square_gap(long long v) {
    auto s = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return std::min(v - s * s, (s + 1) * (s + 1) - v);
}

} // namespace

SectorReport heisenberg_sector_verify(const Metric& heis, int n, int threads) {
    require_coverage(heis, n + 2, "heisenberg_sector_verify");
    auto view = ball_view(heis, n);

    struct St {
        long long checked = 0, mismatches = 0;
        long long high_checked = 0, high_nonzero = 0, high_max_gap = -1;
        std::vector<std::string> witnesses;
    };
    auto states = chunked_run<St>(view.size(), threads, [&](St& st, std::size_t i) {
        const Element& g = *view[i];
        const long long A = g.payload[0], B = g.payload[1], C = g.payload[2];
        if (heisenberg_predictor_region(A, B, C)) {
            ++st.checked;
            int predicted = heisenberg_lowheight_predict(A, B, C);
            int actual = kappa_sign(heis, g);
            if (predicted != actual) {
                ++st.mismatches;
                if (st.witnesses.size() < 16) {
                    st.witnesses.push_back("(" + std::to_string(A) + "," + std::to_string(B) +
                                           "," + std::to_string(C) + "): predicted " +
                                           std::to_string(predicted) + ", actual " +
                                           std::to_string(actual));
                }
            }
        }
        if (A > B && B > 0 && C > 0 && C >= A * A - A * B) {
            ++st.high_checked;
            if (kappa_sign(heis, g) != 0) {
                ++st.high_nonzero;
                st.high_max_gap = std::max(st.high_max_gap, square_gap(C + A * B));
            }
        }
    });

    SectorReport out;
    for (const auto& st : states) {
        out.checked += st.checked;
        out.mismatches += st.mismatches;
        out.high_checked += st.high_checked;
        out.high_nonzero += st.high_nonzero;
        out.high_max_gap = std::max(out.high_max_gap, st.high_max_gap);
        for (const auto& w : st.witnesses) {
            if (out.witnesses.size() < 16) out.witnesses.push_back(w);
        }
    }
    return out;
}

// ---- zero-curvature generating sets ---------------------------------------

ZeroGenReport zero_gen_equivalence(const Metric& m) {
    require_coverage(m, 3, "zero_gen_equivalence");
    const auto& G = m.group();
    ZeroGenReport out;
    out.av_all_one = true;
    out.conjugation_closed = true;

    std::unordered_map<Element, int, ElementHash> genset_elements;
    for (int i = 0; i < G.genset_size(); ++i) genset_elements.emplace(G.generator(i), i);

    for (int a = 0; a < G.genset_size(); ++a) {
        Rational av = avg_conj_length(m, G.generator(a));
        if (av != 1) {
            out.av_all_one = false;
            if (out.witnesses.size() < 8) {
                out.witnesses.push_back("Av(" + G.generators().labels[a] + ") = " +
                                        to_fraction_string(av));
            }
        }
        for (int s = 0; s < G.genset_size(); ++s) {
            Element c = G.conjugate(G.generator(a), G.generator(s));
            if (!genset_elements.count(c)) {
                out.conjugation_closed = false;
                if (out.witnesses.size() < 8) {
                    out.witnesses.push_back(G.generators().labels[s] + "^-1 " +
                                            G.generators().labels[a] + " " +
                                            G.generators().labels[s] + " = " + G.format(c) +
                                            " (length " + std::to_string(m.length(c)) +
                                            ") is outside S");
                }
            }
        }
    }
    return out;
}

// ---- shell flux -------------------------------------------------------------

ShellFlux shell_flux(const Metric& m, int n_max) {
    if (n_max < 0) throw Error("shell_flux needs n_max >= 0");
    const int need = 2 * n_max + 3;
    if (m.table_radius() < need) {
        throw OutOfTable("shell_flux(n_max=" + std::to_string(n_max) + ") needs table radius " +
                         std::to_string(need));
    }
    const auto& G = m.group();
    const long long gens = G.genset_size();

    // Length if determined by closed form or the table; nullopt means
    // "longer than the table radius".
    auto try_length = [&](const Element& e) -> std::optional<long long> {
        if (G.has_closed_length()) return *G.closed_length(e);
        return m.table().find(e);
    };

    ShellFlux out;
    out.n_max = n_max;
    out.c.assign(2 * n_max + 2, 0);
    out.k.assign(n_max + 2, 0);

    for (int n = 0; n <= 2 * n_max + 1; ++n) {
        long long cn = 0;
        for (const Element& g : m.sphere(n)) {
            cn += n * gens - conjugate_length_sum(m, g);
        }
        out.c[static_cast<std::size_t>(n)] = cn;
    }

    for (int j = 0; j <= n_max + 1; ++j) {
        long long kj = 0;
        for (int shell : {2 * j, 2 * j + 1}) {
            for (const Element& g : m.sphere(shell)) {
                for (int s = 0; s < gens; ++s) {
                    Element c = G.conjugate(g, G.generator(s));
                    auto len = try_length(c);
                    if (!len) continue; // beyond the table: certainly not in A_{j-1}
                    if (j >= 1 && (*len == 2 * (j - 1) || *len == 2 * (j - 1) + 1)) {
                        kj += shell - *len;
                    }
                }
            }
        }
        out.k[static_cast<std::size_t>(j)] = kj;
    }

    // Identity (i), dual route: the rational kappa path must reproduce the
    // integer pair sums. kappa(e) is undefined; S_0 contributes c_0 = 0.
    out.c_identity_ok = true;
    for (int n = 0; n <= 2 * n_max + 1; ++n) {
        Rational rhs = 0;
        if (n > 0) {
            Rational sum = 0;
            for (const Element& g : m.sphere(n)) sum += kappa(m, g);
            rhs = Rational(n) * Rational(BigInt(gens), BigInt(1)) * sum;
        }
        if (rhs != Rational(out.c[static_cast<std::size_t>(n)])) {
            out.c_identity_ok = false;
            out.witnesses.push_back("c_" + std::to_string(n) + " = " +
                                    std::to_string(out.c[static_cast<std::size_t>(n)]) +
                                    " but n|S| sum kappa = " + to_fraction_string(rhs));
        }
    }

    out.k_identity_ok = true;
    for (int j = 0; j <= n_max; ++j) {
        long long lhs = out.c[static_cast<std::size_t>(2 * j)] +
                        out.c[static_cast<std::size_t>(2 * j + 1)];
        long long rhs = out.k[static_cast<std::size_t>(j)] - out.k[static_cast<std::size_t>(j + 1)];
        if (lhs != rhs) {
            out.k_identity_ok = false;
            out.witnesses.push_back("c_" + std::to_string(2 * j) + "+c_" +
                                    std::to_string(2 * j + 1) + " = " + std::to_string(lhs) +
                                    " but k_" + std::to_string(j) + "-k_" +
                                    std::to_string(j + 1) + " = " + std::to_string(rhs));
        }
    }

    // Diagnostic: when kappa > 0 across a whole annulus, the proof's bound
    // |S_2n| <= k_n <= 2|S||A_n| should pin k_n.
    for (int j = 0; j <= n_max; ++j) {
        bool all_positive = true;
        long long annulus = 0;
        for (int shell : {2 * j, 2 * j + 1}) {
            for (const Element& g : m.sphere(shell)) {
                ++annulus;
                if (g == G.identity() || kappa_sign(m, g) <= 0) {
                    all_positive = false;
                    break;
                }
            }
            if (!all_positive) break;
        }
        if (all_positive && annulus > 0) {
            long long s2n = static_cast<long long>(m.sphere(2 * j).size());
            long long kj = out.k[static_cast<std::size_t>(j)];
            bool bound = s2n <= kj && kj <= 2 * gens * annulus;
            out.positive_annulus_notes.push_back(
                "A_" + std::to_string(j) + ": kappa > 0 throughout; |S_2n| = " +
                std::to_string(s2n) + ", k_n = " + std::to_string(kj) + ", 2|S||A_n| = " +
                std::to_string(2 * gens * annulus) + (bound ? " (bound holds)" : " (BOUND FAILS)"));
        }
    }
    return out;
}

// ---- products ----------------------------------------------------------------

Rational product_av(const Metric& m1, const Metric& m2, const Element& x, const Element& y) {
    const long long s1 = m1.group().genset_size();
    const long long s2 = m2.group().genset_size();
    Rational avx = avg_conj_length(m1, x);
    Rational avy = avg_conj_length(m2, y);
    Rational num = Rational(s1) * avx + Rational(s1) * Rational(m2.length(y)) +
                   Rational(s2) * Rational(m1.length(x)) + Rational(s2) * avy;
    return num / Rational(s1 + s2);
}

// ---- embeddings ----------------------------------------------------------------

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

int smallest_admissible_degree(int genset_size, EmbedMode mode, int max_degree) {
    for (int n = mode == EmbedMode::Pos ? 4 : 3; n <= max_degree; ++n) {
        if (mode == EmbedMode::Pos) {
            if (-factorial(n) + 2LL * n + 2LL * genset_size < 0) return n;
        } else {
            if (2LL * n - 2 - 2LL * genset_size > 0) return n;
        }
    }
    return -1;
}

EmbeddingReport embedding_check(const OraclePtr& g, int degree, EmbedMode mode, int radius) {
    const int s = g->genset_size();
    if (mode == EmbedMode::Pos) {
        long long v = -factorial(degree) + 2LL * degree + 2LL * s;
        if (!(v < 0)) {
            throw ConditionNotMet("pos mode needs -n! + 2n + 2|S| < 0; got " + std::to_string(v));
        }
    } else {
        long long v = 2LL * degree - 2 - 2LL * s;
        if (!(v > 0)) {
            throw ConditionNotMet("neg mode needs 2n - 2 - 2|S| > 0; got " + std::to_string(v));
        }
    }

    auto symm = make_symmetric(degree, mode == EmbedMode::Pos ? SymmetricMode::Pos
                                                              : SymmetricMode::Neg);
    Metric symm_metric(symm, 3);
    const Element sigma = symmetric_ncycle(degree);
    const long long sigma_len = symm_metric.length(sigma);

    Metric base_metric(g, radius);
    auto prod = make_product(g, symm);
    Metric pm(prod, static_cast<int>(radius + sigma_len + 2));

    EmbeddingReport out;
    out.degree = degree;
    out.sigma_length = sigma_len;
    out.isometric_ok = true;
    out.sign_ok = true;
    out.defect_ok = true;

    const int want = mode == EmbedMode::Pos ? 1 : -1;
    for (const Element& x : base_metric.ball(radius)) {
        Element ix = product_pair(*prod, x, sigma);
        ++out.checked;
        if (pm.length(ix) != base_metric.length(x) + sigma_len) {
            out.isometric_ok = false;
            if (out.witnesses.size() < 8) {
                out.witnesses.push_back("|i(" + g->format(x) + ")| = " +
                                        std::to_string(pm.length(ix)) + " != |g| + |sigma|");
            }
        }
        if (kappa_sign(pm, ix) != want) {
            out.sign_ok = false;
            if (out.witnesses.size() < 8) {
                out.witnesses.push_back("kappa(i(" + g->format(x) + ")) = " +
                                        to_fraction_string(kappa(pm, ix)));
            }
        }
    }

    const long long limit = mode == EmbedMode::Pos ? 2 : 1;
    for (const Element& x : base_metric.ball(radius / 2)) {
        for (const Element& h : base_metric.ball(radius / 2)) {
            Element lhs = product_pair(*prod, g->multiply(x, h), sigma);
            Element rhs = prod->multiply(product_pair(*prod, x, sigma),
                                         product_pair(*prod, h, sigma));
            if (pm.distance(lhs, rhs) > limit) {
                out.defect_ok = false;
                if (out.witnesses.size() < 8) {
                    out.witnesses.push_back("defect d(i(gh), i(g)i(h)) = " +
                                            std::to_string(pm.distance(lhs, rhs)) + " at g = " +
                                            g->format(x) + ", h = " + g->format(h));
                }
            }
        }
    }
    return out;
}

NegEmbedReport negembed_homomorphic_check(const OraclePtr& g, int rank, int radius) {
    const int t = g->genset_size();
    if (!(2 * rank > t)) {
        throw ConditionNotMet("negatively curved free-product embedding needs rank > |T|/2");
    }
    auto h = make_free_product_free(g, rank);
    Metric base_metric(g, radius);
    Metric hm(h, h->has_closed_length() ? radius : radius + 2);

    NegEmbedReport out;
    out.isometry_ok = true;
    out.sign_ok = true;

    for (const Element& x : base_metric.ball(radius)) {
        Element ix = free_product_embed(*h, x);
        if (hm.length(ix) != base_metric.length(x)) {
            out.isometry_ok = false;
            if (out.witnesses.size() < 8) {
                out.witnesses.push_back("|phi(" + g->format(x) + ")| = " +
                                        std::to_string(hm.length(ix)));
            }
        }
    }
    for (const Element& x : hm.ball(radius)) {
        if (x == h->identity()) continue;
        ++out.checked;
        if (kappa_sign(hm, x) >= 0) {
            out.sign_ok = false;
            if (out.witnesses.size() < 8) {
                out.witnesses.push_back("kappa(" + h->format(x) + ") = " +
                                        to_fraction_string(kappa(hm, x)));
            }
        }
    }
    return out;
}

// ---- normal cyclic subgroups ----------------------------------------------------

NormalCyclicReport zhaszeroes_check(const Metric& m, const Element& z, int n) {
    const auto& G = m.group();
    if (z == G.identity()) throw Error("zhaszeroes_check needs z != e");

    // Precompute z^j for |j| <= n + 2 to decide membership in <z>.
    const int window = n + 2;
    std::unordered_map<Element, int, ElementHash> power_index;
    Element zt = G.identity();
    for (int j = 0; j <= window; ++j) {
        power_index.emplace(zt, j);
        zt = G.multiply(zt, z);
    }
    Element zi = G.identity();
    const Element z_inv = G.inverse(z);
    for (int j = 0; j >= -window; --j) {
        power_index.emplace(zi, j);
        zi = G.multiply(zi, z_inv);
    }

    NormalCyclicReport out;
    out.normal_ok = true;
    out.zero_ok = true;

    Element zk = G.identity();
    for (int k = 1; k <= n; ++k) {
        zk = G.multiply(zk, z);
        for (int s = 0; s < G.genset_size(); ++s) {
            Element c = G.conjugate(zk, G.generator(s));
            if (!power_index.count(c)) {
                out.normal_ok = false;
                if (out.witnesses.size() < 8) {
                    out.witnesses.push_back(G.generators().labels[s] + "^-1 z^" +
                                            std::to_string(k) + " " + G.generators().labels[s] +
                                            " = " + G.format(c) + " is outside <z>");
                }
            }
        }
        auto len = G.has_closed_length() ? G.closed_length(zk) : m.table().find(zk);
        if (!len || !m.covers_length(*len + 2)) break; // stop at coverage limit
        ++out.checked;
        if (kappa_sign(m, zk) != 0) {
            out.zero_ok = false;
            if (out.witnesses.size() < 8) {
                out.witnesses.push_back("kappa(z^" + std::to_string(k) + ") = " +
                                        to_fraction_string(kappa(m, zk)));
            }
        }
    }
    return out;
}

} // namespace cayley
