#include "cayley/transport.hpp"

#include "cayley/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace cayley {

TransportInstance make_transport_instance(const Metric& m, const Element& x, const Element& y,
                                          int r) {
    const auto& G = m.group();
    if (r > m.table_radius()) {
        throw OutOfTable("transport radius " + std::to_string(r) + " exceeds table radius " +
                         std::to_string(m.table_radius()));
    }
    const long long d = m.distance(x, y);
    if (!m.covers_length(d + 2 * r)) {
        throw OutOfTable("transport at distance " + std::to_string(d) +
                         " needs length coverage " + std::to_string(d + 2 * r));
    }

    TransportInstance inst;
    for (const Element& w : m.ball(r)) {
        inst.source.push_back(G.multiply(x, w));
        inst.target.push_back(G.multiply(y, w));
    }
    const std::size_t n = inst.source.size();
    inst.cost.assign(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inst.cost[i][j] = m.distance(inst.source[i], inst.target[j]);
        }
    }
    return inst;
}

long long solve_assignment(const std::vector<std::vector<long long>>& cost) {
    const int n = static_cast<int>(cost.size());
    if (n == 0) return 0;
    constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

    // 1-based with a dummy row/column; p[j] = row matched to column j.
    std::vector<long long> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<long long> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = -1;
            long long delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                long long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    long long total = 0;
    for (int j = 1; j <= n; ++j) total += cost[p[j] - 1][j - 1];
    return total;
}

long long solve_assignment_brute_force(const std::vector<std::vector<long long>>& cost) {
    const int n = static_cast<int>(cost.size());
    if (n > 9) throw Error("brute-force assignment limited to n <= 9");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long best = std::numeric_limits<long long>::max();
    do {
        long long total = 0;
        for (int i = 0; i < n; ++i) total += cost[i][perm[i]];
        best = std::min(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n == 0 ? 0 : best;
}

Rational transport_distance(const Metric& m, const Element& x, const Element& y, int r,
                            std::size_t budget) {
    const auto ball = static_cast<std::size_t>(m.ball_size(r));
    if (r <= m.table_radius() && ball > budget) {
        throw SolverBudgetExceeded("transport instance size " + std::to_string(ball) +
                                   " exceeds budget " + std::to_string(budget));
    }
    TransportInstance inst = make_transport_instance(m, x, y, r);
    long long optimum = solve_assignment(inst.cost);
    return Rational(BigInt(optimum), BigInt(static_cast<long long>(inst.source.size())));
}

Rational kappa_transport(const Metric& m, const Element& g, int r, std::size_t budget) {
    if (g == m.group().identity()) {
        throw UndefinedAtIdentity("kappa_transport(e) is undefined (0/0)");
    }
    const long long d = m.length(g);
    Rational t = transport_distance(m, m.group().identity(), g, r, budget);
    return (Rational(d) - t) / Rational(d);
}

} // namespace cayley
