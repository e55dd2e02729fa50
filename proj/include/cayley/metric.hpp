#pragma once

#include "cayley/ball.hpp"
#include "cayley/group.hpp"

#include <memory>
#include <vector>

namespace cayley {

// Word-length access for one (G, S): BFS table plus closed-form dispatch.
// Immutable after construction; cheap to share by const reference.
class Metric {
public:
    Metric(OraclePtr g, int table_radius, const BuildOptions& opt = {});

    const GroupOracle& group() const { return *g_; }
    const OraclePtr& group_ptr() const { return g_; }
    int table_radius() const { return table_.radius; }
    const BallTable& table() const { return table_; }

    // True when lengths up to `need` can be answered exactly.
    bool covers_length(long long need) const {
        return g_->has_closed_length() || need <= table_.radius;
    }

    // Exact word length; closed form preferred, table fallback.
    // Throws OutOfTable when neither source covers g.
    long long length(const Element& g) const;

    // d(x, y) = |x^-1 y|; left-invariant by construction.
    long long distance(const Element& x, const Element& y) const;

    const std::vector<Element>& sphere(int r) const;
    long long ball_size(int r) const { return table_.ball_size(r); }

    // Elements of B_r in deterministic (shell, key) order.
    std::vector<Element> ball(int r) const;

private:
    OraclePtr g_;
    BallTable table_;
};

long long word_length(const Metric& m, const Element& g);
long long distance(const Metric& m, const Element& x, const Element& y);

} // namespace cayley
