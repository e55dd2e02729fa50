#include "cayley/metric.hpp"

#include "cayley/errors.hpp"

namespace cayley {

Metric::Metric(OraclePtr g, int table_radius, const BuildOptions& opt)
    : g_(std::move(g)), table_(build_ball(*g_, table_radius, opt)) {}

long long Metric::length(const Element& g) const {
    if (g_->has_closed_length()) {
        return *g_->closed_length(g);
    }
    auto found = table_.find(g);
    if (!found) {
        throw OutOfTable("length of " + g_->format(g) + " exceeds table radius " +
                         std::to_string(table_.radius) + " in " + g_->describe());
    }
    return *found;
}

long long Metric::distance(const Element& x, const Element& y) const {
    return length(g_->multiply(g_->inverse(x), y));
}

const std::vector<Element>& Metric::sphere(int r) const {
    if (r < 0 || r > table_.radius) {
        throw OutOfTable("sphere radius " + std::to_string(r) + " exceeds table radius " +
                         std::to_string(table_.radius));
    }
    return table_.shells[r];
}

std::vector<Element> Metric::ball(int r) const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(ball_size(r)));
    for (int s = 0; s <= r; ++s) {
        const auto& shell = sphere(s);
        out.insert(out.end(), shell.begin(), shell.end());
    }
    return out;
}

long long word_length(const Metric& m, const Element& g) { return m.length(g); }

long long distance(const Metric& m, const Element& x, const Element& y) {
    return m.distance(x, y);
}

} // namespace cayley
