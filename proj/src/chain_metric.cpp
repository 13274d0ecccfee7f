#include "fixlab/chain_metric.hpp"

#include <cmath>

#include "fixlab/exact_sum.hpp"

namespace fixlab {

ExtDist ExtDist::of(double v) {
    if (std::isnan(v) || v < 0.0) throw Error::domain("extended distance must be >= 0");
    ExtDist e;
    e.v_ = v;
    return e;
}

ExtDist ExtDist::operator+(ExtDist other) const {
    ExtDist e;
    e.v_ = v_ + other.v_;  // IEEE: inf + finite = inf
    return e;
}

bool ChainMetric::all_finite() const {
    for (const ExtDist& v : e_)
        if (v.is_infinite()) return false;
    return true;
}

ComparabilityGraph comparability_graph(const OrderedMetricSpace& space) {
    const std::size_t n = space.size();
    ComparabilityGraph g;
    g.n = n;
    g.adj.resize(n);
    for (PointId a = 0; a < n; ++a) {
        for (PointId b = a + 1; b < n; ++b) {
            if (!comparable(space, a, b)) continue;
            const double w = space.d(a, b);
            g.edges.push_back({a, b, w});
            g.adj[a].emplace_back(b, w);
            g.adj[b].emplace_back(a, w);
        }
    }
    return g;
}

ChainComponents chain_components(const OrderedMetricSpace& space) {
    const ComparabilityGraph g = comparability_graph(space);
    const std::size_t n = space.size();
    ChainComponents cc;
    cc.component.assign(n, n);
    std::vector<PointId> stack;
    for (PointId s = 0; s < n; ++s) {
        if (cc.component[s] != n) continue;
        const std::size_t id = cc.count++;
        cc.component[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            const PointId u = stack.back();
            stack.pop_back();
            for (const auto& [v, w] : g.adj[u]) {
                if (cc.component[v] == n) {
                    cc.component[v] = id;
                    stack.push_back(v);
                }
            }
        }
    }
    return cc;
}

namespace {

// A candidate chain length: exact sum of edge weights plus its rounded value.
struct PathLen {
    bool finite = false;
    ExactSum sum;
    double approx = std::numeric_limits<double>::infinity();
};

// True when `cand = a + b` provably cannot beat `cur` (double-only bound).
// Near-ties fall through to the exact comparison.
bool provably_not_better(double a, double b, double cur) {
    const double s = a + b;
    double lb = s;
    for (int i = 0; i < 4; ++i) lb = std::nextafter(lb, -std::numeric_limits<double>::infinity());
    double ub = cur;
    for (int i = 0; i < 4; ++i) ub = std::nextafter(ub, std::numeric_limits<double>::infinity());
    return lb > ub;
}

std::vector<ExtDist> to_ext(const std::vector<PathLen>& cells, std::size_t n) {
    std::vector<ExtDist> e(n * n, ExtDist::infinity());
    for (std::size_t idx = 0; idx < cells.size(); ++idx)
        if (cells[idx].finite) e[idx] = ExtDist::of(cells[idx].approx);
    return e;
}

}  // namespace

ChainMetric chain_metric(const OrderedMetricSpace& space) {
    const std::size_t n = space.size();
    const ComparabilityGraph g = comparability_graph(space);

    std::vector<PathLen> cell(n * n);
    for (PointId i = 0; i < n; ++i) {
        cell[i * n + i].finite = true;
        cell[i * n + i].approx = 0.0;
    }
    for (const auto& edge : g.edges) {
        PathLen p;
        p.finite = true;
        p.sum.add(edge.weight);
        p.approx = p.sum.round();
        cell[edge.a * n + edge.b] = p;
        cell[edge.b * n + edge.a] = std::move(p);
    }

    // Floyd-Warshall with exact sums; relaxations decided on the exact value.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || !cell[i * n + k].finite) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (j == k || !cell[k * n + j].finite) continue;
                PathLen& cur = cell[i * n + j];
                const PathLen& left = cell[i * n + k];
                const PathLen& right = cell[k * n + j];
                if (cur.finite && provably_not_better(left.approx, right.approx, cur.approx))
                    continue;
                ExactSum cand = left.sum;
                cand.add(right.sum);
                if (!cur.finite || cand < cur.sum) {
                    cur.finite = true;
                    cur.sum = cand;
                    cur.approx = cur.sum.round();
                    cell[j * n + i] = cur;
                }
            }
        }
    }
    return ChainMetric(n, to_ext(cell, n));
}

ChainMetric brute_force_chain_metric(const OrderedMetricSpace& space, std::size_t cap) {
    const std::size_t n = space.size();
    if (n > cap) throw Error::space_too_large(n, cap);
    const ComparabilityGraph g = comparability_graph(space);

    std::vector<PathLen> cell(n * n);
    for (PointId i = 0; i < n; ++i) {
        cell[i * n + i].finite = true;
        cell[i * n + i].approx = 0.0;
    }

    // DFS over all simple chains from each source; every completed prefix
    // ending at t is one candidate chain from s to t.
    std::vector<ExactSum> prefix(n + 1);
    std::vector<bool> on_path(n, false);
    for (PointId s = 0; s < n; ++s) {
        struct Frame {
            PointId node;
            std::size_t next_edge;
        };
        std::vector<Frame> stack;
        stack.push_back({s, 0});
        on_path[s] = true;
        std::size_t depth = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next_edge < g.adj[f.node].size()) {
                const auto [v, w] = g.adj[f.node][f.next_edge++];
                if (on_path[v]) continue;
                prefix[depth + 1] = prefix[depth];
                prefix[depth + 1].add(w);
                ++depth;
                PathLen& best = cell[s * n + v];
                if (!best.finite || prefix[depth] < best.sum) {
                    best.finite = true;
                    best.sum = prefix[depth];
                    best.approx = best.sum.round();
                }
                on_path[v] = true;
                stack.push_back({v, 0});
            } else {
                on_path[f.node] = false;
                stack.pop_back();
                if (depth > 0) --depth;
            }
        }
    }
    return ChainMetric(n, to_ext(cell, n));
}

}  // namespace fixlab
