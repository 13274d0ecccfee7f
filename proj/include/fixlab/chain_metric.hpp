#pragma once

#include <compare>
#include <limits>
#include <vector>

#include "fixlab/space.hpp"

namespace fixlab {

/// Nonnegative distance extended with +inf. The infinite value is an
/// explicit state, never a large finite sentinel; addition saturates.
class ExtDist {
public:
    constexpr ExtDist() = default;

    static constexpr ExtDist infinity() {
        ExtDist e;
        e.v_ = std::numeric_limits<double>::infinity();
        return e;
    }
    static ExtDist of(double v);

    bool is_infinite() const { return std::numeric_limits<double>::infinity() == v_; }
    /// Raw value; +inf when infinite.
    double value() const { return v_; }

    ExtDist operator+(ExtDist other) const;
    auto operator<=>(const ExtDist& other) const = default;

private:
    double v_ = 0.0;
};

/// Undirected graph with an edge {i,j} for every comparable distinct pair,
/// weighted by the space metric on that pair.
struct ComparabilityGraph {
    struct Edge {
        PointId a, b;  // a < b
        double weight;
    };

    std::size_t n = 0;
    std::vector<Edge> edges;                                   // lexicographic by (a, b)
    std::vector<std::vector<std::pair<PointId, double>>> adj;  // neighbor, weight
};

/// Connected components of the comparability graph = the chain equivalence.
struct ChainComponents {
    std::vector<std::size_t> component;  // component index per point, 0-based
    std::size_t count = 0;

    /// Hypothesis (b03): every pair is joined by a chain.
    bool chain_connected() const { return count <= 1; }
};

/// The chain metric e: shortest chain length between points, +inf across
/// chain components. Entries are correctly rounded exact path sums.
class ChainMetric {
public:
    ChainMetric(std::size_t n, std::vector<ExtDist> e) : n_(n), e_(std::move(e)) {}

    std::size_t size() const { return n_; }
    ExtDist operator()(PointId i, PointId j) const { return e_[i * n_ + j]; }

    /// True when no entry is infinite (the (b03) regime).
    bool all_finite() const;

private:
    std::size_t n_;
    std::vector<ExtDist> e_;
};

ComparabilityGraph comparability_graph(const OrderedMetricSpace& space);

ChainComponents chain_components(const OrderedMetricSpace& space);

/// All-pairs shortest chains over the comparability graph.
ChainMetric chain_metric(const OrderedMetricSpace& space);

inline constexpr std::size_t kBruteForceCap = 9;

/// Oracle: minimum over all simple chains between each pair, enumerated
/// exhaustively. Values use the same exact summation as chain_metric, so the
/// two agree bit-for-bit. Rejects spaces larger than the cap.
ChainMetric brute_force_chain_metric(const OrderedMetricSpace& space,
                                     std::size_t cap = kBruteForceCap);

}  // namespace fixlab
