#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "fixlab/errors.hpp"

namespace fixlab {

using PointId = std::size_t;

inline constexpr double kDefaultTolerance = 1e-9;

enum class Norm { euclidean, manhattan, chebyshev };
enum class OrderKind { quasi, partial };

/// A validated metric on a finite point set: symmetric, zero diagonal,
/// positive off-diagonal, triangle inequality within the validation
/// tolerance. Construct through validate_metric or metric_from_embedding.
class FiniteMetric {
public:
    std::size_t size() const { return n_; }
    double operator()(PointId i, PointId j) const { return d_[i * n_ + j]; }

    std::span<const double> row_major() const { return d_; }

private:
    friend FiniteMetric validate_metric(std::size_t n, std::span<const double> row_major,
                                        double eps_val);
    FiniteMetric(std::size_t n, std::vector<double> d) : n_(n), d_(std::move(d)) {}

    std::size_t n_ = 0;
    std::vector<double> d_;
};

/// Reflexive-transitive relation over a finite point set; antisymmetric in
/// partial mode. Construct through close_order.
class OrderRelation {
public:
    std::size_t size() const { return n_; }
    OrderKind kind() const { return kind_; }
    bool leq(PointId i, PointId j) const { return leq_[i * n_ + j] != 0; }

    /// The pair set of the relation minus reflexivity, lexicographic.
    std::vector<std::pair<PointId, PointId>> strict_pairs() const;

private:
    friend OrderRelation close_order(std::span<const std::pair<PointId, PointId>> pairs,
                                     std::size_t n, OrderKind kind);
    OrderRelation(std::size_t n, std::vector<unsigned char> leq, OrderKind kind)
        : n_(n), leq_(std::move(leq)), kind_(kind) {}

    std::size_t n_ = 0;
    std::vector<unsigned char> leq_;
    OrderKind kind_ = OrderKind::partial;
};

struct OrderedMetricSpace {
    OrderedMetricSpace(FiniteMetric metric, OrderRelation order);

    std::size_t size() const { return metric.size(); }
    double d(PointId i, PointId j) const { return metric(i, j); }
    bool leq(PointId i, PointId j) const { return order.leq(i, j); }

    FiniteMetric metric;
    OrderRelation order;
};

/// A total self-map on the point set; image[i] is T(i).
struct SelfMap {
    SelfMap(std::size_t n, std::vector<PointId> image);

    std::size_t size() const { return image.size(); }
    PointId operator()(PointId i) const { return image[i]; }

    std::vector<PointId> image;
};

/// Checks the four metric axioms on a square matrix and returns the metric.
/// Throws a structured Error naming the first violated axiom otherwise.
FiniteMetric validate_metric(std::size_t n, std::span<const double> row_major,
                             double eps_val = kDefaultTolerance);
FiniteMetric validate_metric(const std::vector<std::vector<double>>& matrix,
                             double eps_val = kDefaultTolerance);

/// Metric induced by a norm on coordinate rows. Rejects duplicate rows
/// (they would break sufficiency).
FiniteMetric metric_from_embedding(const std::vector<std::vector<double>>& coords,
                                   Norm norm = Norm::euclidean,
                                   double eps_val = kDefaultTolerance);

/// Reflexive-transitive closure of the given pairs (first <= second).
/// In partial mode a 2-cycle between distinct points is rejected.
OrderRelation close_order(std::span<const std::pair<PointId, PointId>> pairs, std::size_t n,
                          OrderKind kind);

/// x <> y: x <= y or y <= x. Reflexive and symmetric, not transitive in general.
bool comparable(const OrderedMetricSpace& space, PointId x, PointId y);

void require_point(const OrderedMetricSpace& space, PointId x);

}  // namespace fixlab
