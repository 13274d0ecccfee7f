#include "fixlab/space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fixlab {

FiniteMetric validate_metric(std::size_t n, std::span<const double> row_major, double eps_val) {
    if (n == 0) throw Error::bad_instance("metric needs at least one point");
    if (row_major.size() != n * n)
        throw Error::bad_instance("metric matrix is not " + std::to_string(n) + "x" +
                                  std::to_string(n));

    std::vector<double> d(row_major.begin(), row_major.end());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = d[i * n + j];
            if (!std::isfinite(v) || v < 0.0) {
                if (std::isfinite(v)) throw Error::negative_distance(i, j);
                throw Error::bad_instance("non-finite distance at (" + std::to_string(i) + "," +
                                          std::to_string(j) + ")");
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (d[i * n + i] != 0.0) throw Error::nonzero_diagonal(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (d[i * n + j] != d[j * n + i]) throw Error::asymmetric(i, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (d[i * n + j] <= 0.0) throw Error::zero_distance_distinct(i, j);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const double defect = d[i * n + k] - (d[i * n + j] + d[j * n + k]);
                if (defect > eps_val) throw Error::triangle_violation(i, k, j, defect);
            }
        }
    }
    return FiniteMetric(n, std::move(d));
}

FiniteMetric validate_metric(const std::vector<std::vector<double>>& matrix, double eps_val) {
    const std::size_t n = matrix.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& row : matrix) {
        if (row.size() != n) throw Error::bad_instance("metric matrix is not square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return validate_metric(n, flat, eps_val);
}

namespace {

double norm_distance(std::span<const double> a, std::span<const double> b, Norm norm) {
    switch (norm) {
        case Norm::euclidean: {
            double s = 0.0;
            for (std::size_t k = 0; k < a.size(); ++k) {
                const double diff = a[k] - b[k];
                s += diff * diff;
            }
            return std::sqrt(s);
        }
        case Norm::manhattan: {
            double s = 0.0;
            for (std::size_t k = 0; k < a.size(); ++k) s += std::abs(a[k] - b[k]);
            return s;
        }
        case Norm::chebyshev: {
            double s = 0.0;
            for (std::size_t k = 0; k < a.size(); ++k) s = std::max(s, std::abs(a[k] - b[k]));
            return s;
        }
    }
    throw Error::domain("unknown norm");
}

}  // namespace

FiniteMetric metric_from_embedding(const std::vector<std::vector<double>>& coords, Norm norm,
                                   double eps_val) {
    const std::size_t n = coords.size();
    if (n == 0) throw Error::bad_instance("embedding needs at least one point");
    const std::size_t dim = coords[0].size();
    if (dim == 0) throw Error::bad_instance("embedding dimension must be >= 1");
    for (const auto& row : coords) {
        if (row.size() != dim) throw Error::bad_instance("embedding rows have mixed dimensions");
        for (double c : row)
            if (!std::isfinite(c)) throw Error::bad_instance("non-finite coordinate");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coords[i] == coords[j]) throw Error::duplicate_point(i, j);

    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = norm_distance(coords[i], coords[j], norm);
            d[i * n + j] = v;
            d[j * n + i] = v;
        }
    }
    return validate_metric(n, d, eps_val);
}

OrderRelation close_order(std::span<const std::pair<PointId, PointId>> pairs, std::size_t n,
                          OrderKind kind) {
    if (n == 0) throw Error::bad_instance("order needs at least one point");
    std::vector<unsigned char> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (const auto& [a, b] : pairs) {
        if (a >= n || b >= n)
            throw Error::bad_instance("order pair (" + std::to_string(a) + "," +
                                      std::to_string(b) + ") out of range");
        leq[a * n + b] = 1;
    }
    // Warshall closure.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (!leq[i * n + k]) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (leq[k * n + j]) leq[i * n + j] = 1;
        }
    if (kind == OrderKind::partial) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (leq[i * n + j] && leq[j * n + i]) throw Error::antisymmetry_violation(i, j);
    }
    return OrderRelation(n, std::move(leq), kind);
}

std::vector<std::pair<PointId, PointId>> OrderRelation::strict_pairs() const {
    std::vector<std::pair<PointId, PointId>> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (i != j && leq(i, j)) out.emplace_back(i, j);
    return out;
}

OrderedMetricSpace::OrderedMetricSpace(FiniteMetric metric_in, OrderRelation order_in)
    : metric(std::move(metric_in)), order(std::move(order_in)) {
    if (metric.size() != order.size())
        throw Error::bad_instance("metric and order sizes differ");
}

SelfMap::SelfMap(std::size_t n, std::vector<PointId> image_in) : image(std::move(image_in)) {
    if (image.size() != n) throw Error::bad_instance("map is not total over the point set");
    for (PointId y : image)
        if (y >= n) throw Error::bad_instance("map image out of range");
}

bool comparable(const OrderedMetricSpace& space, PointId x, PointId y) {
    require_point(space, x);
    require_point(space, y);
    return space.leq(x, y) || space.leq(y, x);
}

void require_point(const OrderedMetricSpace& space, PointId x) {
    if (x >= space.size()) throw Error::unknown_point("id " + std::to_string(x));
}

}  // namespace fixlab
