#include "fixlab/contraction.hpp"

#include <algorithm>
#include <cmath>

namespace fixlab {

std::string_view contraction_kind_name(ContractionKind kind) {
    switch (kind) {
        case ContractionKind::ordered_d: return "ordered_d";
        case ContractionKind::global_e: return "global_e";
        case ContractionKind::suzuki_F: return "suzuki_F";
        case ContractionKind::weak_G: return "weak_G";
        case ContractionKind::comparison_profile: return "comparison_profile";
    }
    return "?";
}

std::string_view monotonicity_name(Monotonicity m) {
    switch (m) {
        case Monotonicity::increasing: return "increasing";
        case Monotonicity::decreasing: return "decreasing";
        case Monotonicity::neither: return "neither";
        case Monotonicity::both: return "both";
    }
    return "?";
}

bool ContractionReport::passes_at(double alpha) const {
    if (extended_regime) return false;
    if (alpha_star.is_infinite()) return false;
    return alpha_star.value() <= alpha + tolerance;
}

ContractionReport ordered_contraction_factor(const OrderedMetricSpace& space, const SelfMap& map,
                                             double eps_val) {
    const std::size_t n = space.size();
    ContractionReport r;
    r.kind = ContractionKind::ordered_d;
    r.tolerance = eps_val;
    double best = 0.0;
    for (PointId x = 0; x < n; ++x) {
        for (PointId y = 0; y < n; ++y) {
            if (x == y || !space.leq(x, y)) continue;
            ++r.eligible_pairs;
            const double ratio = space.d(map(x), map(y)) / space.d(x, y);
            if (!r.extremal || ratio > best) {
                best = ratio;
                r.extremal = PairWitness{x, y, space.d(map(x), map(y)), space.d(x, y)};
            }
        }
    }
    r.alpha_star = ExtDist::of(best);
    r.verdict = best < 1.0;
    if (!r.verdict) r.witness = r.extremal;
    return r;
}

namespace {

template <typename Dist>
ContractionReport global_factor_impl(std::size_t n, Dist dist, const SelfMap& map,
                                     double eps_val) {
    ContractionReport r;
    r.kind = ContractionKind::global_e;
    r.tolerance = eps_val;
    ExtDist best = ExtDist::of(0.0);
    for (PointId x = 0; x < n; ++x) {
        for (PointId y = x + 1; y < n; ++y) {
            const ExtDist dxy = dist(x, y);
            if (dxy.is_infinite()) {
                r.extended_regime = true;
                continue;  // no ratio constraint from an infinite pair
            }
            ++r.eligible_pairs;
            const ExtDist dTxy = dist(map(x), map(y));
            ExtDist ratio = dTxy.is_infinite()
                                ? ExtDist::infinity()
                                : ExtDist::of(dxy.value() > 0.0 ? dTxy.value() / dxy.value() : 0.0);
            if (!r.extremal || best < ratio) {
                best = ratio;
                r.extremal = PairWitness{x, y, dTxy.value(), dxy.value()};
            }
        }
    }
    r.alpha_star = best;
    r.verdict = !r.extended_regime && !best.is_infinite() && best.value() < 1.0;
    if (!r.verdict) r.witness = r.extremal;
    return r;
}

}  // namespace

ContractionReport global_contraction_factor(const FiniteMetric& metric, const SelfMap& map,
                                            double eps_val) {
    if (metric.size() != map.size()) throw Error::bad_instance("metric and map sizes differ");
    return global_factor_impl(
        metric.size(), [&](PointId i, PointId j) { return ExtDist::of(metric(i, j)); }, map,
        eps_val);
}

ContractionReport global_contraction_factor(const ChainMetric& metric, const SelfMap& map,
                                            double eps_val) {
    if (metric.size() != map.size()) throw Error::bad_instance("metric and map sizes differ");
    return global_factor_impl(
        metric.size(), [&](PointId i, PointId j) { return metric(i, j); }, map, eps_val);
}

Monotonicity is_monotone(const OrderedMetricSpace& space, const SelfMap& map) {
    const std::size_t n = space.size();
    bool inc = true, dec = true;
    for (PointId x = 0; x < n && (inc || dec); ++x) {
        for (PointId y = 0; y < n && (inc || dec); ++y) {
            if (!space.leq(x, y)) continue;
            if (!space.leq(map(x), map(y))) inc = false;
            if (!space.leq(map(y), map(x))) dec = false;
        }
    }
    if (inc && dec) return Monotonicity::both;
    if (inc) return Monotonicity::increasing;
    if (dec) return Monotonicity::decreasing;
    return Monotonicity::neither;
}

bool is_comparability_increasing(const OrderedMetricSpace& space, const SelfMap& map) {
    const std::size_t n = space.size();
    for (PointId x = 0; x < n; ++x)
        for (PointId y = x + 1; y < n; ++y)
            if (comparable(space, x, y) && !comparable(space, map(x), map(y))) return false;
    return true;
}

double suzuki_F(double t) {
    if (t < 0.0 || std::isnan(t)) throw Error::domain("suzuki_F needs t >= 0");
    static const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    if (t <= golden) return 1.0;
    if (t <= inv_sqrt2) return (1.0 - t) / (t * t);
    return 1.0 / (1.0 + t);
}

double suzuki_G(double t) {
    if (!(t > 0.0)) throw Error::domain("suzuki_G needs t > 0");
    return 1.0 / (1.0 + t);
}

ContractionReport check_conditional_F_contractive(const OrderedMetricSpace& space,
                                                  const SelfMap& map, double alpha,
                                                  double eps_val) {
    if (alpha < 0.0 || alpha >= 1.0) throw Error::domain("conditional F check needs alpha in [0,1)");
    const std::size_t n = space.size();
    ContractionReport r;
    r.kind = ContractionKind::suzuki_F;
    r.tolerance = eps_val;
    r.alpha_queried = alpha;
    r.verdict = true;
    const double f = suzuki_F(alpha);
    double best = 0.0;
    for (PointId x = 0; x < n; ++x) {
        for (PointId y = 0; y < n; ++y) {
            if (x == y) continue;
            const double dxy = space.d(x, y);
            if (f * space.d(x, map(x)) > dxy + eps_val) continue;  // premise fails
            ++r.eligible_pairs;
            const double lhs = space.d(map(x), map(y));
            const double ratio = lhs / dxy;
            if (!r.extremal || ratio > best) {
                best = ratio;
                r.extremal = PairWitness{x, y, lhs, alpha * dxy};
            }
            if (r.verdict && lhs > alpha * dxy + eps_val) {
                r.verdict = false;
                r.witness = PairWitness{x, y, lhs, alpha * dxy};
            }
        }
    }
    r.alpha_star = ExtDist::of(best);
    return r;
}

ContractionReport check_weak_conditional_G_contractive(const OrderedMetricSpace& space,
                                                       const SelfMap& map, double alpha,
                                                       double eps_val, WeakGPremise premise) {
    if (alpha <= 0.0 || alpha >= 1.0)
        throw Error::domain("weak conditional G check needs alpha in (0,1)");
    const std::size_t n = space.size();
    ContractionReport r;
    r.kind = ContractionKind::weak_G;
    r.tolerance = eps_val;
    r.alpha_queried = alpha;
    r.verdict = true;
    const double g = suzuki_G(alpha);
    double best = 0.0;
    for (PointId x = 0; x < n; ++x) {
        for (PointId y = 0; y < n; ++y) {
            if (x == y || !comparable(space, x, y)) continue;
            const double dxy = space.d(x, y);
            const double second =
                premise == WeakGPremise::verbatim ? space.d(y, map(x)) : space.d(y, map(y));
            if (g * std::max(space.d(x, map(x)), second) > dxy + eps_val) continue;
            ++r.eligible_pairs;
            const double lhs = space.d(map(x), map(y));
            const double ratio = lhs / dxy;
            if (!r.extremal || ratio > best) {
                best = ratio;
                r.extremal = PairWitness{x, y, lhs, alpha * dxy};
            }
            if (r.verdict && lhs > alpha * dxy + eps_val) {
                r.verdict = false;
                r.witness = PairWitness{x, y, lhs, alpha * dxy};
            }
        }
    }
    r.alpha_star = ExtDist::of(best);
    return r;
}

namespace {

bool alpha_check_passes(const OrderedMetricSpace& space, const SelfMap& map, ContractionKind kind,
                        double alpha, double eps_val) {
    switch (kind) {
        case ContractionKind::ordered_d:
            return ordered_contraction_factor(space, map, eps_val).passes_at(alpha);
        case ContractionKind::global_e:
            return global_contraction_factor(chain_metric(space), map, eps_val).passes_at(alpha);
        case ContractionKind::suzuki_F:
            return check_conditional_F_contractive(space, map, alpha, eps_val).verdict;
        case ContractionKind::weak_G:
            return check_weak_conditional_G_contractive(space, map, alpha, eps_val).verdict;
        case ContractionKind::comparison_profile:
            throw Error::domain("comparison_profile is not alpha-parameterized");
    }
    return false;
}

}  // namespace

std::optional<double> minimal_alpha(const OrderedMetricSpace& space, const SelfMap& map,
                                    ContractionKind kind, double grid_step, double eps_val) {
    if (!(grid_step > 0.0) || grid_step >= 1.0) throw Error::domain("grid_step must be in (0,1)");
    double prev_fail = 0.0;
    bool have_prev_fail = false;
    const auto steps = static_cast<std::size_t>(std::floor((1.0 - grid_step / 2) / grid_step));
    for (std::size_t i = 1; i <= steps; ++i) {
        const double alpha = static_cast<double>(i) * grid_step;
        if (alpha >= 1.0) break;
        if (alpha_check_passes(space, map, kind, alpha, eps_val)) {
            if (!have_prev_fail) return alpha;
            const double mid = (prev_fail + alpha) / 2.0;
            if (mid > 0.0 && alpha_check_passes(space, map, kind, mid, eps_val)) return mid;
            return alpha;
        }
        prev_fail = alpha;
        have_prev_fail = true;
    }
    return std::nullopt;
}

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.size() != values_.size())
        throw Error::domain("step function needs one value per breakpoint");
    if (!std::is_sorted(breakpoints_.begin(), breakpoints_.end()))
        throw Error::domain("step function breakpoints must be ascending");
    for (double v : values_)
        if (v < 0.0) throw Error::domain("step function values must be nonnegative");
}

double StepFunction::eval(double t) const {
    // value of the last breakpoint <= t; 0 before the first
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    if (it == breakpoints_.begin()) return 0.0;
    return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

bool StepFunction::nondecreasing() const {
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] < values_[i - 1]) return false;
    return true;
}

StepFunction comparison_profile(const OrderedMetricSpace& space, const SelfMap& map) {
    const std::size_t n = space.size();
    std::vector<std::pair<double, double>> pts;  // (d(x,y), d(Tx,Ty)) over x <= y, x != y
    for (PointId x = 0; x < n; ++x)
        for (PointId y = 0; y < n; ++y)
            if (x != y && space.leq(x, y)) pts.emplace_back(space.d(x, y), space.d(map(x), map(y)));
    std::sort(pts.begin(), pts.end());

    std::vector<double> breaks, values;
    double running = 0.0;
    for (const auto& [t, v] : pts) {
        running = std::max(running, v);
        if (!breaks.empty() && breaks.back() == t)
            values.back() = running;
        else {
            breaks.push_back(t);
            values.push_back(running);
        }
    }
    return StepFunction(std::move(breaks), std::move(values));
}

PropertyPResult check_property_P(const StepFunction& f, const std::vector<double>& samples,
                                 std::size_t max_iters, double tol) {
    if (!f.nondecreasing()) throw Error(errc::non_monotone_profile, "NonMonotoneProfile");
    PropertyPResult result;
    result.verdict = true;
    for (double t0 : samples) {
        if (!(t0 > 0.0)) throw Error::domain("property (P) samples must be > 0");
        double t = t0;
        std::size_t iters = 0;
        while (t >= tol && iters < max_iters) {
            t = f.eval(t);
            ++iters;
        }
        result.iterations.push_back(iters);
        if (t >= tol) result.verdict = false;
    }
    if (result.verdict) {
        for (double t0 : samples)
            if (!(f.eval(t0) < t0)) result.matkowski_ok = false;
    }
    return result;
}

}  // namespace fixlab
