#pragma once

#include <optional>
#include <vector>

#include "fixlab/chain_metric.hpp"
#include "fixlab/space.hpp"

namespace fixlab {

enum class ContractionKind { ordered_d, global_e, suzuki_F, weak_G, comparison_profile };

std::string_view contraction_kind_name(ContractionKind kind);

struct PairWitness {
    PointId x = 0, y = 0;
    double lhs = 0.0, rhs = 0.0;
};

struct ContractionReport {
    ContractionKind kind = ContractionKind::ordered_d;
    ExtDist alpha_star;  // best factor found; +inf if some eligible ratio is infinite
    std::size_t eligible_pairs = 0;
    bool verdict = false;
    std::optional<double> alpha_queried;
    std::optional<PairWitness> witness;   // present whenever verdict is false
    std::optional<PairWitness> extremal;  // pair attaining alpha_star
    bool extended_regime = false;         // global_e only: +inf entries were present
    double tolerance = kDefaultTolerance;

    /// alpha_star <= alpha + tolerance, and not in the extended regime.
    bool passes_at(double alpha) const;
};

enum class Monotonicity { increasing, decreasing, neither, both };

std::string_view monotonicity_name(Monotonicity m);

/// Extremal factor of d(Tx,Ty)/d(x,y) over ordered pairs x <= y, x != y.
/// Verdict: alpha_star < 1 (the map is (d,<=)-contractive).
ContractionReport ordered_contraction_factor(const OrderedMetricSpace& space, const SelfMap& map,
                                             double eps_val = kDefaultTolerance);

/// Extremal factor over all pairs, under a plain metric or a chain metric.
/// Infinite e(x,y) imposes no ratio constraint but flags the extended regime;
/// finite e(x,y) with infinite e(Tx,Ty) makes alpha_star infinite.
ContractionReport global_contraction_factor(const FiniteMetric& metric, const SelfMap& map,
                                            double eps_val = kDefaultTolerance);
ContractionReport global_contraction_factor(const ChainMetric& metric, const SelfMap& map,
                                            double eps_val = kDefaultTolerance);

Monotonicity is_monotone(const OrderedMetricSpace& space, const SelfMap& map);

/// (b02): every comparable pair maps to a comparable pair.
bool is_comparability_increasing(const OrderedMetricSpace& space, const SelfMap& map);

/// Suzuki threshold function: 1 on [0,(sqrt5-1)/2], (1-t)/t^2 up to 1/sqrt2,
/// then 1/(1+t). Continuous and nonincreasing.
double suzuki_F(double t);

/// G(t) = 1/(1+t) for t > 0; decreasing onto (0,1).
double suzuki_G(double t);

/// (c02) checked verbatim over all directed pairs x != y:
/// F(alpha)*d(x,Tx) <= d(x,y) + eps implies d(Tx,Ty) <= alpha*d(x,y) + eps.
ContractionReport check_conditional_F_contractive(const OrderedMetricSpace& space,
                                                  const SelfMap& map, double alpha,
                                                  double eps_val = kDefaultTolerance);

/// Premise reading for (c03). The text uses d(y,Tx) in both max arguments;
/// dual_y swaps the second to d(y,Ty) for side-by-side comparison.
enum class WeakGPremise { verbatim, dual_y };

/// (c03) over directed comparable pairs x != y:
/// G(alpha)*max{d(x,Tx), d(y,Tx)} <= d(x,y) + eps implies
/// d(Tx,Ty) <= alpha*d(x,y) + eps.
ContractionReport check_weak_conditional_G_contractive(const OrderedMetricSpace& space,
                                                       const SelfMap& map, double alpha,
                                                       double eps_val = kDefaultTolerance,
                                                       WeakGPremise premise = WeakGPremise::verbatim);

/// Smallest grid alpha at which the chosen check passes, refined by one
/// bisection step. Grid search only; feasibility is not monotone in alpha
/// for the conditional kinds, so no global-minimality claim is made.
std::optional<double> minimal_alpha(const OrderedMetricSpace& space, const SelfMap& map,
                                    ContractionKind kind, double grid_step = 1e-3,
                                    double eps_val = kDefaultTolerance);

/// Right-continuous nondecreasing step function; value is values[i] on
/// [breakpoints[i], breakpoints[i+1]) and 0 before the first breakpoint.
class StepFunction {
public:
    StepFunction(std::vector<double> breakpoints, std::vector<double> values);

    double eval(double t) const;
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }
    bool nondecreasing() const;

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
};

/// The comparison profile f(t) = max{d(Tx,Ty) : x <= y, d(x,y) <= t},
/// with breakpoints at the ordered-pair distances.
StepFunction comparison_profile(const OrderedMetricSpace& space, const SelfMap& map);

struct PropertyPResult {
    bool verdict = false;
    std::vector<std::size_t> iterations;  // per sample, applications of f until below tol
    bool matkowski_ok = true;             // f(t) < t held at every sample (checked when verdict)
};

/// Property (P): iterating f from each sample falls below tol. When it does,
/// additionally asserts the Matkowski consequence f(t) < t at every sample.
PropertyPResult check_property_P(const StepFunction& f, const std::vector<double>& samples,
                                 std::size_t max_iters = 10000, double tol = 1e-9);

}  // namespace fixlab
