#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fixlab/chain_metric.hpp"
#include "fixlab/contraction.hpp"
#include "fixlab/picard.hpp"
#include "fixlab/space.hpp"

namespace fixlab {

/// The data (X, d, <=, T) under test, with the interned point names.
struct Instance {
    Instance(OrderedMetricSpace space, SelfMap map, std::vector<std::string> names,
             std::string label = {}, std::optional<std::uint64_t> seed = {});

    std::size_t size() const { return space.size(); }

    OrderedMetricSpace space;
    SelfMap map;
    std::vector<std::string> names;  // one per point, unique
    std::string label;
    std::optional<std::uint64_t> seed;
};

enum class HypStatus { holds, fails, auto_satisfied, not_applicable };

std::string_view hyp_status_name(HypStatus status);

struct HypothesisEntry {
    std::string id;
    HypStatus status = HypStatus::holds;
    std::string note;
    std::optional<PairWitness> witness;

    bool ok() const { return status == HypStatus::holds || status == HypStatus::auto_satisfied; }
};

struct HypothesisReport {
    std::vector<HypothesisEntry> entries;

    bool all_hold() const;
    const HypothesisEntry* find(std::string_view id) const;
};

struct TheoremReport {
    std::string theorem;  // "T1", "T2", "T5"
    HypothesisReport hypotheses;
    bool conclusion = false;
    bool soundness_alarm = false;  // hypotheses all hold yet the conclusion fails
    ContractionReport contraction;
    OperatorClassification classification;
    std::optional<double> alpha_used;  // T5: the grid alpha adopted for (c03)
};

TheoremReport validate_theorem1(const Instance& instance, double eps_val = kDefaultTolerance);

TheoremReport validate_theorem2(const Instance& instance, double eps_val = kDefaultTolerance);

/// T5 at a fixed alpha, or over the grid {0.1,...,0.9} when alpha is
/// not given (first passing alpha is adopted).
TheoremReport validate_theorem5(const Instance& instance, std::optional<double> alpha = {},
                                double eps_val = kDefaultTolerance);

inline std::vector<double> theorem5_alpha_grid() {
    return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
}

/// Proposition 1: build e, transfer the contraction factor, and certify that
/// the ordered contraction is a plain Banach contraction under e.
struct ReduceResult {
    std::optional<std::string> blocked_on;  // failing Theorem 2 hypothesis, if any
    ChainMetric e;
    ContractionReport d_report;
    ContractionReport e_report;
    bool reduction_verdict = false;
};

ReduceResult reduce_to_banach(const Instance& instance, double eps_val = kDefaultTolerance);

enum class OrderModel { total, random_dag, lattice, antichain };
enum class MetricModel { line, embedding, random_repaired };
enum class MapModel { constant, monotone_rejection, random_map };

std::string_view order_model_name(OrderModel m);
std::string_view metric_model_name(MetricModel m);
std::string_view map_model_name(MapModel m);

struct GenConfig {
    std::size_t n = 4;
    OrderModel order_model = OrderModel::random_dag;
    double dag_edge_prob = 0.3;
    MetricModel metric_model = MetricModel::line;
    std::size_t embed_dim = 2;
    Norm embed_norm = Norm::euclidean;
    MapModel map_model = MapModel::random_map;
    double alpha_target = 0.8;
    std::size_t retry_budget = 10000;

    std::string describe() const;
};

/// Deterministic in (config, seed); two calls yield identical instances.
Instance generate_instance(const GenConfig& config, std::uint64_t seed);

enum class TheoremId { T1, T2, T5 };

std::string_view theorem_name(TheoremId id);

/// Hypothesis ids accepted by --drop for each theorem.
std::vector<std::string> theorem_hypotheses(TheoremId id);

struct SearchWitness {
    Instance instance;
    std::string dropped_hypothesis;
    std::string violated_conclusion;
    TheoremReport evidence;
};

struct SearchResult {
    std::vector<SearchWitness> witnesses;
    std::size_t instances_tried = 0;
    std::size_t instances_eligible = 0;  // passed the all-but-dropped filter
    std::vector<std::string> alarms;     // soundness alarms seen (drop = "none")
};

/// Probes necessity of one hypothesis: generates instances satisfying every
/// hypothesis except possibly the dropped one and returns those where the
/// conclusion fails. Witnesses are re-validated before being returned.
/// Instance i derives its seed as base_seed XOR i.
SearchResult search_counterexamples(TheoremId theorem, const std::string& drop,
                                    std::size_t budget, std::uint64_t base_seed,
                                    std::size_t n_min = 3, std::size_t n_max = 6,
                                    double eps_val = kDefaultTolerance);

}  // namespace fixlab
