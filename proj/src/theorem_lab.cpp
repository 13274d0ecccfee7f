#include "fixlab/theorem_lab.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "fixlab/rng.hpp"

namespace fixlab {

Instance::Instance(OrderedMetricSpace space_in, SelfMap map_in, std::vector<std::string> names_in,
                   std::string label_in, std::optional<std::uint64_t> seed_in)
    : space(std::move(space_in)),
      map(std::move(map_in)),
      names(std::move(names_in)),
      label(std::move(label_in)),
      seed(seed_in) {
    if (map.size() != space.size()) throw Error::bad_instance("map and space sizes differ");
    if (names.size() != space.size()) throw Error::bad_instance("one name per point required");
    std::set<std::string> unique(names.begin(), names.end());
    if (unique.size() != names.size()) throw Error::bad_instance("point names must be unique");
}

std::string_view hyp_status_name(HypStatus status) {
    switch (status) {
        case HypStatus::holds: return "holds";
        case HypStatus::fails: return "fails";
        case HypStatus::auto_satisfied: return "auto_satisfied";
        case HypStatus::not_applicable: return "not_applicable";
    }
    return "?";
}

bool HypothesisReport::all_hold() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const HypothesisEntry& e) { return e.ok(); });
}

const HypothesisEntry* HypothesisReport::find(std::string_view id) const {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

namespace {

HypothesisEntry entry(std::string id, bool holds, std::string note = {},
                      std::optional<PairWitness> witness = {}) {
    return HypothesisEntry{std::move(id), holds ? HypStatus::holds : HypStatus::fails,
                           std::move(note), std::move(witness)};
}

HypothesisEntry auto_entry(std::string id, std::string note) {
    return HypothesisEntry{std::move(id), HypStatus::auto_satisfied, std::move(note), {}};
}

std::string alpha_note(const ContractionReport& r) {
    std::ostringstream os;
    os << "alpha_star=";
    if (r.alpha_star.is_infinite())
        os << "inf";
    else
        os << r.alpha_star.value();
    return os.str();
}

bool has_all_bounds(const OrderedMetricSpace& space, PairWitness* witness) {
    const std::size_t n = space.size();
    for (PointId x = 0; x < n; ++x) {
        for (PointId y = 0; y < n; ++y) {
            bool lower = false, upper = false;
            for (PointId u = 0; u < n && !(lower && upper); ++u) {
                if (!lower && space.leq(u, x) && space.leq(u, y)) lower = true;
                if (!upper && space.leq(x, u) && space.leq(y, u)) upper = true;
            }
            if (!lower || !upper) {
                if (witness) *witness = PairWitness{x, y, 0.0, 0.0};
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TheoremReport validate_theorem2(const Instance& instance, double eps_val) {
    TheoremReport report;
    report.theorem = "T2";
    report.contraction = ordered_contraction_factor(instance.space, instance.map, eps_val);
    report.classification = classify_plain(instance.space, instance.map);

    auto& hyps = report.hypotheses.entries;
    hyps.push_back(auto_entry("complete", "finite spaces are complete"));
    hyps.push_back(entry("contractive", report.contraction.verdict, alpha_note(report.contraction),
                         report.contraction.witness));
    hyps.push_back(auto_entry("a06", check_a06(instance.space).note));
    hyps.push_back(entry("b02", is_comparability_increasing(instance.space, instance.map),
                         "comparable pairs map to comparable pairs"));
    const ChainComponents cc = chain_components(instance.space);
    hyps.push_back(entry("b03", cc.chain_connected(),
                         std::to_string(cc.count) + " chain component(s)"));

    report.conclusion = report.classification.picard_plain;
    report.soundness_alarm = report.hypotheses.all_hold() && !report.conclusion;
    return report;
}

TheoremReport validate_theorem1(const Instance& instance, double eps_val) {
    TheoremReport report;
    report.theorem = "T1";
    report.contraction = ordered_contraction_factor(instance.space, instance.map, eps_val);
    report.classification = classify_plain(instance.space, instance.map);

    auto& hyps = report.hypotheses.entries;
    hyps.push_back(auto_entry("complete", "finite spaces are complete"));
    hyps.push_back(entry("contractive", report.contraction.verdict, alpha_note(report.contraction),
                         report.contraction.witness));
    hyps.push_back(entry("a03", !report.classification.x_comp.empty(),
                         "X(T,<>) has " + std::to_string(report.classification.x_comp.size()) +
                             " element(s)"));
    const Monotonicity mono = is_monotone(instance.space, instance.map);
    const bool a04 = mono != Monotonicity::neither;
    hyps.push_back(entry("a04", a04, std::string("T is ") + std::string(monotonicity_name(mono))));
    PairWitness a05_witness;
    const bool a05 = has_all_bounds(instance.space, &a05_witness);
    hyps.push_back(entry("a05", a05, "every pair has lower and upper bounds",
                         a05 ? std::optional<PairWitness>{} : a05_witness));
    hyps.push_back(auto_entry("a06", check_a06(instance.space).note));

    // recorded derivations: (a04) => (b02) and (a05) => (b03)
    const bool b02 = is_comparability_increasing(instance.space, instance.map);
    const ChainComponents cc = chain_components(instance.space);
    hyps.push_back(entry("b02", b02, a04 ? "derived from (a04)" : "recorded (a04 fails)"));
    hyps.push_back(entry("b03", cc.chain_connected(),
                         a05 ? "derived from (a05)" : "recorded (a05 fails)"));

    report.conclusion = report.classification.picard_plain;
    const bool implication_broken = (a04 && !b02) || (a05 && !cc.chain_connected());
    report.soundness_alarm =
        (report.hypotheses.all_hold() && !report.conclusion) || implication_broken;
    return report;
}

TheoremReport validate_theorem5(const Instance& instance, std::optional<double> alpha,
                                double eps_val) {
    TheoremReport report;
    report.theorem = "T5";
    report.classification = classify_ordered(instance.space, instance.map);

    std::optional<ContractionReport> c03;
    if (alpha) {
        c03 = check_weak_conditional_G_contractive(instance.space, instance.map, *alpha, eps_val);
        if (c03->verdict) report.alpha_used = *alpha;
    } else {
        for (double a : theorem5_alpha_grid()) {
            c03 = check_weak_conditional_G_contractive(instance.space, instance.map, a, eps_val);
            if (c03->verdict) {
                report.alpha_used = a;
                break;
            }
        }
    }
    report.contraction = *c03;

    auto& hyps = report.hypotheses.entries;
    {
        std::ostringstream note;
        if (report.alpha_used)
            note << "passes at alpha=" << *report.alpha_used;
        else if (alpha)
            note << "fails at alpha=" << *alpha;
        else
            note << "fails at every grid alpha";
        hyps.push_back(entry("c03", c03->verdict, note.str(), c03->witness));
    }
    hyps.push_back(entry("c04", !report.classification.x_leq.empty(),
                         "X(T,<=) has " + std::to_string(report.classification.x_leq.size()) +
                             " element(s)"));
    const Monotonicity mono = is_monotone(instance.space, instance.map);
    hyps.push_back(entry("c05",
                         mono == Monotonicity::increasing || mono == Monotonicity::both,
                         std::string("T is ") + std::string(monotonicity_name(mono))));
    hyps.push_back(auto_entry("ao_complete", "finite spaces are ao-complete"));
    const AoSelfClosedReport ao = check_ao_self_closed(instance.space, instance.map);
    hyps.push_back(entry("ao_self_closed", ao.verdict,
                         std::to_string(ao.ascending_orbits) + " ascending orbit(s) checked"));

    report.conclusion = report.classification.picard_ordered;
    report.soundness_alarm = report.hypotheses.all_hold() && !report.conclusion;
    return report;
}

ReduceResult reduce_to_banach(const Instance& instance, double eps_val) {
    const TheoremReport t2 = validate_theorem2(instance, eps_val);
    ChainMetric e = chain_metric(instance.space);
    ContractionReport d_report = t2.contraction;
    ContractionReport e_report = global_contraction_factor(e, instance.map, eps_val);

    std::optional<std::string> blocked;
    for (const auto& h : t2.hypotheses.entries) {
        if (!h.ok()) {
            blocked = h.id;
            break;
        }
    }
    bool verdict = false;
    if (!blocked) {
        verdict = !e_report.alpha_star.is_infinite() && !d_report.alpha_star.is_infinite() &&
                  e_report.alpha_star.value() <= d_report.alpha_star.value() + eps_val &&
                  e_report.alpha_star.value() < 1.0;
    }
    return ReduceResult{std::move(blocked), std::move(e), std::move(d_report),
                        std::move(e_report), verdict};
}

std::string_view order_model_name(OrderModel m) {
    switch (m) {
        case OrderModel::total: return "total";
        case OrderModel::random_dag: return "random_dag";
        case OrderModel::lattice: return "lattice";
        case OrderModel::antichain: return "antichain";
    }
    return "?";
}

std::string_view metric_model_name(MetricModel m) {
    switch (m) {
        case MetricModel::line: return "line";
        case MetricModel::embedding: return "embedding";
        case MetricModel::random_repaired: return "random_repaired";
    }
    return "?";
}

std::string_view map_model_name(MapModel m) {
    switch (m) {
        case MapModel::constant: return "constant";
        case MapModel::monotone_rejection: return "monotone_rejection";
        case MapModel::random_map: return "random";
    }
    return "?";
}

std::string GenConfig::describe() const {
    std::ostringstream os;
    os << "n=" << n << ",order=" << order_model_name(order_model);
    if (order_model == OrderModel::random_dag || order_model == OrderModel::lattice)
        os << "(p=" << dag_edge_prob << ")";
    os << ",metric=" << metric_model_name(metric_model);
    if (metric_model == MetricModel::embedding) {
        os << "(k=" << embed_dim << ",";
        switch (embed_norm) {
            case Norm::euclidean: os << "euclidean"; break;
            case Norm::manhattan: os << "manhattan"; break;
            case Norm::chebyshev: os << "chebyshev"; break;
        }
        os << ")";
    }
    os << ",map=" << map_model_name(map_model);
    if (map_model == MapModel::monotone_rejection) os << "(alpha<" << alpha_target << ")";
    return os.str();
}

namespace {

std::vector<PointId> random_permutation(std::size_t n, Rng& rng) {
    std::vector<PointId> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    return perm;
}

OrderRelation generate_order(const GenConfig& config, Rng& rng) {
    const std::size_t n = config.n;
    const std::vector<PointId> perm = random_permutation(n, rng);
    std::vector<std::pair<PointId, PointId>> pairs;
    switch (config.order_model) {
        case OrderModel::total:
            for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(perm[i], perm[i + 1]);
            break;
        case OrderModel::random_dag:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (rng.chance(config.dag_edge_prob)) pairs.emplace_back(perm[i], perm[j]);
            break;
        case OrderModel::lattice:
            // bounded poset: global bottom and top give every pair bounds (a05)
            if (n >= 2) {
                for (std::size_t i = 1; i + 1 < n; ++i) {
                    pairs.emplace_back(perm[0], perm[i]);
                    pairs.emplace_back(perm[i], perm[n - 1]);
                }
                pairs.emplace_back(perm[0], perm[n - 1]);
                for (std::size_t i = 1; i + 1 < n; ++i)
                    for (std::size_t j = i + 1; j + 1 < n; ++j)
                        if (rng.chance(config.dag_edge_prob)) pairs.emplace_back(perm[i], perm[j]);
            }
            break;
        case OrderModel::antichain:
            break;
    }
    return close_order(pairs, n, OrderKind::partial);
}

FiniteMetric generate_metric(const GenConfig& config, Rng& rng) {
    const std::size_t n = config.n;
    switch (config.metric_model) {
        case MetricModel::line: {
            std::vector<double> sorted(n);
            double c = rng.uniform(0.0, 1.0);
            for (std::size_t i = 0; i < n; ++i) {
                sorted[i] = c;
                c += rng.uniform(0.25, 2.0);
            }
            const std::vector<PointId> perm = random_permutation(n, rng);
            std::vector<std::vector<double>> coords(n);
            for (std::size_t i = 0; i < n; ++i) coords[i] = {sorted[perm[i]]};
            return metric_from_embedding(coords, Norm::euclidean);
        }
        case MetricModel::embedding: {
            std::vector<std::vector<double>> coords;
            coords.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                for (int attempt = 0;; ++attempt) {
                    std::vector<double> row(config.embed_dim);
                    for (double& c : row) c = rng.uniform(0.0, 10.0);
                    bool close = false;
                    for (const auto& other : coords) {
                        double cheb = 0.0;
                        for (std::size_t k = 0; k < row.size(); ++k)
                            cheb = std::max(cheb, std::abs(row[k] - other[k]));
                        if (cheb < 1e-3) close = true;
                    }
                    if (!close) {
                        coords.push_back(std::move(row));
                        break;
                    }
                    if (attempt > 100) throw Error::duplicate_point(i, i);
                }
            }
            return metric_from_embedding(coords, config.embed_norm);
        }
        case MetricModel::random_repaired: {
            std::vector<double> d(n * n, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    const double v = rng.uniform(0.5, 10.0);
                    d[i * n + j] = v;
                    d[j * n + i] = v;
                }
            // shortest-path closure repairs the triangle inequality
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
            return validate_metric(n, d);
        }
    }
    throw Error::domain("unknown metric model");
}

// Smallest-index linear extension of a partial order.
std::vector<PointId> topological_order(const OrderRelation& order) {
    const std::size_t n = order.size();
    std::vector<PointId> topo;
    std::vector<bool> placed(n, false);
    while (topo.size() < n) {
        bool progressed = false;
        for (PointId x = 0; x < n && !progressed; ++x) {
            if (placed[x]) continue;
            bool ready = true;
            for (PointId y = 0; y < n; ++y)
                if (y != x && order.leq(y, x) && !placed[y]) ready = false;
            if (ready) {
                topo.push_back(x);
                placed[x] = true;
                progressed = true;
            }
        }
        if (!progressed) return {};  // cyclic (quasi) order: no linear extension
    }
    return topo;
}

SelfMap generate_map(const GenConfig& config, const OrderedMetricSpace& space, Rng& rng,
                     std::uint64_t seed) {
    const std::size_t n = config.n;
    switch (config.map_model) {
        case MapModel::constant: {
            std::vector<PointId> image(n, rng.below(n));
            return SelfMap(n, std::move(image));
        }
        case MapModel::random_map: {
            std::vector<PointId> image(n);
            for (PointId& y : image) y = rng.below(n);
            return SelfMap(n, std::move(image));
        }
        case MapModel::monotone_rejection: {
            // order-respecting proposals: assign images along a linear
            // extension so every predecessor constraint is already in force,
            // then reject on the contraction target
            const std::vector<PointId> topo = topological_order(space.order);
            for (std::size_t attempt = 0; attempt < config.retry_budget; ++attempt) {
                std::vector<PointId> image(n, n);
                bool ok = !topo.empty() || n == 0;
                for (PointId x : topo) {
                    std::vector<PointId> candidates;
                    for (PointId z = 0; z < n; ++z) {
                        bool fits = true;
                        for (PointId y = 0; y < n && fits; ++y)
                            if (y != x && image[y] != n && space.leq(y, x) &&
                                !space.leq(image[y], z))
                                fits = false;
                        if (fits) candidates.push_back(z);
                    }
                    if (candidates.empty()) {
                        ok = false;
                        break;
                    }
                    image[x] = candidates[rng.below(candidates.size())];
                }
                if (!ok) continue;
                SelfMap candidate(n, std::move(image));
                const Monotonicity mono = is_monotone(space, candidate);
                if (mono != Monotonicity::increasing && mono != Monotonicity::both) continue;
                const ContractionReport r = ordered_contraction_factor(space, candidate);
                if (!r.alpha_star.is_infinite() && r.alpha_star.value() < config.alpha_target)
                    return candidate;
            }
            throw Error::generation_budget_exhausted(config.describe(), seed);
        }
    }
    throw Error::domain("unknown map model");
}

}  // namespace

Instance generate_instance(const GenConfig& config, std::uint64_t seed) {
    if (config.n == 0) throw Error::bad_instance("instances need at least one point");
    Rng rng(seed);
    OrderRelation order = generate_order(config, rng);
    FiniteMetric metric = generate_metric(config, rng);
    OrderedMetricSpace space(std::move(metric), std::move(order));
    SelfMap map = generate_map(config, space, rng, seed);

    std::vector<std::string> names;
    names.reserve(config.n);
    for (std::size_t i = 0; i < config.n; ++i) names.push_back("p" + std::to_string(i));
    std::ostringstream label;
    label << config.describe() << ",seed=" << seed;
    return Instance(std::move(space), std::move(map), std::move(names), label.str(), seed);
}

std::string_view theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::T1: return "T1";
        case TheoremId::T2: return "T2";
        case TheoremId::T5: return "T5";
    }
    return "?";
}

std::vector<std::string> theorem_hypotheses(TheoremId id) {
    switch (id) {
        case TheoremId::T1: return {"complete", "contractive", "a03", "a04", "a05", "a06"};
        case TheoremId::T2: return {"complete", "contractive", "a06", "b02", "b03"};
        case TheoremId::T5: return {"c03", "c04", "c05", "ao_complete", "ao_self_closed"};
    }
    return {};
}

namespace {

GenConfig sample_search_config(TheoremId theorem, std::size_t n_min, std::size_t n_max, Rng& rng) {
    GenConfig config;
    config.n = n_min + rng.below(n_max - n_min + 1);

    switch (rng.below(5)) {
        case 0: config.order_model = OrderModel::total; break;
        case 1:
            config.order_model = OrderModel::random_dag;
            config.dag_edge_prob = 0.15;
            break;
        case 2:
            config.order_model = OrderModel::random_dag;
            config.dag_edge_prob = 0.4;
            break;
        case 3: config.order_model = OrderModel::lattice; break;
        case 4: config.order_model = OrderModel::antichain; break;
    }
    switch (rng.below(3)) {
        case 0: config.metric_model = MetricModel::line; break;
        case 1:
            config.metric_model = MetricModel::embedding;
            config.embed_dim = 2;
            config.embed_norm = Norm::euclidean;
            break;
        case 2: config.metric_model = MetricModel::random_repaired; break;
    }
    const std::size_t map_pick = rng.below(4);
    if (map_pick < 2)
        config.map_model = MapModel::random_map;
    else if (map_pick == 2)
        config.map_model = MapModel::constant;
    else {
        config.map_model = MapModel::monotone_rejection;
        config.alpha_target = 0.8;
        config.retry_budget = theorem == TheoremId::T5 ? 2000 : 10000;
    }
    return config;
}

TheoremReport run_validator(TheoremId theorem, const Instance& instance, double eps_val) {
    switch (theorem) {
        case TheoremId::T1: return validate_theorem1(instance, eps_val);
        case TheoremId::T2: return validate_theorem2(instance, eps_val);
        case TheoremId::T5: return validate_theorem5(instance, std::nullopt, eps_val);
    }
    throw Error::domain("unknown theorem");
}

bool reports_agree(const TheoremReport& a, const TheoremReport& b) {
    if (a.conclusion != b.conclusion || a.soundness_alarm != b.soundness_alarm) return false;
    if (a.hypotheses.entries.size() != b.hypotheses.entries.size()) return false;
    for (std::size_t i = 0; i < a.hypotheses.entries.size(); ++i)
        if (a.hypotheses.entries[i].status != b.hypotheses.entries[i].status) return false;
    return true;
}

}  // namespace

SearchResult search_counterexamples(TheoremId theorem, const std::string& drop,
                                    std::size_t budget, std::uint64_t base_seed,
                                    std::size_t n_min, std::size_t n_max, double eps_val) {
    if (n_min == 0 || n_min > n_max) throw Error::domain("need 1 <= n_min <= n_max");
    const std::vector<std::string> hyp_ids = theorem_hypotheses(theorem);
    if (drop != "none" &&
        std::find(hyp_ids.begin(), hyp_ids.end(), drop) == hyp_ids.end())
        throw Error::domain("\"" + drop + "\" is not a hypothesis of " +
                            std::string(theorem_name(theorem)));

    SearchResult result;
    for (std::size_t i = 0; i < budget; ++i) {
        const std::uint64_t seed = base_seed ^ static_cast<std::uint64_t>(i);
        Rng cfg_rng(seed ^ 0xA5A5A5A5DEADBEEFULL);
        const GenConfig config = sample_search_config(theorem, n_min, n_max, cfg_rng);
        ++result.instances_tried;

        Instance instance = [&]() -> Instance {
            try {
                return generate_instance(config, seed);
            } catch (const Error& e) {
                if (e.code == errc::generation_budget_exhausted) {
                    GenConfig fallback = config;
                    fallback.map_model = MapModel::constant;
                    return generate_instance(fallback, seed);
                }
                throw;
            }
        }();

        const TheoremReport report = run_validator(theorem, instance, eps_val);
        bool others_ok = true;
        bool dropped_ok = true;
        for (const auto& h : report.hypotheses.entries) {
            if (h.id == drop)
                dropped_ok = h.ok();
            else if (!h.ok())
                others_ok = false;
        }
        if (!others_ok) continue;
        ++result.instances_eligible;
        if (report.conclusion) continue;

        if (dropped_ok) {
            // all hypotheses hold and the conclusion fails: the theorem is
            // contradicted, which means the artifact is broken
            result.alarms.push_back("SOUNDNESS ALARM: " + std::string(theorem_name(theorem)) +
                                    " hypotheses hold but conclusion fails on " + instance.label);
            continue;
        }

        const TheoremReport again = run_validator(theorem, instance, eps_val);
        if (!reports_agree(report, again)) {
            result.alarms.push_back("witness failed re-validation on " + instance.label);
            continue;
        }
        SearchWitness witness{std::move(instance), drop,
                              theorem == TheoremId::T5 ? "picard_ordered = false"
                                                       : "picard_plain = false",
                              report};
        result.witnesses.push_back(std::move(witness));
    }
    return result;
}

}  // namespace fixlab
