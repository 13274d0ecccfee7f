#include "fixlab/instance_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "fixlab/version.hpp"

namespace fixlab {

using nlohmann::json;

namespace {

Norm parse_norm(const std::string& name) {
    if (name == "euclidean") return Norm::euclidean;
    if (name == "manhattan") return Norm::manhattan;
    if (name == "chebyshev") return Norm::chebyshev;
    throw Error::parse("unknown norm \"" + name + "\"");
}

const json& member(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw Error::parse(std::string("missing member \"") + key + "\"");
    return *it;
}

Instance parse_instance_impl(const json& doc, double eps_val) {
    if (!doc.is_object()) throw Error::parse("instance document must be an object");
    if (doc.contains("instance") && !doc.contains("points"))
        return parse_instance_impl(doc.at("instance"), eps_val);  // report file: use the echo

    const json& points = member(doc, "points");
    if (!points.is_array() || points.empty())
        throw Error::parse("\"points\" must be a nonempty array of names");
    std::vector<std::string> names;
    std::map<std::string, PointId> by_name;
    for (const auto& p : points) {
        if (!p.is_string()) throw Error::parse("point names must be strings");
        const std::string name = p.get<std::string>();
        if (!by_name.emplace(name, names.size()).second)
            throw Error::parse("duplicate point name \"" + name + "\"");
        names.push_back(name);
    }
    const std::size_t n = names.size();
    auto resolve = [&](const std::string& name) -> PointId {
        auto it = by_name.find(name);
        if (it == by_name.end()) throw Error::unknown_point(name);
        return it->second;
    };

    const json& metric_doc = member(doc, "metric");
    if (!metric_doc.is_object()) throw Error::parse("\"metric\" must be an object");
    std::optional<FiniteMetric> metric;
    if (metric_doc.contains("matrix")) {
        const json& m = metric_doc.at("matrix");
        if (!m.is_array() || m.size() != n * n)
            throw Error::parse("\"metric.matrix\" must hold n*n numbers");
        std::vector<double> flat;
        flat.reserve(n * n);
        for (const auto& v : m) {
            if (!v.is_number()) throw Error::parse("metric entries must be numbers");
            flat.push_back(v.get<double>());
        }
        metric = validate_metric(n, flat, eps_val);
    } else if (metric_doc.contains("embedding")) {
        const json& emb = metric_doc.at("embedding");
        const json& coords_doc = member(emb, "coords");
        if (!coords_doc.is_array() || coords_doc.size() != n)
            throw Error::parse("\"embedding.coords\" must hold one row per point");
        std::vector<std::vector<double>> coords;
        for (const auto& row : coords_doc) {
            if (!row.is_array()) throw Error::parse("embedding rows must be arrays");
            coords.push_back(row.get<std::vector<double>>());
        }
        const Norm norm = parse_norm(member(emb, "norm").get<std::string>());
        metric = metric_from_embedding(coords, norm, eps_val);
    } else {
        throw Error::parse("\"metric\" needs either \"matrix\" or \"embedding\"");
    }

    const json& order_doc = member(doc, "order");
    const std::string kind_name = member(order_doc, "kind").get<std::string>();
    OrderKind kind;
    if (kind_name == "partial")
        kind = OrderKind::partial;
    else if (kind_name == "quasi")
        kind = OrderKind::quasi;
    else
        throw Error::parse("order kind must be \"partial\" or \"quasi\"");
    std::vector<std::pair<PointId, PointId>> pairs;
    for (const auto& pr : member(order_doc, "pairs")) {
        if (!pr.is_array() || pr.size() != 2) throw Error::parse("order pairs must be [a, b]");
        pairs.emplace_back(resolve(pr[0].get<std::string>()), resolve(pr[1].get<std::string>()));
    }
    OrderRelation order = close_order(pairs, n, kind);

    const json& map_doc = member(doc, "map");
    if (!map_doc.is_object() || map_doc.size() != n)
        throw Error::parse("\"map\" must give an image for every point");
    std::vector<PointId> image(n);
    std::vector<bool> defined(n, false);
    for (const auto& [from, to] : map_doc.items()) {
        const PointId src = resolve(from);
        image[src] = resolve(to.get<std::string>());
        defined[src] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!defined[i]) throw Error::parse("map misses point \"" + names[i] + "\"");

    std::string label = doc.value("label", std::string{});
    std::optional<std::uint64_t> seed;
    if (doc.contains("seed")) seed = doc.at("seed").get<std::uint64_t>();

    return Instance(OrderedMetricSpace(std::move(*metric), std::move(order)),
                    SelfMap(n, std::move(image)), std::move(names), std::move(label), seed);
}

}  // namespace

Instance parse_instance(const json& doc, double eps_val) {
    try {
        return parse_instance_impl(doc, eps_val);
    } catch (const json::exception& e) {
        throw Error::parse(e.what());  // type confusion in the document
    }
}

Instance parse_instance_text(const std::string& text, double eps_val) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error::parse(e.what());
    }
    return parse_instance(doc, eps_val);
}

Instance load_instance_file(const std::string& path, double eps_val) {
    return parse_instance_text(read_text_file(path), eps_val);
}

json instance_to_json(const Instance& instance) {
    const std::size_t n = instance.size();
    json doc;
    doc["points"] = instance.names;
    json matrix = json::array();
    for (PointId i = 0; i < n; ++i)
        for (PointId j = 0; j < n; ++j) matrix.push_back(instance.space.d(i, j));
    doc["metric"] = json{{"matrix", std::move(matrix)}};
    json pairs = json::array();
    for (const auto& [a, b] : instance.space.order.strict_pairs())
        pairs.push_back(json::array({instance.names[a], instance.names[b]}));
    doc["order"] = json{
        {"kind", instance.space.order.kind() == OrderKind::partial ? "partial" : "quasi"},
        {"pairs", std::move(pairs)}};
    json map_doc = json::object();
    for (PointId i = 0; i < n; ++i) map_doc[instance.names[i]] = instance.names[instance.map(i)];
    doc["map"] = std::move(map_doc);
    if (!instance.label.empty()) doc["label"] = instance.label;
    if (instance.seed) doc["seed"] = *instance.seed;
    return doc;
}

std::string ext_dist_to_string(ExtDist v) {
    if (v.is_infinite()) return "inf";
    std::ostringstream os;
    os.precision(17);
    os << v.value();
    return os.str();
}

json chain_metric_to_json(const ChainMetric& e) {
    const std::size_t n = e.size();
    json rows = json::array();
    for (PointId i = 0; i < n; ++i) {
        json row = json::array();
        for (PointId j = 0; j < n; ++j) {
            const ExtDist v = e(i, j);
            if (v.is_infinite())
                row.push_back("inf");
            else
                row.push_back(v.value());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

json witness_to_json(const PairWitness& w, const Instance& instance) {
    return json{{"x", instance.names[w.x]},
                {"y", instance.names[w.y]},
                {"lhs", w.lhs},
                {"rhs", w.rhs}};
}

json points_to_json(const std::vector<PointId>& ids, const Instance& instance) {
    json arr = json::array();
    for (PointId p : ids) arr.push_back(instance.names[p]);
    return arr;
}

}  // namespace

json contraction_report_to_json(const ContractionReport& report, const Instance& instance) {
    json doc;
    doc["kind"] = std::string(contraction_kind_name(report.kind));
    doc["alpha_star"] = report.alpha_star.is_infinite() ? json("inf") : json(report.alpha_star.value());
    doc["eligible_pairs"] = report.eligible_pairs;
    doc["verdict"] = report.verdict;
    doc["tolerance"] = report.tolerance;
    if (report.alpha_queried) doc["alpha"] = *report.alpha_queried;
    if (report.witness) doc["witness"] = witness_to_json(*report.witness, instance);
    if (report.extremal) doc["extremal_pair"] = witness_to_json(*report.extremal, instance);
    if (report.extended_regime) doc["extended_metric_regime"] = true;
    return doc;
}

json classification_to_json(const OperatorClassification& c, const Instance& instance) {
    json doc;
    doc["fixed_points"] = points_to_json(c.fixed_points, instance);
    doc["picard_plain"] = c.picard_plain;
    doc["picard_ordered"] = c.picard_ordered;
    doc["leq_singleton"] = c.leq_singleton;
    doc["maximality_ok"] = c.maximality_ok;
    doc["x_leq"] = points_to_json(c.x_leq, instance);
    doc["x_comp"] = points_to_json(c.x_comp, instance);
    json ws = json::array();
    for (const auto& w : c.witnesses)
        ws.push_back(json{{"what", w.what}, {"x", instance.names[w.x]}, {"y", instance.names[w.y]}});
    doc["witnesses"] = std::move(ws);
    return doc;
}

json hypothesis_report_to_json(const HypothesisReport& report, const Instance& instance) {
    json arr = json::array();
    for (const auto& h : report.entries) {
        json e;
        e["id"] = h.id;
        e["status"] = std::string(hyp_status_name(h.status));
        if (!h.note.empty()) e["note"] = h.note;
        if (h.witness) e["witness"] = witness_to_json(*h.witness, instance);
        arr.push_back(std::move(e));
    }
    return arr;
}

json theorem_report_to_json(const TheoremReport& report, const Instance& instance) {
    json doc;
    doc["theorem"] = report.theorem;
    doc["hypotheses"] = hypothesis_report_to_json(report.hypotheses, instance);
    doc["hypotheses_hold"] = report.hypotheses.all_hold();
    doc["conclusion"] = report.conclusion;
    doc["soundness_alarm"] = report.soundness_alarm;
    doc["contraction"] = contraction_report_to_json(report.contraction, instance);
    doc["classification"] = classification_to_json(report.classification, instance);
    if (report.alpha_used) doc["alpha_used"] = *report.alpha_used;
    return doc;
}

json picard_result_to_json(const PicardResult& r, const Instance& instance) {
    json doc;
    doc["start"] = instance.names[r.start];
    doc["orbit"] = points_to_json(r.orbit, instance);
    if (r.fixed_limit) doc["limit"] = instance.names[*r.fixed_limit];
    if (!r.cycle.empty()) doc["cycle"] = points_to_json(r.cycle, instance);
    doc["reached_fixed_point"] = r.reached_fixed_point;
    doc["steps_to_limit"] = r.steps_to_limit;
    doc["ascending"] = r.ascending;
    doc["limit_dominates"] = r.limit_dominates;
    if (r.reached_fixed_point)
        doc["convergence_case"] = r.limit_attained_in_orbit ? "limit attained in orbit"
                                                            : "limit never attained";
    return doc;
}

json step_function_to_json(const StepFunction& f) {
    return json{{"breakpoints", f.breakpoints()}, {"values", f.values()}};
}

json report_header(double tolerance, std::optional<std::uint64_t> seed) {
    json doc;
    doc["tool"] = std::string(kToolName);
    doc["version"] = std::string(kVersion);
    doc["tolerance"] = tolerance;
    if (seed) doc["seed"] = *seed;
    return doc;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error::io("cannot open \"" + path + "\" for writing");
    out << text;
    if (!out) throw Error::io("write to \"" + path + "\" failed");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error::io("cannot read \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace fixlab
