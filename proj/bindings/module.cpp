#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "fixlab/exact_sum.hpp"
#include "fixlab/instance_io.hpp"
#include "fixlab/theorem_lab.hpp"
#include "fixlab/version.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace fixlab;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(json_to_py(v));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
            return out;
        }
        default: return py::none();
    }
}

TheoremId theorem_from_string(const std::string& name) {
    if (name == "T1") return TheoremId::T1;
    if (name == "T2") return TheoremId::T2;
    if (name == "T5") return TheoremId::T5;
    throw Error::domain("theorem must be T1, T2 or T5");
}

GenConfig config_from_kwargs(std::size_t n, const std::string& order, double dag_p,
                             const std::string& metric, const std::string& map_model,
                             double alpha_target) {
    GenConfig c;
    c.n = n;
    if (order == "total")
        c.order_model = OrderModel::total;
    else if (order == "random_dag")
        c.order_model = OrderModel::random_dag;
    else if (order == "lattice")
        c.order_model = OrderModel::lattice;
    else if (order == "antichain")
        c.order_model = OrderModel::antichain;
    else
        throw Error::domain("unknown order model \"" + order + "\"");
    c.dag_edge_prob = dag_p;
    if (metric == "line")
        c.metric_model = MetricModel::line;
    else if (metric == "embedding")
        c.metric_model = MetricModel::embedding;
    else if (metric == "random_repaired")
        c.metric_model = MetricModel::random_repaired;
    else
        throw Error::domain("unknown metric model \"" + metric + "\"");
    if (map_model == "constant")
        c.map_model = MapModel::constant;
    else if (map_model == "monotone_rejection")
        c.map_model = MapModel::monotone_rejection;
    else if (map_model == "random")
        c.map_model = MapModel::random_map;
    else
        throw Error::domain("unknown map model \"" + map_model + "\"");
    c.alpha_target = alpha_target;
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "fixed points of contractions on finite ordered metric spaces";
    m.attr("__version__") = std::string(kVersion);

    py::register_exception<Error>(m, "FixlabError");

    py::class_<Instance>(m, "Instance")
        .def_static(
            "from_json",
            [](const std::string& text, double tolerance) {
                return parse_instance_text(text, tolerance);
            },
            py::arg("text"), py::arg("tolerance") = kDefaultTolerance)
        .def_static(
            "from_file",
            [](const std::string& path, double tolerance) {
                return load_instance_file(path, tolerance);
            },
            py::arg("path"), py::arg("tolerance") = kDefaultTolerance)
        .def_property_readonly("n", &Instance::size)
        .def_property_readonly("names", [](const Instance& i) { return i.names; })
        .def_property_readonly("label", [](const Instance& i) { return i.label; })
        .def("to_json", [](const Instance& i) { return instance_to_json(i).dump(2); })
        .def("to_dict", [](const Instance& i) { return json_to_py(instance_to_json(i)); })
        .def("__repr__", [](const Instance& i) {
            return "<fixlab.Instance n=" + std::to_string(i.size()) +
                   (i.label.empty() ? "" : " " + i.label) + ">";
        });

    m.def(
        "generate_instance",
        [](std::size_t n, std::uint64_t seed, const std::string& order, const std::string& metric,
           const std::string& map_model, double dag_p, double alpha_target) {
            return generate_instance(
                config_from_kwargs(n, order, dag_p, metric, map_model, alpha_target), seed);
        },
        py::arg("n"), py::arg("seed"), py::arg("order") = "random_dag",
        py::arg("metric") = "line", py::arg("map") = "random", py::arg("dag_p") = 0.3,
        py::arg("alpha_target") = 0.8);

    m.def(
        "chain_metric",
        [](const Instance& instance) {
            return json_to_py(chain_metric_to_json(chain_metric(instance.space)));
        },
        "all-pairs shortest chains; entries are floats with 'inf' for no chain");

    m.def(
        "brute_force_chain_metric",
        [](const Instance& instance, std::size_t cap) {
            return json_to_py(chain_metric_to_json(brute_force_chain_metric(instance.space, cap)));
        },
        py::arg("instance"), py::arg("cap") = kBruteForceCap);

    m.def("chain_connected", [](const Instance& instance) {
        return chain_components(instance.space).chain_connected();
    });

    m.def(
        "check_theorem",
        [](const Instance& instance, const std::string& theorem, py::object alpha,
           double tolerance) {
            std::optional<double> a;
            if (!alpha.is_none()) a = alpha.cast<double>();
            TheoremReport report;
            switch (theorem_from_string(theorem)) {
                case TheoremId::T1: report = validate_theorem1(instance, tolerance); break;
                case TheoremId::T2: report = validate_theorem2(instance, tolerance); break;
                case TheoremId::T5: report = validate_theorem5(instance, a, tolerance); break;
            }
            return json_to_py(theorem_report_to_json(report, instance));
        },
        py::arg("instance"), py::arg("theorem"), py::arg("alpha") = py::none(),
        py::arg("tolerance") = kDefaultTolerance);

    m.def(
        "reduce_to_banach",
        [](const Instance& instance, double tolerance) {
            const ReduceResult r = reduce_to_banach(instance, tolerance);
            json doc;
            doc["chain_metric"] = chain_metric_to_json(r.e);
            doc["d_report"] = contraction_report_to_json(r.d_report, instance);
            doc["e_report"] = contraction_report_to_json(r.e_report, instance);
            doc["reduction_verdict"] = r.reduction_verdict;
            if (r.blocked_on) doc["blocked_on"] = *r.blocked_on;
            return json_to_py(doc);
        },
        py::arg("instance"), py::arg("tolerance") = kDefaultTolerance);

    m.def(
        "picard_orbit",
        [](const Instance& instance, const std::string& start) {
            for (PointId i = 0; i < instance.size(); ++i)
                if (instance.names[i] == start)
                    return json_to_py(
                        picard_result_to_json(picard_orbit(instance.space, instance.map, i),
                                              instance));
            throw Error::unknown_point(start);
        },
        py::arg("instance"), py::arg("start"));

    m.def("classify", [](const Instance& instance) {
        return json_to_py(
            classification_to_json(classify_ordered(instance.space, instance.map), instance));
    });

    m.def(
        "ordered_contraction_factor",
        [](const Instance& instance, double tolerance) {
            return json_to_py(contraction_report_to_json(
                ordered_contraction_factor(instance.space, instance.map, tolerance), instance));
        },
        py::arg("instance"), py::arg("tolerance") = kDefaultTolerance);

    m.def("suzuki_F", &suzuki_F, py::arg("t"));
    m.def("suzuki_G", &suzuki_G, py::arg("t"));

    m.def(
        "exact_sum",
        [](const std::vector<double>& values) {
            ExactSum s;
            for (double v : values) s.add(v);
            return s.round();
        },
        py::arg("values"),
        "correctly rounded sum of nonnegative doubles (the chain-length accumulator)");

    m.def(
        "check_conditional_F",
        [](const Instance& instance, double alpha, double tolerance) {
            return json_to_py(contraction_report_to_json(
                check_conditional_F_contractive(instance.space, instance.map, alpha, tolerance),
                instance));
        },
        py::arg("instance"), py::arg("alpha"), py::arg("tolerance") = kDefaultTolerance);

    m.def(
        "check_weak_G",
        [](const Instance& instance, double alpha, double tolerance, bool dual_y) {
            return json_to_py(contraction_report_to_json(
                check_weak_conditional_G_contractive(
                    instance.space, instance.map, alpha, tolerance,
                    dual_y ? WeakGPremise::dual_y : WeakGPremise::verbatim),
                instance));
        },
        py::arg("instance"), py::arg("alpha"), py::arg("tolerance") = kDefaultTolerance,
        py::arg("dual_y") = false);

    m.def(
        "comparison_profile",
        [](const Instance& instance) {
            return json_to_py(step_function_to_json(
                comparison_profile(instance.space, instance.map)));
        },
        py::arg("instance"));

    m.def(
        "minimal_alpha",
        [](const Instance& instance, const std::string& kind, double grid_step) -> py::object {
            ContractionKind k;
            if (kind == "ordered_d")
                k = ContractionKind::ordered_d;
            else if (kind == "global_e")
                k = ContractionKind::global_e;
            else if (kind == "suzuki_F")
                k = ContractionKind::suzuki_F;
            else if (kind == "weak_G")
                k = ContractionKind::weak_G;
            else
                throw Error::domain("unknown contraction kind \"" + kind + "\"");
            auto a = minimal_alpha(instance.space, instance.map, k, grid_step);
            if (!a) return py::none();
            return py::float_(*a);
        },
        py::arg("instance"), py::arg("kind"), py::arg("grid_step") = 1e-3);

    m.def(
        "search_counterexamples",
        [](const std::string& theorem, const std::string& drop, std::size_t budget,
           std::uint64_t seed, std::size_t n_min, std::size_t n_max) {
            const SearchResult result = search_counterexamples(theorem_from_string(theorem), drop,
                                                               budget, seed, n_min, n_max);
            py::list witnesses;
            for (const auto& w : result.witnesses) {
                py::dict d;
                d["instance"] = json_to_py(instance_to_json(w.instance));
                d["dropped_hypothesis"] = w.dropped_hypothesis;
                d["violated_conclusion"] = w.violated_conclusion;
                d["evidence"] = json_to_py(theorem_report_to_json(w.evidence, w.instance));
                witnesses.append(d);
            }
            py::dict out;
            out["witnesses"] = witnesses;
            out["instances_tried"] = result.instances_tried;
            out["instances_eligible"] = result.instances_eligible;
            out["alarms"] = result.alarms;
            return out;
        },
        py::arg("theorem"), py::arg("drop"), py::arg("budget") = 100, py::arg("seed") = 0,
        py::arg("n_min") = 3, py::arg("n_max") = 6);
}
