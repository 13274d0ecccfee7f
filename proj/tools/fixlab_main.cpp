// fixlab: hypothesis checking, chain-metric reduction, Picard iteration and
// counterexample search on finite ordered metric spaces, driven by JSON
// instance files.
//
// Exit codes are a stable contract:
//   0 success / conclusion holds     3 parse error
//   1 some hypothesis fails          4 soundness alarm
//   2 validation error               5 I/O error

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fixlab/instance_io.hpp"
#include "fixlab/theorem_lab.hpp"
#include "fixlab/version.hpp"

namespace {

using nlohmann::json;
using namespace fixlab;

constexpr int kExitOk = 0;
constexpr int kExitHypothesisFails = 1;
constexpr int kExitValidation = 2;
constexpr int kExitParse = 3;
constexpr int kExitSoundnessAlarm = 4;
constexpr int kExitIo = 5;

int exit_code_for(const Error& e) {
    switch (e.code) {
        case errc::parse_error: return kExitParse;
        case errc::io_error: return kExitIo;
        default: return kExitValidation;
    }
}

json error_to_json(const Error& e, double tolerance) {
    json doc = report_header(tolerance);
    json detail;
    detail["code"] = std::string(errc_name(e.code));
    detail["message"] = e.what();
    json indices = json::array();
    for (std::size_t v : e.index)
        if (v != Error::npos) indices.push_back(v);
    if (!indices.empty()) detail["indices"] = std::move(indices);
    if (e.code == errc::triangle_violation) detail["defect"] = e.defect;
    doc["error"] = std::move(detail);
    return doc;
}

void emit(const json& doc, bool as_json) {
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // compact human rendering of the same document
    std::cout << doc["tool"].get<std::string>() << " " << doc["version"].get<std::string>()
              << "  (tolerance " << doc["tolerance"].get<double>() << ")\n";
    if (doc.contains("error")) {
        std::cout << "error: " << doc["error"]["message"].get<std::string>() << "\n";
        return;
    }
    if (doc.contains("label") && !doc["label"].get<std::string>().empty())
        std::cout << "instance: " << doc["label"].get<std::string>() << "\n";
    if (doc.contains("valid")) std::cout << "valid: " << doc["valid"].get<bool>() << "\n";
    if (doc.contains("report")) {
        const json& r = doc["report"];
        if (r.contains("hypotheses")) {
            for (const auto& h : r["hypotheses"]) {
                std::cout << "  " << h["id"].get<std::string>() << ": "
                          << h["status"].get<std::string>();
                if (h.contains("note")) std::cout << "  (" << h["note"].get<std::string>() << ")";
                std::cout << "\n";
            }
            std::cout << "conclusion: " << (r["conclusion"].get<bool>() ? "holds" : "fails")
                      << "\n";
            if (r["soundness_alarm"].get<bool>()) std::cout << "SOUNDNESS ALARM\n";
        }
        if (r.contains("orbits")) {
            for (const auto& orbit : r["orbits"]) {
                std::cout << "  ";
                bool first = true;
                for (const auto& p : orbit["orbit"]) {
                    std::cout << (first ? "" : " -> ") << p.get<std::string>();
                    first = false;
                }
                if (orbit.contains("limit"))
                    std::cout << "  fixed point " << orbit["limit"].get<std::string>() << " after "
                              << orbit["steps_to_limit"].get<std::size_t>() << " step(s)";
                else
                    std::cout << "  cycle of length " << orbit["cycle"].size();
                std::cout << "\n";
            }
        }
        if (r.contains("reduction_verdict")) {
            std::cout << "d ordered factor: " << r["d_factor"].dump() << "\n";
            std::cout << "e global factor:  " << r["e_factor"].dump() << "\n";
            std::cout << "reduction verdict: " << (r["reduction_verdict"].get<bool>() ? "holds" : "fails")
                      << "\n";
            if (r.contains("blocked_on"))
                std::cout << "not applicable: hypothesis " << r["blocked_on"].get<std::string>()
                          << " fails\n";
        }
    }
    if (doc.contains("summary")) {
        const json& s = doc["summary"];
        std::cout << "witnesses: " << s["witness_count"].get<std::size_t>() << " of "
                  << s["budget"].get<std::size_t>() << " instances tried\n";
        for (const auto& f : s["files"]) std::cout << "  " << f.get<std::string>() << "\n";
        if (s.contains("alarms"))
            for (const auto& a : s["alarms"]) std::cout << "ALARM: " << a.get<std::string>() << "\n";
    }
}

struct CommonOpts {
    double tolerance = kDefaultTolerance;
    bool as_json = false;
};

int run_validate(const std::string& path, const CommonOpts& opts) {
    json doc = report_header(opts.tolerance);
    try {
        Instance instance = load_instance_file(path, opts.tolerance);
        doc["valid"] = true;
        doc["label"] = instance.label;
        doc["instance"] = instance_to_json(instance);
        emit(doc, opts.as_json);
        return kExitOk;
    } catch (const Error& e) {
        doc = error_to_json(e, opts.tolerance);
        emit(doc, opts.as_json);
        return exit_code_for(e);
    }
}

int run_check(const std::string& path, const std::string& theorem, std::optional<double> alpha,
              bool force_alarm, const CommonOpts& opts) {
    json doc = report_header(opts.tolerance);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        Instance instance = load_instance_file(path, opts.tolerance);
        TheoremReport report;
        if (theorem == "T1")
            report = validate_theorem1(instance, opts.tolerance);
        else if (theorem == "T2")
            report = validate_theorem2(instance, opts.tolerance);
        else if (theorem == "T5")
            report = validate_theorem5(instance, alpha, opts.tolerance);
        else
            throw Error::domain("--theorem must be T1, T2 or T5");
        if (force_alarm) report.soundness_alarm = true;  // testing hook for the exit contract

        doc["label"] = instance.label;
        doc["instance"] = instance_to_json(instance);
        doc["report"] = theorem_report_to_json(report, instance);
        doc["timing_ms"] = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
        emit(doc, opts.as_json);
        if (report.soundness_alarm) return kExitSoundnessAlarm;
        if (!report.hypotheses.all_hold()) return kExitHypothesisFails;
        return report.conclusion ? kExitOk : kExitSoundnessAlarm;
    } catch (const Error& e) {
        emit(error_to_json(e, opts.tolerance), opts.as_json);
        return exit_code_for(e);
    }
}

int run_reduce(const std::string& path, const CommonOpts& opts) {
    json doc = report_header(opts.tolerance);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        Instance instance = load_instance_file(path, opts.tolerance);
        const ReduceResult result = reduce_to_banach(instance, opts.tolerance);

        json r;
        r["chain_metric"] = chain_metric_to_json(result.e);
        r["d_factor"] = result.d_report.alpha_star.is_infinite()
                            ? json("inf")
                            : json(result.d_report.alpha_star.value());
        r["e_factor"] = result.e_report.alpha_star.is_infinite()
                            ? json("inf")
                            : json(result.e_report.alpha_star.value());
        r["d_report"] = contraction_report_to_json(result.d_report, instance);
        r["e_report"] = contraction_report_to_json(result.e_report, instance);
        r["reduction_verdict"] = result.reduction_verdict;
        if (result.blocked_on) r["blocked_on"] = *result.blocked_on;
        doc["label"] = instance.label;
        doc["instance"] = instance_to_json(instance);
        doc["report"] = std::move(r);
        doc["timing_ms"] = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
        emit(doc, opts.as_json);
        return kExitOk;
    } catch (const Error& e) {
        emit(error_to_json(e, opts.tolerance), opts.as_json);
        return exit_code_for(e);
    }
}

int run_solve(const std::string& path, const std::string& start, const CommonOpts& opts) {
    json doc = report_header(opts.tolerance);
    try {
        Instance instance = load_instance_file(path, opts.tolerance);
        std::vector<PointId> starts;
        if (start.empty()) {
            for (PointId i = 0; i < instance.size(); ++i) starts.push_back(i);
        } else {
            auto it = std::find(instance.names.begin(), instance.names.end(), start);
            if (it == instance.names.end()) throw Error::unknown_point(start);
            starts.push_back(static_cast<PointId>(it - instance.names.begin()));
        }
        json orbits = json::array();
        for (PointId s : starts)
            orbits.push_back(picard_result_to_json(picard_orbit(instance.space, instance.map, s),
                                                   instance));
        doc["label"] = instance.label;
        doc["instance"] = instance_to_json(instance);
        doc["report"] = json{{"orbits", std::move(orbits)}};
        emit(doc, opts.as_json);
        return kExitOk;
    } catch (const Error& e) {
        emit(error_to_json(e, opts.tolerance), opts.as_json);
        return exit_code_for(e);
    }
}

int run_search(const std::string& theorem_str, const std::string& drop, std::size_t budget,
               std::uint64_t seed, std::size_t n, const std::string& out_dir,
               const CommonOpts& opts) {
    json doc = report_header(opts.tolerance, seed);
    try {
        TheoremId theorem;
        if (theorem_str == "T1")
            theorem = TheoremId::T1;
        else if (theorem_str == "T2")
            theorem = TheoremId::T2;
        else if (theorem_str == "T5")
            theorem = TheoremId::T5;
        else
            throw Error::domain("--theorem must be T1, T2 or T5");

        const std::size_t n_min = n ? n : 3;
        const std::size_t n_max = n ? n : 6;
        const SearchResult result =
            search_counterexamples(theorem, drop, budget, seed, n_min, n_max, opts.tolerance);

        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec || !std::filesystem::is_directory(out_dir))
            throw Error::io("cannot create output directory \"" + out_dir + "\"");

        json files = json::array();
        for (std::size_t i = 0; i < result.witnesses.size(); ++i) {
            const SearchWitness& w = result.witnesses[i];
            char tag[16];
            std::snprintf(tag, sizeof tag, "%03zu", i);
            const std::string base = out_dir + "/witness_" + tag;

            json instance_doc = instance_to_json(w.instance);
            write_text_file(base + ".instance.json", instance_doc.dump(2) + "\n");

            json report = report_header(opts.tolerance, w.instance.seed);
            report["dropped_hypothesis"] = w.dropped_hypothesis;
            report["violated_conclusion"] = w.violated_conclusion;
            report["instance"] = std::move(instance_doc);
            report["report"] = theorem_report_to_json(w.evidence, w.instance);
            write_text_file(base + ".report.json", report.dump(2) + "\n");

            files.push_back("witness_" + std::string(tag) + ".instance.json");
        }

        json summary;
        summary["theorem"] = theorem_str;
        summary["drop"] = drop;
        summary["budget"] = budget;
        summary["n_min"] = n_min;
        summary["n_max"] = n_max;
        summary["instances_tried"] = result.instances_tried;
        summary["instances_eligible"] = result.instances_eligible;
        summary["witness_count"] = result.witnesses.size();
        summary["files"] = files;
        if (!result.alarms.empty()) summary["alarms"] = result.alarms;
        doc["summary"] = summary;

        json summary_doc = report_header(opts.tolerance, seed);
        summary_doc["summary"] = std::move(summary);
        write_text_file(out_dir + "/summary.json", summary_doc.dump(2) + "\n");

        emit(doc, opts.as_json);
        return result.alarms.empty() ? kExitOk : kExitSoundnessAlarm;
    } catch (const Error& e) {
        emit(error_to_json(e, opts.tolerance), opts.as_json);
        return exit_code_for(e);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for fixed points of contractions on finite ordered metric spaces"};
    app.set_version_flag("--version", std::string(kToolName) + " " + std::string(kVersion));
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--tolerance", opts.tolerance,
                   "comparison tolerance for all metric/contraction inequalities")
        ->envname("FIXLAB_TOLERANCE")
        ->capture_default_str();
    app.add_flag("--json", opts.as_json, "emit machine-readable JSON reports");

    std::string path, theorem = "T2", start, drop = "none", out_dir;
    std::optional<double> alpha;
    bool force_alarm = false;
    std::size_t budget = 100, n = 0;
    std::uint64_t seed = 0;

    // fallthrough: parent flags (--json, --tolerance) may follow the subcommand name
    auto* validate = app.add_subcommand("validate", "parse and validate an instance file");
    validate->fallthrough();
    validate->add_option("path", path, "instance file")->required();

    auto* check = app.add_subcommand("check", "check a theorem's hypotheses and conclusion");
    check->fallthrough();
    check->add_option("path", path, "instance file")->required();
    check->add_option("--theorem", theorem, "T1, T2 or T5")->capture_default_str();
    check->add_option("--alpha", alpha, "fixed alpha for T5 (default: scan the 0.1..0.9 grid)");
    check->add_flag("--force-alarm", force_alarm,
                    "testing: force the soundness-alarm exit path (code 4)");

    auto* reduce = app.add_subcommand(
        "reduce", "build the chain metric e and certify the reduction to a Banach contraction");
    reduce->fallthrough();
    reduce->add_option("path", path, "instance file")->required();

    auto* solve = app.add_subcommand("solve", "run Picard iteration and classify the limits");
    solve->fallthrough();
    solve->add_option("path", path, "instance file")->required();
    solve->add_option("--start", start, "start point name (default: every point)");

    auto* search = app.add_subcommand("search",
                                      "randomized hypothesis-ablation counterexample search");
    search->fallthrough();
    search->add_option("--theorem", theorem, "T1, T2 or T5")->capture_default_str();
    search->add_option("--drop", drop, "hypothesis id to drop, or \"none\"")->capture_default_str();
    search->add_option("--budget", budget, "instances to generate")->capture_default_str();
    search->add_option("--seed", seed, "base seed; instance i uses seed XOR i")
        ->capture_default_str();
    search->add_option("--n", n, "fixed point-count (default: sample n in 3..6)");
    search->add_option("--out", out_dir, "directory for witness files")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(path, opts);
        if (check->parsed()) return run_check(path, theorem, alpha, force_alarm, opts);
        if (reduce->parsed()) return run_reduce(path, opts);
        if (solve->parsed()) return run_solve(path, start, opts);
        if (search->parsed()) return run_search(theorem, drop, budget, seed, n, out_dir, opts);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;  // outside the 0-5 contract on purpose: this is a bug, not an input problem
    }
    return kExitOk;
}
