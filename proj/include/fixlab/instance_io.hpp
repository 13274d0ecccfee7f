#pragma once

#include <string>

#include <json.hpp>

#include "fixlab/theorem_lab.hpp"

namespace fixlab {

/// Parses an instance document. Accepts either an instance file proper or a
/// report file (its embedded "instance" member is used), so reports can be
/// re-fed as queries. Structural problems raise ParseError; semantic ones
/// (bad metric, bad order, non-total map) raise the matching validation error.
Instance parse_instance(const nlohmann::json& doc, double eps_val = kDefaultTolerance);
Instance parse_instance_text(const std::string& text, double eps_val = kDefaultTolerance);
Instance load_instance_file(const std::string& path, double eps_val = kDefaultTolerance);

/// Canonical instance document: points, metric matrix, order pairs, map,
/// label/seed when present. parse_instance round-trips it.
nlohmann::json instance_to_json(const Instance& instance);

std::string ext_dist_to_string(ExtDist v);

/// Matrix with "inf" literals for infinite entries.
nlohmann::json chain_metric_to_json(const ChainMetric& e);

nlohmann::json contraction_report_to_json(const ContractionReport& report,
                                          const Instance& instance);
nlohmann::json classification_to_json(const OperatorClassification& c, const Instance& instance);
nlohmann::json hypothesis_report_to_json(const HypothesisReport& report, const Instance& instance);
nlohmann::json theorem_report_to_json(const TheoremReport& report, const Instance& instance);
nlohmann::json picard_result_to_json(const PicardResult& r, const Instance& instance);
nlohmann::json step_function_to_json(const StepFunction& f);

/// Report header every CLI document carries: tool, version, tolerance, seed.
nlohmann::json report_header(double tolerance, std::optional<std::uint64_t> seed = {});

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace fixlab
