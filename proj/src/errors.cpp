#include "fixlab/errors.hpp"

#include <sstream>

namespace fixlab {

std::string_view errc_name(errc code) {
    switch (code) {
        case errc::asymmetric: return "Asymmetric";
        case errc::negative_distance: return "NegativeDistance";
        case errc::nonzero_diagonal: return "NonzeroDiagonal";
        case errc::triangle_violation: return "TriangleViolation";
        case errc::zero_distance_distinct: return "ZeroDistanceDistinct";
        case errc::duplicate_point: return "DuplicatePoint";
        case errc::antisymmetry_violation: return "AntisymmetryViolation";
        case errc::space_too_large: return "SpaceTooLarge";
        case errc::domain_error: return "DomainError";
        case errc::generation_budget_exhausted: return "GenerationBudgetExhausted";
        case errc::not_applicable: return "NotApplicable";
        case errc::non_monotone_profile: return "NonMonotoneProfile";
        case errc::parse_error: return "ParseError";
        case errc::unknown_point: return "UnknownPoint";
        case errc::io_error: return "IoError";
        case errc::bad_instance: return "BadInstance";
    }
    return "UnknownError";
}

namespace {

std::string msg2(std::string_view what, std::size_t i, std::size_t j) {
    std::ostringstream os;
    os << what << "(" << i << "," << j << ")";
    return os.str();
}

}  // namespace

Error Error::asymmetric(std::size_t i, std::size_t j) {
    return Error(errc::asymmetric, msg2("Asymmetric", i, j), i, j);
}

Error Error::negative_distance(std::size_t i, std::size_t j) {
    return Error(errc::negative_distance, msg2("NegativeDistance", i, j), i, j);
}

Error Error::nonzero_diagonal(std::size_t i) {
    std::ostringstream os;
    os << "NonzeroDiagonal(" << i << ")";
    return Error(errc::nonzero_diagonal, os.str(), i);
}

Error Error::triangle_violation(std::size_t i, std::size_t j, std::size_t k, double defect) {
    std::ostringstream os;
    os << "TriangleViolation(" << i << "," << j << "," << k << ", defect=" << defect << ")";
    return Error(errc::triangle_violation, os.str(), i, j, k, defect);
}

Error Error::zero_distance_distinct(std::size_t i, std::size_t j) {
    return Error(errc::zero_distance_distinct, msg2("ZeroDistanceDistinct", i, j), i, j);
}

Error Error::duplicate_point(std::size_t i, std::size_t j) {
    return Error(errc::duplicate_point, msg2("DuplicatePoint", i, j), i, j);
}

Error Error::antisymmetry_violation(std::size_t i, std::size_t j) {
    return Error(errc::antisymmetry_violation, msg2("AntisymmetryViolation", i, j), i, j);
}

Error Error::space_too_large(std::size_t n, std::size_t cap) {
    std::ostringstream os;
    os << "SpaceTooLarge(n=" << n << ", cap=" << cap << ")";
    return Error(errc::space_too_large, os.str(), n, cap);
}

Error Error::domain(std::string message) {
    return Error(errc::domain_error, "DomainError: " + std::move(message));
}

Error Error::generation_budget_exhausted(std::string config, std::uint64_t seed) {
    std::ostringstream os;
    os << "GenerationBudgetExhausted(" << config << ", seed=" << seed << ")";
    return Error(errc::generation_budget_exhausted, os.str());
}

Error Error::not_applicable(std::string hypothesis_id) {
    return Error(errc::not_applicable, "NotApplicable(" + hypothesis_id + ")");
}

Error Error::parse(std::string message) {
    return Error(errc::parse_error, "ParseError: " + std::move(message));
}

Error Error::unknown_point(std::string name) {
    return Error(errc::unknown_point, "UnknownPoint: " + std::move(name));
}

Error Error::io(std::string message) {
    return Error(errc::io_error, "IoError: " + std::move(message));
}

Error Error::bad_instance(std::string message) {
    return Error(errc::bad_instance, "BadInstance: " + std::move(message));
}

}  // namespace fixlab
