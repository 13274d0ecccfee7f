#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace fixlab {

enum class errc {
    asymmetric,
    negative_distance,
    nonzero_diagonal,
    triangle_violation,
    zero_distance_distinct,
    duplicate_point,
    antisymmetry_violation,
    space_too_large,
    domain_error,
    generation_budget_exhausted,
    not_applicable,
    non_monotone_profile,
    parse_error,
    unknown_point,
    io_error,
    bad_instance,
};

std::string_view errc_name(errc code);

/// Structured rejection: every validation failure carries a machine-readable
/// code plus the indices/defect needed to reproduce it.
class Error : public std::runtime_error {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    Error(errc code, std::string message, std::size_t i = npos, std::size_t j = npos,
          std::size_t k = npos, double defect = 0.0)
        : std::runtime_error(std::move(message)), code(code), index{i, j, k}, defect(defect) {}

    errc code;
    std::array<std::size_t, 3> index;
    double defect;

    static Error asymmetric(std::size_t i, std::size_t j);
    static Error negative_distance(std::size_t i, std::size_t j);
    static Error nonzero_diagonal(std::size_t i);
    static Error triangle_violation(std::size_t i, std::size_t j, std::size_t k, double defect);
    static Error zero_distance_distinct(std::size_t i, std::size_t j);
    static Error duplicate_point(std::size_t i, std::size_t j);
    static Error antisymmetry_violation(std::size_t i, std::size_t j);
    static Error space_too_large(std::size_t n, std::size_t cap);
    static Error domain(std::string message);
    static Error generation_budget_exhausted(std::string config, std::uint64_t seed);
    static Error not_applicable(std::string hypothesis_id);
    static Error parse(std::string message);
    static Error unknown_point(std::string name);
    static Error io(std::string message);
    static Error bad_instance(std::string message);
};

}  // namespace fixlab
