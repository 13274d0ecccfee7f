#pragma once

#include <array>
#include <compare>
#include <cstdint>

namespace fixlab {

/// Exact accumulator for sums of nonnegative finite doubles.
///
/// The value is held as a 2304-bit fixed-point integer (scale 2^-1152),
/// wide enough for any sum of up to 2^63 doubles, so addition is exact and
/// the represented value is independent of summation order. round() returns
/// the nearest double (ties to even), i.e. the correctly rounded sum.
///
/// Chain-metric values are defined through this type: a chain's length is
/// the correctly rounded exact sum of its edge weights, which makes the
/// fast all-pairs computation and the brute-force chain enumeration agree
/// bit-for-bit by construction.
class ExactSum {
public:
    ExactSum() = default;

    /// Adds a finite, nonnegative double. Negative, NaN or infinite input
    /// is a programming error and trips an assert in debug builds.
    void add(double x);

    void add(const ExactSum& other);

    /// Nearest-even double of the exact value; +inf if it overflows.
    double round() const;

    bool is_zero() const;

    std::strong_ordering operator<=>(const ExactSum& other) const;
    bool operator==(const ExactSum& other) const = default;

private:
    // limbs_[i] holds bits [64*i, 64*i+64) of value * 2^kBias, little-endian.
    static constexpr int kLimbs = 36;
    static constexpr int kBias = 1152;
    std::array<std::uint64_t, kLimbs> limbs_{};
};

}  // namespace fixlab
