#include "fixlab/exact_sum.hpp"

#include <bit>
#include <cassert>
#include <cmath>

namespace fixlab {

void ExactSum::add(double x) {
    assert(std::isfinite(x) && x >= 0.0);
    if (x == 0.0) return;

    const std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
    const std::uint64_t raw_exp = (bits >> 52) & 0x7FF;
    const std::uint64_t frac = bits & ((std::uint64_t{1} << 52) - 1);
    const std::uint64_t sig = raw_exp ? (std::uint64_t{1} << 52) | frac : frac;
    const int exp2 = static_cast<int>(raw_exp ? raw_exp : 1) - 1075;

    const int pos = exp2 + kBias;  // bit position of sig's bit 0; >= 78
    const int word = pos / 64;
    const int off = pos % 64;

    std::uint64_t carry = 0;
    std::uint64_t lo = sig << off;
    std::uint64_t sum = limbs_[word] + lo;
    carry = sum < lo ? 1 : 0;
    limbs_[word] = sum;

    std::uint64_t hi = off ? sig >> (64 - off) : 0;
    for (int i = word + 1; i < kLimbs && (hi || carry); ++i) {
        std::uint64_t add = hi + carry;
        carry = add < hi ? 1 : 0;  // hi + carry can itself wrap
        hi = 0;
        sum = limbs_[i] + add;
        carry += sum < add ? 1 : 0;
        limbs_[i] = sum;
    }
    assert(carry == 0);
}

void ExactSum::add(const ExactSum& other) {
    std::uint64_t carry = 0;
    for (int i = 0; i < kLimbs; ++i) {
        std::uint64_t a = limbs_[i];
        std::uint64_t b = other.limbs_[i];
        std::uint64_t sum = a + b;
        std::uint64_t c1 = sum < a ? 1 : 0;
        std::uint64_t sum2 = sum + carry;
        std::uint64_t c2 = sum2 < sum ? 1 : 0;
        limbs_[i] = sum2;
        carry = c1 | c2;
    }
    assert(carry == 0);
}

bool ExactSum::is_zero() const {
    for (int i = 0; i < kLimbs; ++i)
        if (limbs_[i]) return false;
    return true;
}

std::strong_ordering ExactSum::operator<=>(const ExactSum& other) const {
    for (int i = kLimbs - 1; i >= 0; --i) {
        if (limbs_[i] != other.limbs_[i])
            return limbs_[i] < other.limbs_[i] ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

namespace {

// Bits [pos, pos+len) of the limb array, len <= 63.
std::uint64_t window(const std::array<std::uint64_t, 36>& limbs, int pos, int len) {
    const int word = pos / 64;
    const int off = pos % 64;
    std::uint64_t v = limbs[static_cast<std::size_t>(word)] >> off;
    if (off && word + 1 < 36) v |= limbs[static_cast<std::size_t>(word + 1)] << (64 - off);
    return v & ((std::uint64_t{1} << len) - 1);
}

bool any_bit_below(const std::array<std::uint64_t, 36>& limbs, int pos) {
    const int word = pos / 64;
    const int off = pos % 64;
    for (int i = 0; i < word; ++i)
        if (limbs[static_cast<std::size_t>(i)]) return true;
    if (off && (limbs[static_cast<std::size_t>(word)] & ((std::uint64_t{1} << off) - 1)))
        return true;
    return false;
}

}  // namespace

double ExactSum::round() const {
    int top = kLimbs - 1;
    while (top >= 0 && limbs_[static_cast<std::size_t>(top)] == 0) --top;
    if (top < 0) return 0.0;

    const int high_bit = 64 * top + (63 - std::countl_zero(limbs_[static_cast<std::size_t>(top)]));
    const int value_exp = high_bit - kBias;

    // Least significant kept bit; clamped so subnormal results round in place.
    const int target_lsb = value_exp - 52 > -1074 ? value_exp - 52 : -1074;
    const int p_lsb = target_lsb + kBias;  // >= 78, so a guard bit always exists
    const int width = high_bit - p_lsb + 1;

    std::uint64_t mant = window(limbs_, p_lsb, width);
    const bool guard = window(limbs_, p_lsb - 1, 1) != 0;
    const bool sticky = any_bit_below(limbs_, p_lsb - 1);
    if (guard && (sticky || (mant & 1))) ++mant;

    return std::ldexp(static_cast<double>(mant), target_lsb);
}

}  // namespace fixlab
