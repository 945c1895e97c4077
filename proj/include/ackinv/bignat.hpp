#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ackinv/cost.hpp"
#include "ackinv/errors.hpp"

namespace ackinv {

// Hard ceiling on materialized value sizes. 2^26 bits is 8 MiB, far beyond
// anything the algorithms here need, yet small enough that a runaway
// computation fails fast instead of swapping.
inline constexpr std::uint64_t kDefaultBitBudget = std::uint64_t{1} << 26;

// Natural number stored as a little-endian bit sequence. The representation
// is canonical: the highest stored bit is 1, except zero, which is the single
// bit 0. Only the primitives the inverse-Ackermann pipeline needs exist;
// there is deliberately no general arithmetic.
class BigNat {
public:
    BigNat() : bits_{false} {}
    explicit BigNat(std::uint64_t value);

    // Accepts any little-endian digit vector and trims high zeros.
    static BigNat from_bits(std::vector<bool> little_endian);
    // Most-significant digit first, '0'/'1' only; leading zeros tolerated.
    static BigNat from_binary(std::string_view text);
    // Plain decimal digits. The optional budget caps the materialized size,
    // checked while the digits are being absorbed.
    static BigNat from_decimal(std::string_view text,
                               std::uint64_t bit_budget = UINT64_MAX);
    static BigNat power_of_two(std::uint64_t exponent);

    std::uint64_t size() const noexcept { return bits_.size(); }
    // Digit i, where digits beyond the stored length read as zero.
    bool digit(std::uint64_t i) const noexcept { return i < bits_.size() && bits_[i]; }
    bool is_zero() const noexcept { return bits_.size() == 1 && !bits_[0]; }

    std::optional<std::uint64_t> try_to_u64() const;
    std::string to_binary_string() const;

    std::strong_ordering operator<=>(const BigNat& other) const {
        return compare(*this, other);
    }
    bool operator==(const BigNat& other) const {
        return compare(*this, other) == std::strong_ordering::equal;
    }

    friend std::strong_ordering compare(const BigNat& a, const BigNat& b);
    friend std::uint64_t bit_length(const BigNat& n);
    friend bool is_power_of_two(const BigNat& n);
    friend BigNat succ(const BigNat& n);
    friend BigNat pred(const BigNat& n);

private:
    std::vector<bool> bits_;
};

std::strong_ordering compare(const BigNat& a, const BigNat& b);

// Number of digits, with bit_length(0) = 1. Walks the whole representation:
// reading a number's length means scanning its digits once, and the cost
// meter relies on this operation reflecting input-length cost.
std::uint64_t bit_length(const BigNat& n);

// Scans from the low end and stops at the first set digit.
bool is_power_of_two(const BigNat& n);

// Ceiling base-2 logarithm, with 0 and 1 both mapping to 0.
std::uint64_t ceil_log2(const BigNat& n);

BigNat succ(const BigNat& n);
// Throws std::underflow_error at zero.
BigNat pred(const BigNat& n);
// Throws std::overflow_error when the value needs more than 64 bits.
std::uint64_t to_small(const BigNat& n);

// Machine-word twins of bit_length and ceil_log2, charged to the same meter
// so small tail computations stay visible in cost accounting.
std::uint64_t bit_length_u64(std::uint64_t v);
std::uint64_t ceil_log2_u64(std::uint64_t v);

// Parsed input expression denoting a natural number. pow2 takes any literal
// as its exponent; tower(h, b) applies x -> 2^x to b, h times.
struct NumLiteral {
    enum class Kind { decimal, binary, hex, pow2, tower };

    Kind kind = Kind::decimal;
    std::string digits;
    std::unique_ptr<NumLiteral> inner;
    std::uint64_t tower_height = 0;
    std::uint64_t tower_base = 0;
};

// Grammar, with no whitespace anywhere:
//   literal := "0" | nonzero-decimal | "0b" {0|1}+ | "0x" hex+
//            | "pow2(" literal ")" | "tower(" decimal "," decimal ")"
NumLiteral parse_literal_tree(std::string_view text);
BigNat materialize(const NumLiteral& lit, std::uint64_t bit_budget);
BigNat parse_literal(std::string_view text,
                     std::uint64_t bit_budget = kDefaultBitBudget);

}  // namespace ackinv
