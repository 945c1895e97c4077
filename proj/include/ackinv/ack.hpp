#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "ackinv/bignat.hpp"

namespace ackinv {

// Budgeted evaluator for the fast-growing hierarchy
//   A(0, n) = 2^n,  A(k, 0) = 1,  A(k+1, n+1) = A(k, A(k+1, n)).
// Evaluation reports nullopt instead of materializing anything whose size
// would reach max_bits; the check runs before each exponentiation, so the
// evaluator itself never allocates past the budget.
class AckOracle {
public:
    explicit AckOracle(std::uint64_t max_bits = kDefaultBitBudget)
        : max_bits_(max_bits) {}

    std::optional<BigNat> eval(std::uint64_t level, std::uint64_t arg);
    std::optional<BigNat> diag(std::uint64_t n) { return eval(n, n); }

private:
    std::optional<BigNat> apply_base(const BigNat& value);
    void remember(std::uint64_t level, std::uint64_t arg, const BigNat& value);

    std::uint64_t max_bits_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, BigNat> memo_;
    std::uint64_t memo_bits_ = 0;

    // Caps the total bits held by memoized results so repeated evaluation
    // cannot hoard memory.
    static constexpr std::uint64_t kMemoBitCap = std::uint64_t{1} << 22;
};

std::optional<BigNat> ack_eval(std::uint64_t level, std::uint64_t arg,
                               std::uint64_t max_bits = kDefaultBitBudget);
std::optional<BigNat> ack_diag(std::uint64_t n,
                               std::uint64_t max_bits = kDefaultBitBudget);

}  // namespace ackinv
