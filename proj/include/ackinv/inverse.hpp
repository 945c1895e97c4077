#pragma once

#include <cstdint>
#include <vector>

#include "ackinv/bignat.hpp"

namespace ackinv {

// Descent record behind inv_ack(level, m): after the start value, each entry
// is the level-1 inverse of its predecessor, ending at the first value <= 1
// (immediately, when the start itself is <= 1). The inverse equals
// step_count().
struct InverseTrace {
    std::uint64_t level = 0;
    BigNat start;
    std::vector<std::uint64_t> tail;

    std::uint64_t step_count() const { return tail.size(); }
};

// Least j with A(level, j) >= m, for machine-word m.
std::uint64_t inv_ack_u64(std::uint64_t level, std::uint64_t m);

// Least j with A(level, j) >= m. Linear in the size of m: the only pass over
// the full input computes its bit length, everything after runs on machine
// words.
std::uint64_t inv_ack(std::uint64_t level, const BigNat& m);

// Requires level >= 1.
InverseTrace inv_trace(std::uint64_t level, const BigNat& m);

// Ceiling log2 applied `applications` times (at least one); applications
// beyond the first operate on a machine word.
std::uint64_t iter_log(const BigNat& m, std::uint64_t applications);

// Least k with the diagonal A(k, k) at or above m.
std::uint64_t alpha(const BigNat& m);

// alpha of the double log. Differs from alpha by at most 2.
std::uint64_t alpha_approx(const BigNat& m);

namespace detail {

// rho[j] = inv_ack(j, m) for every j up to top_level, sharing the single
// full scan of m that produces rho[0].
std::vector<std::uint64_t> inv_ack_levels(const BigNat& m, std::uint64_t top_level);

}  // namespace detail

}  // namespace ackinv
