#include "ackinv/inverse.hpp"

#include <stdexcept>

#include "ackinv/cost.hpp"
#include "ackinv/witness.hpp"

namespace ackinv {

std::uint64_t inv_ack_u64(std::uint64_t level, std::uint64_t m) {
    if (m <= 1) return 0;
    if (level == 0) return ceil_log2_u64(m);
    if (level >= 3) {
        // A(3, 3) is an iterated-exponential tower of height 65534, so from
        // level 3 up the inverse of any 64-bit value is at most 3.
        charge(1);
        if (m <= 2) return 1;
        return m <= 4 ? 2 : 3;
    }
    std::uint64_t cur = inv_ack_u64(level - 1, m);
    std::uint64_t steps = 1;
    while (cur > 1) {
        cur = inv_ack_u64(level - 1, cur);
        ++steps;
        charge(1);
    }
    return steps;
}

namespace detail {

std::vector<std::uint64_t> inv_ack_levels(const BigNat& m, std::uint64_t top_level) {
    std::vector<std::uint64_t> rho(top_level + 1, 0);
    rho[0] = ceil_log2(m);  // the one pass over the big input
    if (m.size() == 1) return rho;  // 0 and 1 invert to 0 at every level
    for (std::uint64_t j = 1; j <= top_level; ++j) {
        // The level-j descent from m starts at the level-(j-1) inverse of m,
        // which is rho[j-1]; from there on plain words suffice.
        std::uint64_t cur = rho[j - 1];
        std::uint64_t steps = 1;
        while (cur > 1) {
            cur = inv_ack_u64(j - 1, cur);
            ++steps;
            charge(1);
        }
        rho[j] = steps;
    }
    return rho;
}

}  // namespace detail

std::uint64_t inv_ack(std::uint64_t level, const BigNat& m) {
    return detail::inv_ack_levels(m, level)[level];
}

InverseTrace inv_trace(std::uint64_t level, const BigNat& m) {
    if (level == 0) throw std::invalid_argument("trace level must be at least 1");
    InverseTrace trace;
    trace.level = level;
    trace.start = m;
    if (m.size() == 1) return trace;  // 0 and 1 need no steps
    std::uint64_t cur = inv_ack(level - 1, m);
    trace.tail.push_back(cur);
    while (cur > 1) {
        cur = inv_ack_u64(level - 1, cur);
        trace.tail.push_back(cur);
        charge(1);
    }
    return trace;
}

std::uint64_t iter_log(const BigNat& m, std::uint64_t applications) {
    if (applications == 0)
        throw std::invalid_argument("iter_log needs at least one application");
    std::uint64_t value = ceil_log2(m);
    for (std::uint64_t i = 1; i < applications; ++i) {
        value = ceil_log2_u64(value);
        charge(1);
    }
    return value;
}

std::uint64_t alpha(const BigNat& m) {
    auto rho = detail::inv_ack_levels(m, 3);
    for (std::uint64_t k = 0; k <= 3; ++k) {
        charge(1);
        if (rho[k] <= k) return k;
    }
    // The level-3 diagonal is still below m. No input that fits in memory
    // gets here (the level-3 inverse of anything under the bit budget is at
    // most 3), but the scan over higher diagonals stays available for
    // hypothetical parameters.
    std::uint64_t log2m = ceil_log2_u64(rho[0]);
    std::uint64_t log3m = ceil_log2_u64(log2m);
    std::uint64_t log4m = ceil_log2_u64(log3m);
    return alpha_by_witness_scan(log2m, log4m, rho[3]);
}

std::uint64_t alpha_approx(const BigNat& m) {
    return alpha(BigNat(iter_log(m, 2)));
}

}  // namespace ackinv
