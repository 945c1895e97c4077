#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ackinv/bignat.hpp"

namespace ackinv {

struct BenchRecord {
    std::string op;
    std::uint64_t bits = 0;
    std::uint32_t rep = 0;
    std::uint64_t nanos = 0;
    std::uint64_t cost_units = 0;
};

// Deterministic pseudo-random value of exactly bit_len bits (top bit forced).
BigNat random_bits(std::uint64_t bit_len, std::uint64_t seed);

// Times alpha and the level 0..3 inverses on random inputs of every size.
// sizes must be strictly ascending, reps at least 3. The same seed and
// arguments give identical inputs, so the cost_units column is reproducible
// bit for bit; nanos is whatever the clock says.
std::vector<BenchRecord> run_bench(const std::vector<std::uint64_t>& sizes,
                                   std::uint32_t reps, std::uint64_t seed);

// Header "op,bits,rep,nanos,cost_units", one row per record.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

// Least-squares slope of log2(y) against log2(x). Points need x, y > 0.
double loglog_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace ackinv
