#include "ackinv/bench.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "ackinv/cost.hpp"
#include "ackinv/errors.hpp"
#include "ackinv/inverse.hpp"

namespace ackinv {

namespace {

// Knuth's MMIX constants. Any fixed full-period 64-bit recurrence would do;
// the point is identical inputs on every platform.
struct Lcg {
    std::uint64_t state;

    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state;
    }
};

}  // namespace

BigNat random_bits(std::uint64_t bit_len, std::uint64_t seed) {
    if (bit_len == 0) return BigNat();
    std::vector<bool> bits(bit_len);
    Lcg rng{seed};
    std::uint64_t word = 0;
    for (std::uint64_t i = 0; i < bit_len; ++i) {
        if (i % 64 == 0) word = rng.next();
        bits[i] = ((word >> (i % 64)) & 1) != 0;
    }
    bits[bit_len - 1] = true;
    return BigNat::from_bits(std::move(bits));
}

std::vector<BenchRecord> run_bench(const std::vector<std::uint64_t>& sizes,
                                   std::uint32_t reps, std::uint64_t seed) {
    if (reps < 3) throw std::invalid_argument("need at least 3 repetitions");
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1])
            throw std::invalid_argument("sizes must be strictly ascending");
    for (std::uint64_t size : sizes)
        if (size > kDefaultBitBudget)
            throw BudgetExceeded("bench size exceeds the bit budget");

    const std::array<const char*, 5> ops{"alpha", "inv_k0", "inv_k1", "inv_k2", "inv_k3"};
    std::vector<BenchRecord> records;
    records.reserve(sizes.size() * ops.size() * reps);
    volatile std::uint64_t sink = 0;

    for (std::uint64_t size : sizes) {
        // One input per rep, shared across the ops so their costs are
        // comparable within a row group.
        std::vector<BigNat> inputs;
        inputs.reserve(reps);
        for (std::uint32_t rep = 0; rep < reps; ++rep) {
            std::uint64_t mixed = seed ^ (size * 0x9E3779B97F4A7C15ULL) ^
                                  (std::uint64_t{rep} * 0xBF58476D1CE4E5B9ULL);
            inputs.push_back(random_bits(size, mixed));
        }
        for (std::size_t op = 0; op < ops.size(); ++op) {
            for (std::uint32_t rep = 0; rep < reps; ++rep) {
                CostMeter meter;
                std::uint64_t result = 0;
                auto start = std::chrono::steady_clock::now();
                {
                    MeterScope scope(meter);
                    result = op == 0 ? alpha(inputs[rep]) : inv_ack(op - 1, inputs[rep]);
                }
                auto stop = std::chrono::steady_clock::now();
                sink = sink + result;
                auto nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start);
                records.push_back({ops[op], size, rep,
                                   static_cast<std::uint64_t>(nanos.count()),
                                   meter.count()});
            }
        }
    }
    (void)sink;
    return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "op,bits,rep,nanos,cost_units\n";
    for (const BenchRecord& r : records)
        out << r.op << ',' << r.bits << ',' << r.rep << ',' << r.nanos << ','
            << r.cost_units << '\n';
}

double loglog_slope(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2)
        throw std::invalid_argument("slope needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : points) {
        double lx = std::log2(x);
        double ly = std::log2(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double count = static_cast<double>(points.size());
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace ackinv
