#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ackinv/bignat.hpp"

namespace ackinv {

inline constexpr std::uint64_t kDefaultLabelBudget = 1'000'000;

// One certificate line. value > 0 states "A(level, arg) = value"; value == 0
// states "A(level, arg) is below the bound under proof".
struct Label {
    std::uint64_t level = 0;
    std::uint64_t arg = 0;
    std::uint64_t value = 0;

    // Field order gives exactly the order certificates are listed in.
    auto operator<=>(const Label&) const = default;
};

std::uint64_t label_code(const Label& label);
Label label_from_code(std::uint64_t code);

// Certificate that A(k, n) < m, for an m that may exist only through its
// level-3 inverse r: sorted labels closed under the derivation rules, ending
// with the claim label (k, n, 0).
struct WitnessSeq {
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    std::uint64_t r = 0;
    std::vector<Label> labels;

    std::vector<std::uint64_t> codes() const;
    BigNat to_seq_code() const;
};

enum class BuildOutcome { built, refuted, budget_exceeded };

struct BuildResult {
    BuildOutcome outcome = BuildOutcome::refuted;
    WitnessSeq witness;  // meaningful only when outcome == built
};

// Constructs the certificate for A(k, n) < m where r = inv_ack(3, m), or
// refutes the claim. Requires k >= 4 and n >= 3 (below that the question has
// closed-form answers and needs no certificate).
BuildResult build_lt_witness(std::uint64_t k, std::uint64_t n, std::uint64_t r,
                             std::uint64_t label_budget = kDefaultLabelBudget);

// Checks a certificate against the derivation rules. Each entry must be a
// leaf (a base power, a zeroth iterate, or a level-3 claim below r) or be
// supported by two strictly earlier entries. Malformed input yields false,
// never an exception.
bool verify_lt_certificate(const std::vector<std::uint64_t>& entries,
                           std::uint64_t k, std::uint64_t n, std::uint64_t r);
bool verify_lt_certificate(const BigNat& seq_code,
                           std::uint64_t k, std::uint64_t n, std::uint64_t r);
bool verify_lt_certificate(const WitnessSeq& witness,
                           std::uint64_t k, std::uint64_t n, std::uint64_t r);

// Decides A(k, n) < m for arbitrary k, n and materialized m.
bool ack_less_than(std::uint64_t k, std::uint64_t n, const BigNat& m,
                   std::uint64_t label_budget = kDefaultLabelBudget);

// Decides A(k, n) = m, as the conjunction of "below m+1" and "not below m".
bool ack_equals(std::uint64_t k, std::uint64_t n, const BigNat& m,
                std::uint64_t label_budget = kDefaultLabelBudget);

// Scan over diagonal levels j = 4..log4m for the least j whose certificate
// for "A(j, j) < m" fails to exist, where rho3 is the level-3 inverse of m
// and log4m its four-fold log. Serves the alpha computation once the level-3
// diagonal is exhausted; inputs this large cannot be materialized, so the
// parameters arrive precomputed. Requires log4m >= 4 and rho3 > 3. The
// log2m_bound parameter carries the double-log guard, vacuous here because
// scanned levels stay below log4m.
std::uint64_t alpha_by_witness_scan(std::uint64_t log2m_bound, std::uint64_t log4m,
                                    std::uint64_t rho3,
                                    std::uint64_t label_budget = kDefaultLabelBudget);

// Conformance helper: smallest sequence code at or below max_code that
// verifies for (k, n, r), if any. Exponential in the code width; meant for
// cross-checking the constructive path on tiny instances only.
std::optional<std::uint64_t> find_certificate_by_scan(std::uint64_t k, std::uint64_t n,
                                                      std::uint64_t r,
                                                      std::uint64_t max_code);

struct WitnessFile {
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    std::uint64_t r = 0;
    BigNat code;
};

// On-disk format: a header line "k n r" in decimal, then the sequence code
// as one binary line.
void write_witness_file(const std::string& path, const WitnessSeq& witness);
WitnessFile read_witness_file(const std::string& path);

}  // namespace ackinv
