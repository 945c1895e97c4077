#include "ackinv/witness.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "ackinv/cost.hpp"
#include "ackinv/encoding.hpp"
#include "ackinv/errors.hpp"
#include "ackinv/inverse.hpp"

namespace ackinv {

std::uint64_t label_code(const Label& label) {
    return cantor_triple(label.level, label.arg, label.value);
}

Label label_from_code(std::uint64_t code) {
    auto parts = cantor_untriple(code);
    return Label{parts[0], parts[1], parts[2]};
}

std::vector<std::uint64_t> WitnessSeq::codes() const {
    std::vector<std::uint64_t> out;
    out.reserve(labels.size());
    for (const Label& label : labels) out.push_back(label_code(label));
    return out;
}

BigNat WitnessSeq::to_seq_code() const {
    return seq_encode(codes());
}

namespace {

// Unrolls the derivation of "A(k, n) < m" when all that is known about m is
// r = inv_ack(3, m). The chain steps down one level at a time, and every
// equality value feeding it has to stay below r: the chain ends at a level-3
// claim that is acceptable only below r, and the chain arguments never
// shrink on the way down. Value computation is therefore capped at r, and
// hitting the cap refutes the claim outright.
class WitnessBuilder {
public:
    WitnessBuilder(std::uint64_t r, std::uint64_t budget) : r_(r), budget_(budget) {}

    BuildOutcome run(std::uint64_t k, std::uint64_t n) {
        std::uint64_t cur_level = k;
        std::uint64_t cur_arg = n;
        while (cur_level >= 4) {
            auto value = eq_value(cur_level, cur_arg - 1);
            if (!value)
                return over_budget_ ? BuildOutcome::budget_exceeded : BuildOutcome::refuted;
            if (!emit({cur_level, cur_arg, 0})) return BuildOutcome::budget_exceeded;
            --cur_level;
            cur_arg = *value;
        }
        if (cur_arg >= r_) return BuildOutcome::refuted;
        if (!emit({3, cur_arg, 0})) return BuildOutcome::budget_exceeded;
        return BuildOutcome::built;
    }

    std::vector<Label> sorted_labels() const { return {labels_.begin(), labels_.end()}; }

private:
    bool emit(Label label) {
        labels_.insert(label);
        charge(1);
        if (labels_.size() > budget_) {
            over_budget_ = true;
            return false;
        }
        return true;
    }

    // Computes A(level, target) together with the equality labels a verifier
    // needs to rebuild it. nullopt means a value reached r (the claim is
    // refuted) or, when the budget flag is set, that labels ran out.
    std::optional<std::uint64_t> eq_value(std::uint64_t level, std::uint64_t target) {
        struct Goal {
            std::uint64_t level;
            std::uint64_t target;
        };
        std::vector<Goal> work{{level, target}};
        while (!work.empty()) {
            auto [lvl, tgt] = work.back();
            std::vector<std::uint64_t>& vals = values_[lvl];
            if (vals.empty()) {
                vals.push_back(1);
                if (!emit({lvl, 0, 1})) return std::nullopt;
            }
            if (vals.size() > tgt) {
                work.pop_back();
                continue;
            }
            std::uint64_t prev = vals.back();
            std::uint64_t next_value = 0;
            if (lvl == 1) {
                if (prev >= 64 || (std::uint64_t{1} << prev) >= r_) return std::nullopt;
                next_value = std::uint64_t{1} << prev;
                if (!emit({0, prev, next_value})) return std::nullopt;
            } else {
                const std::vector<std::uint64_t>& sub = values_[lvl - 1];
                if (sub.size() <= prev) {
                    work.push_back({lvl - 1, prev});
                    continue;
                }
                next_value = sub[prev];
            }
            vals.push_back(next_value);
            if (!emit({lvl, vals.size() - 1, next_value})) return std::nullopt;
            charge(1);
        }
        return values_[level][target];
    }

    std::uint64_t r_;
    std::uint64_t budget_;
    bool over_budget_ = false;
    std::set<Label> labels_;
    // values_[L][j] = A(L, j), every stored value below r.
    std::map<std::uint64_t, std::vector<std::uint64_t>> values_;
};

}  // namespace

BuildResult build_lt_witness(std::uint64_t k, std::uint64_t n, std::uint64_t r,
                             std::uint64_t label_budget) {
    if (k < 4) throw std::invalid_argument("witness level must be at least 4");
    if (n < 3) throw std::invalid_argument("witness argument must be at least 3");
    WitnessBuilder builder(r, label_budget);
    BuildResult result;
    result.outcome = builder.run(k, n);
    if (result.outcome == BuildOutcome::built) {
        result.witness.k = k;
        result.witness.n = n;
        result.witness.r = r;
        result.witness.labels = builder.sorted_labels();
    }
    return result;
}

namespace {

bool is_leaf(std::uint64_t u, std::uint64_t v, std::uint64_t w, std::uint64_t r) {
    if (u == 0 && v < 64 && w == (std::uint64_t{1} << v)) return true;  // base power
    if (v == 0 && w == 1) return true;                                  // zeroth iterate
    if (u == 3 && w == 0 && v < r) return true;                         // threshold claim
    return false;
}

}  // namespace

bool verify_lt_certificate(const std::vector<std::uint64_t>& entries,
                           std::uint64_t k, std::uint64_t n, std::uint64_t r) {
    if (entries.empty()) return false;
    std::uint64_t claim;
    try {
        claim = cantor_triple(k, n, 0);
    } catch (const std::overflow_error&) {
        return false;
    }
    if (entries.back() != claim) return false;

    std::unordered_set<std::uint64_t> seen;
    // Equality values grouped by (level, arg), for locating the w' that
    // supports a step label.
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::uint64_t>> eq_values;
    for (std::uint64_t code : entries) {
        auto [u, v, w] = cantor_untriple(code);
        bool ok = is_leaf(u, v, w, r);
        if (!ok && u >= 1 && v >= 1) {
            // Step rule: some earlier (u, v-1, w') with w' > 0 plus an
            // earlier (u-1, w', w) justify (u, v, w).
            if (auto it = eq_values.find({u, v - 1}); it != eq_values.end()) {
                for (std::uint64_t wp : it->second) {
                    std::uint64_t support;
                    try {
                        support = cantor_triple(u - 1, wp, w);
                    } catch (const std::overflow_error&) {
                        continue;
                    }
                    if (seen.contains(support)) {
                        ok = true;
                        break;
                    }
                }
            }
        }
        if (!ok) return false;
        seen.insert(code);
        if (w > 0) eq_values[{u, v}].push_back(w);
        charge(4);
    }
    return true;
}

bool verify_lt_certificate(const BigNat& seq_code,
                           std::uint64_t k, std::uint64_t n, std::uint64_t r) {
    if (!seq_is_valid(seq_code)) return false;
    std::vector<std::uint64_t> entries;
    try {
        entries = seq_decode(seq_code);
    } catch (const std::overflow_error&) {
        return false;
    }
    return verify_lt_certificate(entries, k, n, r);
}

bool verify_lt_certificate(const WitnessSeq& witness,
                           std::uint64_t k, std::uint64_t n, std::uint64_t r) {
    std::vector<std::uint64_t> entries;
    entries.reserve(witness.labels.size());
    try {
        for (const Label& label : witness.labels) entries.push_back(label_code(label));
    } catch (const std::overflow_error&) {
        return false;
    }
    return verify_lt_certificate(entries, k, n, r);
}

bool ack_less_than(std::uint64_t k, std::uint64_t n, const BigNat& m,
                   std::uint64_t label_budget) {
    if (n <= 2) {
        // A(k, 0) = 1, A(k, 1) = 2, A(k, 2) = 4 at every level.
        std::uint64_t value = n == 0 ? 1 : (n == 1 ? 2 : 4);
        return compare(m, BigNat(value)) > 0;
    }
    if (k <= 3) {
        // A(k, n) < m exactly when the inverse at m lands beyond n.
        return inv_ack(k, m) > n;
    }
    std::uint64_t loglog = iter_log(m, 2);
    if (k > loglog || n > loglog) return false;  // A(k, n) outgrows m already
    std::uint64_t rm = inv_ack(3, m);
    if (rm <= 3) return false;  // m at or below the level-3 diagonal
    BuildResult result = build_lt_witness(k, n, rm, label_budget);
    if (result.outcome == BuildOutcome::budget_exceeded)
        throw BudgetExceeded("witness label budget exhausted");
    if (result.outcome == BuildOutcome::refuted) return false;
    return verify_lt_certificate(result.witness, k, n, rm);
}

bool ack_equals(std::uint64_t k, std::uint64_t n, const BigNat& m,
                std::uint64_t label_budget) {
    return ack_less_than(k, n, succ(m), label_budget) &&
           !ack_less_than(k, n, m, label_budget);
}

std::uint64_t alpha_by_witness_scan(std::uint64_t log2m_bound, std::uint64_t log4m,
                                    std::uint64_t rho3, std::uint64_t label_budget) {
    (void)log2m_bound;  // implied by j <= log4m for any consistent input
    if (log4m < 4) throw std::invalid_argument("scan needs log4m >= 4");
    if (rho3 <= 3) throw std::invalid_argument("scan needs rho3 > 3");
    for (std::uint64_t j = 4; j <= log4m; ++j) {
        BuildResult result = build_lt_witness(j, j, rho3, label_budget);
        if (result.outcome == BuildOutcome::budget_exceeded)
            throw BudgetExceeded("witness label budget exhausted");
        if (result.outcome == BuildOutcome::refuted) return j;  // diagonal reached m
        if (!verify_lt_certificate(result.witness, j, j, rho3))
            throw std::logic_error("constructed witness failed verification");
    }
    // Every diagonal up to the bound stayed below m. Consistent parameters
    // cannot do this: the level-4 diagonal dwarfs any threshold that fits a
    // machine word.
    throw std::domain_error("witness scan exhausted; parameters are inconsistent");
}

std::optional<std::uint64_t> find_certificate_by_scan(std::uint64_t k, std::uint64_t n,
                                                      std::uint64_t r,
                                                      std::uint64_t max_code) {
    for (std::uint64_t code = 0;; ++code) {
        BigNat s(code);
        if (seq_is_valid(s)) {
            bool good = false;
            try {
                good = verify_lt_certificate(seq_decode(s), k, n, r);
            } catch (const std::overflow_error&) {
                good = false;
            }
            if (good) return code;
        }
        if (code == max_code) break;
    }
    return std::nullopt;
}

void write_witness_file(const std::string& path, const WitnessSeq& witness) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << witness.k << ' ' << witness.n << ' ' << witness.r << '\n'
        << witness.to_seq_code().to_binary_string() << '\n';
    if (!out) throw std::runtime_error("failed writing " + path);
}

WitnessFile read_witness_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string header;
    std::string codeline;
    if (!std::getline(in, header) || !std::getline(in, codeline))
        throw SyntaxError("witness file needs a header line and a code line");
    while (!codeline.empty() && (codeline.back() == '\r' || codeline.back() == ' '))
        codeline.pop_back();
    WitnessFile file;
    std::istringstream hs(header);
    if (!(hs >> file.k >> file.n >> file.r))
        throw SyntaxError("witness header must be three numbers");
    std::string extra;
    if (hs >> extra) throw SyntaxError("witness header must be exactly three numbers");
    file.code = BigNat::from_binary(codeline);
    return file;
}

}  // namespace ackinv
