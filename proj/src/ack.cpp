#include "ackinv/ack.hpp"

#include <vector>

#include "ackinv/cost.hpp"

namespace ackinv {

std::optional<BigNat> AckOracle::apply_base(const BigNat& value) {
    auto e = value.try_to_u64();
    if (!e || *e >= max_bits_) return std::nullopt;
    return BigNat::power_of_two(*e);
}

void AckOracle::remember(std::uint64_t level, std::uint64_t arg, const BigNat& value) {
    if (memo_bits_ + value.size() > kMemoBitCap) return;
    auto [it, inserted] = memo_.try_emplace({level, arg}, value);
    if (inserted) memo_bits_ += value.size();
}

std::optional<BigNat> AckOracle::eval(std::uint64_t level, std::uint64_t arg) {
    if (level == 0) {
        if (arg >= max_bits_) return std::nullopt;
        return BigNat::power_of_two(arg);
    }
    if (auto hit = memo_.find({level, arg}); hit != memo_.end()) return hit->second;

    // One frame per partially iterated level: acc starts at A(level, 0) = 1
    // and each step replaces it with A(level-1, acc).
    struct Frame {
        std::uint64_t level;
        std::uint64_t total;
        std::uint64_t done = 0;
        BigNat acc = BigNat(1);
    };
    std::vector<Frame> stack;
    stack.push_back({level, arg});
    std::optional<BigNat> delivered;

    while (!stack.empty()) {
        Frame& top = stack.back();
        if (delivered) {
            top.acc = std::move(*delivered);
            delivered.reset();
            ++top.done;
        }
        if (top.done == top.total) {
            remember(top.level, top.total, top.acc);
            delivered = std::move(top.acc);
            stack.pop_back();
            continue;
        }
        charge(1);
        if (top.level == 1) {
            auto next = apply_base(top.acc);
            if (!next) return std::nullopt;
            top.acc = std::move(*next);
            ++top.done;
            continue;
        }
        auto small = top.acc.try_to_u64();
        if (!small) return std::nullopt;  // an iteration count this size is beyond any budget
        if (auto hit = memo_.find({top.level - 1, *small}); hit != memo_.end()) {
            top.acc = hit->second;
            ++top.done;
            continue;
        }
        Frame child{top.level - 1, *small};
        if (top.done + 1 == top.total) {
            // Last step: the child's result is this frame's result, so the
            // child can take over the slot. Keeps towers like A(k, 1) at
            // constant depth for any k.
            stack.back() = std::move(child);
        } else {
            stack.push_back(std::move(child));
        }
    }
    return delivered;
}

std::optional<BigNat> ack_eval(std::uint64_t level, std::uint64_t arg, std::uint64_t max_bits) {
    AckOracle oracle(max_bits);
    return oracle.eval(level, arg);
}

std::optional<BigNat> ack_diag(std::uint64_t n, std::uint64_t max_bits) {
    AckOracle oracle(max_bits);
    return oracle.diag(n);
}

}  // namespace ackinv
