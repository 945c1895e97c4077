#pragma once

#include <cstdint>

namespace ackinv {

// Abstract work counter. One unit is charged per digit read or written and
// per loop iteration inside the core numeric routines, so the count tracks
// the bit-level cost of an operation independently of wall-clock noise.
class CostMeter {
public:
    void add(std::uint64_t units) noexcept { count_ += units; }
    std::uint64_t count() const noexcept { return count_; }
    void reset() noexcept { count_ = 0; }

private:
    std::uint64_t count_ = 0;
};

namespace detail {
inline thread_local CostMeter* tl_active_meter = nullptr;
}

inline CostMeter* active_meter() noexcept { return detail::tl_active_meter; }

// Charges the active meter, if any. Metering is opt-in; with no scope
// installed this is a no-op.
inline void charge(std::uint64_t units) noexcept {
    if (detail::tl_active_meter != nullptr) detail::tl_active_meter->add(units);
}

// Installs a meter for the current thread for the lifetime of the scope.
// Scopes nest; the innermost one receives the charges.
class MeterScope {
public:
    explicit MeterScope(CostMeter& meter) noexcept
        : prev_(detail::tl_active_meter) {
        detail::tl_active_meter = &meter;
    }
    ~MeterScope() { detail::tl_active_meter = prev_; }

    MeterScope(const MeterScope&) = delete;
    MeterScope& operator=(const MeterScope&) = delete;

private:
    CostMeter* prev_;
};

}  // namespace ackinv
