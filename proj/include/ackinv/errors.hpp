#pragma once

#include <stdexcept>
#include <string>

namespace ackinv {

// Materializing a value would exceed the configured bit budget, or a
// certificate construction ran past its label budget. Budgets are checked
// before allocation, so catching this is always safe.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Malformed literal text or witness file.
struct SyntaxError : std::runtime_error {
    explicit SyntaxError(const std::string& what) : std::runtime_error(what) {}
};

// Sequence-codec misuse: asking for the length or an entry of a value that
// is not a valid sequence code.
struct InvalidSequence : std::runtime_error {
    explicit InvalidSequence(const std::string& what) : std::runtime_error(what) {}
};

// seq_encode rejects empty input; the codec has no representation for it.
struct EmptySequence : std::invalid_argument {
    explicit EmptySequence(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ackinv
