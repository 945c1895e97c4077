#include "ackinv/bignat.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace ackinv {

namespace {

std::vector<bool> trimmed(std::vector<bool> bits) {
    while (bits.size() > 1 && !bits.back()) bits.pop_back();
    if (bits.empty()) bits.push_back(false);
    return bits;
}

}  // namespace

BigNat::BigNat(std::uint64_t value) {
    do {
        bits_.push_back((value & 1) != 0);
        value >>= 1;
    } while (value != 0);
    charge(2 * bits_.size() + 1);
}

BigNat BigNat::from_bits(std::vector<bool> little_endian) {
    BigNat n;
    n.bits_ = trimmed(std::move(little_endian));
    charge(n.bits_.size() + 1);
    return n;
}

BigNat BigNat::from_binary(std::string_view text) {
    if (text.empty()) throw SyntaxError("empty binary string");
    std::vector<bool> bits;
    bits.reserve(text.size());
    for (auto it = text.rbegin(); it != text.rend(); ++it) {
        if (*it == '0') {
            bits.push_back(false);
        } else if (*it == '1') {
            bits.push_back(true);
        } else {
            throw SyntaxError("binary digit expected");
        }
    }
    charge(bits.size() + 1);
    return from_bits(std::move(bits));
}

BigNat BigNat::from_decimal(std::string_view text, std::uint64_t bit_budget) {
    if (text.empty()) throw SyntaxError("empty decimal string");
    std::vector<bool> acc;  // little-endian; empty means zero so far
    for (char c : text) {
        if (c < '0' || c > '9') throw SyntaxError("decimal digit expected");
        // Absorbing digit d maps the value v to 10*v + d, done in place by
        // pushing a carry of d through the doubled-and-halved digits.
        std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
        for (std::size_t i = 0; i < acc.size(); ++i) {
            std::uint64_t t = carry + (acc[i] ? 10u : 0u);
            acc[i] = (t & 1) != 0;
            carry = t >> 1;
        }
        while (carry != 0) {
            acc.push_back((carry & 1) != 0);
            carry >>= 1;
        }
        if (acc.size() > bit_budget)
            throw BudgetExceeded("decimal literal exceeds bit budget");
        charge(acc.size() + 2);
    }
    return from_bits(std::move(acc));
}

BigNat BigNat::power_of_two(std::uint64_t exponent) {
    if (exponent == std::numeric_limits<std::uint64_t>::max())
        throw std::length_error("power_of_two exponent too large");
    BigNat n;
    n.bits_.assign(exponent + 1, false);
    n.bits_.back() = true;
    charge(exponent + 2);
    return n;
}

std::optional<std::uint64_t> BigNat::try_to_u64() const {
    charge(std::min<std::uint64_t>(bits_.size(), 65) + 1);
    if (bits_.size() > 64) return std::nullopt;
    std::uint64_t v = 0;
    for (std::size_t i = bits_.size(); i-- > 0;)
        v = (v << 1) | (bits_[i] ? 1u : 0u);
    return v;
}

std::string BigNat::to_binary_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (std::size_t i = bits_.size(); i-- > 0;)
        out.push_back(bits_[i] ? '1' : '0');
    charge(bits_.size() + 1);
    return out;
}

std::strong_ordering compare(const BigNat& a, const BigNat& b) {
    // Representations are canonical, so a longer number is a larger one.
    if (a.bits_.size() != b.bits_.size()) {
        charge(2);
        return a.bits_.size() <=> b.bits_.size();
    }
    for (std::size_t i = a.bits_.size(); i-- > 0;) {
        if (a.bits_[i] != b.bits_[i]) {
            charge(2 * (a.bits_.size() - i) + 1);
            return a.bits_[i] ? std::strong_ordering::greater
                              : std::strong_ordering::less;
        }
    }
    charge(2 * a.bits_.size() + 1);
    return std::strong_ordering::equal;
}

std::uint64_t bit_length(const BigNat& n) {
    // Canonical storage means size() already is the answer, but the scan is
    // kept: counting a number's digits costs a pass over them, and the meter
    // must see that cost.
    std::uint64_t top = 0;
    for (std::uint64_t i = 0; i < n.bits_.size(); ++i)
        if (n.bits_[i]) top = i;
    charge(2 * n.bits_.size() + 1);
    return top + 1;
}

bool is_power_of_two(const BigNat& n) {
    for (std::uint64_t i = 0; i < n.bits_.size(); ++i) {
        if (n.bits_[i]) {
            charge(2 * (i + 1) + 1);
            return i + 1 == n.bits_.size();
        }
    }
    charge(2 * n.bits_.size() + 1);
    return false;  // zero
}

std::uint64_t ceil_log2(const BigNat& n) {
    std::uint64_t len = bit_length(n);
    if (len <= 1) return 0;  // covers both 0 and 1
    return is_power_of_two(n) ? len - 1 : len;
}

BigNat succ(const BigNat& n) {
    BigNat out = n;
    std::uint64_t i = 0;
    while (i < out.bits_.size() && out.bits_[i]) {
        out.bits_[i] = false;
        ++i;
    }
    if (i == out.bits_.size()) {
        out.bits_.push_back(true);
    } else {
        out.bits_[i] = true;
    }
    charge(out.bits_.size() + 2 * (i + 1) + 1);
    return out;
}

BigNat pred(const BigNat& n) {
    if (n.is_zero()) throw std::underflow_error("pred of zero");
    BigNat out = n;
    std::uint64_t i = 0;
    while (!out.bits_[i]) {
        out.bits_[i] = true;
        ++i;
    }
    out.bits_[i] = false;
    out.bits_ = trimmed(std::move(out.bits_));
    charge(out.bits_.size() + 2 * (i + 1) + 1);
    return out;
}

std::uint64_t to_small(const BigNat& n) {
    auto v = n.try_to_u64();
    if (!v) throw std::overflow_error("value exceeds 64 bits");
    return *v;
}

std::uint64_t bit_length_u64(std::uint64_t v) {
    std::uint64_t len = v == 0 ? 1 : static_cast<std::uint64_t>(std::bit_width(v));
    charge(2 * len + 1);
    return len;
}

std::uint64_t ceil_log2_u64(std::uint64_t v) {
    if (v <= 1) {
        charge(3);
        return 0;
    }
    std::uint64_t w = static_cast<std::uint64_t>(std::bit_width(v));
    charge(4 * w + 2);
    return (v & (v - 1)) == 0 ? w - 1 : w;
}

namespace {

bool is_decimal_digit(char c) { return c >= '0' && c <= '9'; }
bool is_binary_digit(char c) { return c == '0' || c == '1'; }
bool is_hex_digit(char c) {
    return is_decimal_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

struct LiteralParser {
    std::string_view s;
    std::size_t pos = 0;

    char peek() const { return pos < s.size() ? s[pos] : '\0'; }

    void expect(char c) {
        if (peek() != c)
            throw SyntaxError(std::string("expected '") + c + "' in literal");
        ++pos;
    }

    bool starts_with(std::string_view kw) const {
        return s.substr(pos, kw.size()) == kw;
    }

    std::string digit_run(bool (*pred)(char), const char* what) {
        std::size_t start = pos;
        while (pos < s.size() && pred(s[pos])) ++pos;
        if (pos == start) throw SyntaxError(std::string(what) + " expected");
        return std::string(s.substr(start, pos - start));
    }

    std::uint64_t small_decimal() {
        std::string run = digit_run(is_decimal_digit, "decimal digit");
        if (run.size() > 1 && run[0] == '0')
            throw SyntaxError("leading zeros are not allowed");
        std::uint64_t v = 0;
        for (char c : run) {
            std::uint64_t d = static_cast<std::uint64_t>(c - '0');
            if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
                throw SyntaxError("number does not fit in 64 bits");
            v = v * 10 + d;
        }
        return v;
    }

    NumLiteral parse(int depth) {
        if (depth > 64) throw SyntaxError("literal nesting too deep");
        NumLiteral lit;
        if (starts_with("pow2(")) {
            pos += 5;
            lit.kind = NumLiteral::Kind::pow2;
            lit.inner = std::make_unique<NumLiteral>(parse(depth + 1));
            expect(')');
            return lit;
        }
        if (starts_with("tower(")) {
            pos += 6;
            lit.kind = NumLiteral::Kind::tower;
            lit.tower_height = small_decimal();
            expect(',');
            lit.tower_base = small_decimal();
            expect(')');
            return lit;
        }
        if (starts_with("0b")) {
            pos += 2;
            lit.kind = NumLiteral::Kind::binary;
            lit.digits = digit_run(is_binary_digit, "binary digit");
            return lit;
        }
        if (starts_with("0x")) {
            pos += 2;
            lit.kind = NumLiteral::Kind::hex;
            lit.digits = digit_run(is_hex_digit, "hex digit");
            return lit;
        }
        if (peek() == '0') {
            ++pos;  // a decimal zero stands alone, never as a leading digit
            lit.kind = NumLiteral::Kind::decimal;
            lit.digits = "0";
            return lit;
        }
        if (is_decimal_digit(peek())) {
            lit.kind = NumLiteral::Kind::decimal;
            lit.digits = digit_run(is_decimal_digit, "decimal digit");
            return lit;
        }
        throw SyntaxError("number literal expected");
    }
};

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return c - 'A' + 10;
}

}  // namespace

NumLiteral parse_literal_tree(std::string_view text) {
    LiteralParser parser{text};
    NumLiteral lit = parser.parse(0);
    if (parser.pos != text.size())
        throw SyntaxError("unexpected trailing characters in literal");
    return lit;
}

BigNat materialize(const NumLiteral& lit, std::uint64_t bit_budget) {
    switch (lit.kind) {
        case NumLiteral::Kind::decimal:
            return BigNat::from_decimal(lit.digits, bit_budget);
        case NumLiteral::Kind::binary: {
            BigNat v = BigNat::from_binary(lit.digits);
            if (v.size() > bit_budget)
                throw BudgetExceeded("binary literal exceeds bit budget");
            return v;
        }
        case NumLiteral::Kind::hex: {
            std::string binary;
            binary.reserve(lit.digits.size() * 4);
            for (char c : lit.digits) {
                int nib = hex_value(c);
                for (int b = 3; b >= 0; --b)
                    binary.push_back(((nib >> b) & 1) != 0 ? '1' : '0');
            }
            BigNat v = BigNat::from_binary(binary);
            if (v.size() > bit_budget)
                throw BudgetExceeded("hex literal exceeds bit budget");
            return v;
        }
        case NumLiteral::Kind::pow2: {
            BigNat exponent = materialize(*lit.inner, bit_budget);
            auto small = exponent.try_to_u64();
            if (!small || *small >= bit_budget)
                throw BudgetExceeded("pow2 exponent exceeds bit budget");
            return BigNat::power_of_two(*small);
        }
        case NumLiteral::Kind::tower: {
            BigNat v(lit.tower_base);
            if (v.size() > bit_budget)
                throw BudgetExceeded("tower base exceeds bit budget");
            for (std::uint64_t i = 0; i < lit.tower_height; ++i) {
                auto small = v.try_to_u64();
                if (!small || *small >= bit_budget)
                    throw BudgetExceeded("tower exceeds bit budget");
                v = BigNat::power_of_two(*small);
            }
            return v;
        }
    }
    throw std::logic_error("unhandled literal kind");
}

BigNat parse_literal(std::string_view text, std::uint64_t bit_budget) {
    return materialize(parse_literal_tree(text), bit_budget);
}

}  // namespace ackinv
