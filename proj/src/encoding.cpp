#include "ackinv/encoding.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

#include "ackinv/cost.hpp"
#include "ackinv/errors.hpp"

namespace ackinv {

namespace {

using u128 = unsigned __int128;

}  // namespace

std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t lo = 0;
    // 2^ceil(bits/2) squares to at least 2^bits > n, so the answer is below.
    std::uint64_t hi = std::uint64_t{1} << ((std::bit_width(n) + 1) / 2);
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (u128(mid) * mid <= n) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
        charge(1);
    }
    charge(static_cast<std::uint64_t>(std::bit_width(n)) + 1);
    return lo;
}

std::uint64_t cantor_pair(std::uint64_t u, std::uint64_t v) {
    u128 s = u128(u) + v;
    // Beyond this the triangular part alone runs past 64 bits.
    if (s >= (u128(1) << 33)) throw std::overflow_error("pair code exceeds 64 bits");
    u128 w = s * (s + 1) / 2 + v;
    if (w > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("pair code exceeds 64 bits");
    charge(8);
    return static_cast<std::uint64_t>(w);
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t w) {
    // a is the diagonal index: the greatest a with a(a+1)/2 <= w.
    u128 doubled = u128(w) * 2;
    std::uint64_t lo = 0;
    std::uint64_t hi = std::uint64_t{1} << 33;
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (u128(mid) * (u128(mid) + 1) <= doubled) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
        charge(1);
    }
    std::uint64_t a = lo;
    std::uint64_t triangular = static_cast<std::uint64_t>(u128(a) * (a + 1) / 2);
    std::uint64_t delta = w - triangular;  // delta <= a, else a+1 would fit
    charge(8);
    return {a - delta, delta};
}

std::uint64_t cantor_triple(std::uint64_t u, std::uint64_t v, std::uint64_t w) {
    return cantor_pair(cantor_pair(u, v), w);
}

std::array<std::uint64_t, 3> cantor_untriple(std::uint64_t code) {
    auto [uv, w] = cantor_unpair(code);
    auto [u, v] = cantor_unpair(uv);
    return {u, v, w};
}

namespace {

struct SeqView {
    bool valid = false;
    std::uint64_t pairs = 0;
    std::vector<std::uint64_t> separators;  // pair indices, increasing
};

SeqView inspect(const BigNat& s) {
    SeqView view;
    std::uint64_t len = s.size();
    charge(2 * len + 2);
    if (len % 2 != 0) return view;
    std::uint64_t t = len / 2;
    if (t < 2) return view;
    if (s.digit(0) != s.digit(1)) return view;  // must open with a digit pair
    for (std::uint64_t j = 0; j < t; ++j) {
        if (!s.digit(2 * j) && s.digit(2 * j + 1)) view.separators.push_back(j);
    }
    if (view.separators.empty() || view.separators.back() != t - 1) return view;
    for (std::uint64_t j : view.separators) {
        // Separators other than the last one and its immediate predecessor
        // must introduce a digit; the predecessor slot may close an empty
        // final entry.
        if (j + 2 < t && s.digit(2 * j + 2) != s.digit(2 * j + 3)) return view;
    }
    view.pairs = t;
    view.valid = true;
    return view;
}

// Entry digits live at pair indices [start, end); the first component of
// each pair is the digit, most significant first.
std::uint64_t read_entry(const BigNat& s, std::uint64_t start, std::uint64_t end) {
    std::uint64_t value = 0;
    for (std::uint64_t j = start; j < end; ++j) {
        if ((value & (std::uint64_t{1} << 63)) != 0)
            throw std::overflow_error("sequence entry exceeds 64 bits");
        value = (value << 1) | (s.digit(2 * j) ? 1u : 0u);
    }
    charge(2 * (end - start) + 1);
    return value;
}

}  // namespace

BigNat seq_encode(const std::vector<std::uint64_t>& entries) {
    if (entries.empty())
        throw EmptySequence("cannot encode an empty sequence");
    std::vector<bool> bits;
    for (std::uint64_t entry : entries) {
        int len = entry == 0 ? 1 : std::bit_width(entry);
        for (int i = len - 1; i >= 0; --i) {
            bool d = ((entry >> i) & 1) != 0;
            bits.push_back(d);
            bits.push_back(d);
        }
        bits.push_back(false);  // separator pair (0, 1)
        bits.push_back(true);
    }
    charge(bits.size() + 1);
    return BigNat::from_bits(std::move(bits));
}

bool seq_is_valid(const BigNat& s) {
    return inspect(s).valid;
}

std::uint64_t seq_len(const BigNat& s) {
    SeqView view = inspect(s);
    if (!view.valid) throw InvalidSequence("not a sequence code");
    return view.separators.size();
}

std::uint64_t seq_get(const BigNat& s, std::uint64_t index) {
    SeqView view = inspect(s);
    if (!view.valid) throw InvalidSequence("not a sequence code");
    if (index >= view.separators.size())
        throw InvalidSequence("sequence index out of range");
    std::uint64_t start = index == 0 ? 0 : view.separators[index - 1] + 1;
    return read_entry(s, start, view.separators[index]);
}

std::vector<std::uint64_t> seq_decode(const BigNat& s) {
    SeqView view = inspect(s);
    if (!view.valid) throw InvalidSequence("not a sequence code");
    std::vector<std::uint64_t> entries;
    entries.reserve(view.separators.size());
    std::uint64_t start = 0;
    for (std::uint64_t sep : view.separators) {
        entries.push_back(read_entry(s, start, sep));
        start = sep + 1;
    }
    return entries;
}

}  // namespace ackinv
