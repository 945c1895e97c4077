#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "ackinv/bignat.hpp"

namespace ackinv {

// Largest s with s*s <= n.
std::uint64_t isqrt(std::uint64_t n);

// Diagonal pairing (u, v) -> (u+v)(u+v+1)/2 + v and its inverse. Codes that
// would not fit 64 bits raise std::overflow_error.
std::uint64_t cantor_pair(std::uint64_t u, std::uint64_t v);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t w);
std::uint64_t cantor_triple(std::uint64_t u, std::uint64_t v, std::uint64_t w);
std::array<std::uint64_t, 3> cantor_untriple(std::uint64_t code);

// Sequence codec packing a nonempty list of naturals into one number. Bit
// pair j of the code is (digit(2j), digit(2j+1)); a digit d of an entry is
// written as the pair (d, d) and each entry is closed by the separator pair
// (0, 1). Entries are laid out most significant digit first with no leading
// zero digits, except zero itself, written as the single digit 0.
BigNat seq_encode(const std::vector<std::uint64_t>& entries);

// A code is well formed when its length is even with at least two pairs, the
// first pair is a digit pair, the last pair is the separator, and every
// separator other than the final one and its immediate predecessor is
// followed by a digit pair. Decoding reads the first component of each pair
// as the digit, so a lone final separator yields a trailing zero entry.
bool seq_is_valid(const BigNat& s);

// Number of entries. Throws InvalidSequence unless seq_is_valid(s).
std::uint64_t seq_len(const BigNat& s);

// Entry at index (throws InvalidSequence on bad input or index,
// std::overflow_error when the entry needs more than 64 bits).
std::uint64_t seq_get(const BigNat& s, std::uint64_t index);

std::vector<std::uint64_t> seq_decode(const BigNat& s);

}  // namespace ackinv
