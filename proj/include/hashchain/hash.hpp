#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace hashchain {

using Byte = std::uint8_t;
using ByteView = std::span<const Byte>;

/// One word of the filter table. Its bit count is the link-hash width w.
using FilterWord = std::uint64_t;
inline constexpr unsigned kWordBits = 64;

static_assert((kWordBits & (kWordBits - 1)) == 0 && kWordBits >= 32);

inline constexpr unsigned kMaxAlpha = 30;
inline constexpr std::size_t kDefaultQ = 4;
inline constexpr unsigned kDefaultAlpha = 12;

inline ByteView as_bytes(std::string_view s) noexcept {
  return {reinterpret_cast<const Byte*>(s.data()), s.size()};
}

/// Parameters shared by preprocessing and search.
///
/// `s` and `mask` are derived from `q` and `alpha`; construct through
/// `HcParams::make` so they can never disagree.
struct HcParams {
  std::size_t q = kDefaultQ;
  unsigned alpha = kDefaultAlpha;
  unsigned s = 0;
  std::size_t mask = 0;
  unsigned w = kWordBits;

  /// Throws Error(invalid_parameters) unless q >= 1 and 1 <= alpha <= 30.
  static HcParams make(std::size_t q, unsigned alpha);

  /// True when the derived fields match what `make` would compute.
  bool consistent() const noexcept;

  bool operator==(const HcParams&) const = default;
};

/// floor(alpha / q): bits each added character shifts the running hash.
unsigned derive_shift(unsigned alpha, std::size_t q);

/// Shift-then-add hash of the q-gram ending at `p`, reduced by `mask`.
///
/// Characters are consumed from `p` down to `p - q + 1`, so the first byte
/// of the q-gram is the last one added (unshifted). Throws
/// std::out_of_range when `p` does not leave room for a whole q-gram.
std::size_t hash_qgram(ByteView bytes, std::size_t p, std::size_t q, unsigned s, std::size_t mask);

/// Single-bit word 2^(v mod w) for the filter's configured width.
constexpr FilterWord link_hash(std::size_t v) noexcept {
  return FilterWord{1} << (v & (kWordBits - 1));
}

/// Same as above for an arbitrary power-of-two width w <= 64.
constexpr std::uint64_t link_hash(std::size_t v, unsigned w) noexcept {
  return std::uint64_t{1} << (v & (w - 1));
}

}  // namespace hashchain
