#pragma once

// Unchecked hashing used inside the preprocessing and search loops. Callers
// guarantee that [p - q + 1, p] lies inside the buffer.

#include <cstddef>
#include <utility>

#include "hashchain/hash.hpp"

namespace hashchain::detail {

/// kQ == 0 means the q-gram length is only known at run time.
template <std::size_t kQ>
struct QGramHasher {
  std::size_t q;
  unsigned s;
  std::size_t mask;

  std::size_t operator()(const Byte* y, std::size_t p) const noexcept {
    const std::size_t len = kQ != 0 ? kQ : q;
    const Byte* c = y + p;
    std::size_t v = 0;
    for (std::size_t i = 0; i < len; ++i) v = (v << s) + *(c - i);
    return v & mask;
  }
};

/// Calls `fn(QGramHasher<K>{...})` with K specialised for the common q values.
template <class Fn>
decltype(auto) with_hasher(const HcParams& p, Fn&& fn) {
  switch (p.q) {
    case 1: return std::forward<Fn>(fn)(QGramHasher<1>{p.q, p.s, p.mask});
    case 2: return std::forward<Fn>(fn)(QGramHasher<2>{p.q, p.s, p.mask});
    case 3: return std::forward<Fn>(fn)(QGramHasher<3>{p.q, p.s, p.mask});
    case 4: return std::forward<Fn>(fn)(QGramHasher<4>{p.q, p.s, p.mask});
    case 5: return std::forward<Fn>(fn)(QGramHasher<5>{p.q, p.s, p.mask});
    case 6: return std::forward<Fn>(fn)(QGramHasher<6>{p.q, p.s, p.mask});
    case 7: return std::forward<Fn>(fn)(QGramHasher<7>{p.q, p.s, p.mask});
    case 8: return std::forward<Fn>(fn)(QGramHasher<8>{p.q, p.s, p.mask});
    default: return std::forward<Fn>(fn)(QGramHasher<0>{p.q, p.s, p.mask});
  }
}

}  // namespace hashchain::detail
