#include "hashchain/pattern.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "hashchain/error.hpp"
#include "qgram_kernel.hpp"

namespace hashchain {

std::size_t FilterTable::popcount() const noexcept {
  std::size_t bits = 0;
  for (FilterWord w : words_) bits += static_cast<std::size_t>(std::popcount(w));
  return bits;
}

std::size_t FilterTable::nonzero_words() const noexcept {
  return static_cast<std::size_t>(std::count_if(words_.begin(), words_.end(), [](FilterWord w) { return w != 0; }));
}

std::vector<QGramChain> enumerate_chains(std::size_t m, std::size_t q) {
  if (q < 1 || q > m)
    throw Error(ErrorKind::invalid_parameters,
                "q-gram chains need 1 <= q <= m (q=" + std::to_string(q) + ", m=" + std::to_string(m) + ")");
  const std::size_t count = std::min(q, m - q + 1);
  std::vector<QGramChain> chains;
  chains.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    QGramChain chain;
    chain.end = m - 1 - k;
    // q-grams end at end, end - q, ... as long as a whole q-gram fits.
    for (std::size_t e = chain.end;; e -= q) {
      chain.starts.push_back(e + 1 - q);
      if (e < 2 * q - 1) break;
    }
    std::reverse(chain.starts.begin(), chain.starts.end());
    chains.push_back(std::move(chain));
  }
  return chains;
}

CompiledPattern compile(ByteView pattern, std::size_t q, unsigned alpha) {
  if (pattern.empty()) throw Error(ErrorKind::empty_pattern, "pattern must not be empty");
  const HcParams params = HcParams::make(q, alpha);
  const std::size_t m = pattern.size();
  if (q > m)
    throw Error(ErrorKind::pattern_too_short,
                "pattern of length " + std::to_string(m) + " is shorter than q=" + std::to_string(q));

  CompiledPattern cp(std::vector<Byte>(pattern.begin(), pattern.end()), params);
  FilterTable& table = cp.table_;
  const Byte* x = cp.pattern_.data();
  std::size_t hashes = 0;

  const auto hash = [&](std::size_t p) {
    ++hashes;
    return detail::QGramHasher<0>{params.q, params.s, params.mask}(x, p);
  };

  // Link adjacent q-grams chain by chain; the chain ending at m - 1 goes last
  // so its earliest hash is what remains in v.
  std::size_t v = 0;
  for (std::size_t i = std::min(m - q + 1, q); i >= 1; --i) {
    v = hash(m - i);
    for (std::size_t j = m - i; j >= 2 * q - 1; j -= q) {
      const std::size_t right = v;
      v = hash(j - q);
      table[right] |= link_hash(v);
    }
  }
  cp.h_v_ = v;

  // Leading q-grams have no left neighbour: mark them only if still empty.
  const std::size_t first_end = std::min(2 * q - 1, m);
  for (std::size_t i = q - 1; i < first_end; ++i) {
    const std::size_t u = hash(i);
    if (table[u] == 0) table[u] = 1;
  }

  cp.preprocessing_hashes_ = hashes;
  return cp;
}

}  // namespace hashchain
