#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hashchain/hash.hpp"

namespace hashchain {

/// Bit vector of 2^alpha words indexed by q-gram hash. A word is nonzero
/// iff some pattern q-gram hashed there; its bits are link hashes of the
/// q-grams that precede it in the pattern.
class FilterTable {
 public:
  explicit FilterTable(unsigned alpha) : words_(std::size_t{1} << alpha, 0) {}

  std::size_t size() const noexcept { return words_.size(); }
  FilterWord operator[](std::size_t i) const noexcept { return words_[i]; }
  FilterWord& operator[](std::size_t i) noexcept { return words_[i]; }
  const FilterWord* data() const noexcept { return words_.data(); }
  std::span<const FilterWord> words() const noexcept { return words_; }

  /// Total number of set bits across all words.
  std::size_t popcount() const noexcept;
  std::size_t nonzero_words() const noexcept;

 private:
  std::vector<FilterWord> words_;
};

/// Non-overlapping q-grams of the pattern ending at pattern position `end`,
/// stepping backward by q. `starts` is ascending.
struct QGramChain {
  std::size_t end = 0;
  std::vector<std::size_t> starts;
};

/// All q-gram chains of a pattern of length m, ordered by `end` descending,
/// so the first chain is the one ending at m - 1.
std::vector<QGramChain> enumerate_chains(std::size_t m, std::size_t q);

/// Search-ready pattern: the bytes, parameters, filled filter table and the
/// hash of the earliest q-gram in the chain ending at the last position.
class CompiledPattern {
 public:
  std::span<const Byte> pattern() const noexcept { return pattern_; }
  std::size_t size() const noexcept { return pattern_.size(); }
  const HcParams& params() const noexcept { return params_; }
  const FilterTable& table() const noexcept { return table_; }
  std::size_t h_v() const noexcept { return h_v_; }

  /// Hash evaluations spent building the table.
  std::size_t preprocessing_hashes() const noexcept { return preprocessing_hashes_; }

 private:
  CompiledPattern(std::vector<Byte> pattern, HcParams params)
      : pattern_(std::move(pattern)), params_(params), table_(params.alpha) {}

  friend CompiledPattern compile(ByteView pattern, std::size_t q, unsigned alpha);

  std::vector<Byte> pattern_;
  HcParams params_;
  FilterTable table_;
  std::size_t h_v_ = 0;
  std::size_t preprocessing_hashes_ = 0;
};

/// Builds the filter table for `pattern`.
///
/// Chains are processed from the one ending at m - min(m-q+1, q) up to the
/// one ending at m - 1, each walked backward linking adjacent q-grams. The
/// leading q-grams (no left neighbour) are marked afterwards, and only when
/// their word is still empty. Throws Error with kind empty_pattern,
/// pattern_too_short (q > m) or invalid_parameters.
CompiledPattern compile(ByteView pattern, std::size_t q = kDefaultQ, unsigned alpha = kDefaultAlpha);

}  // namespace hashchain
