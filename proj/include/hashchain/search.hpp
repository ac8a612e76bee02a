#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hashchain/hash.hpp"
#include "hashchain/pattern.hpp"

namespace hashchain {

struct Occurrence {
  std::size_t start = 0;

  auto operator<=>(const Occurrence&) const = default;
};

/// Work counters collected by an instrumented search.
struct SearchMetrics {
  std::uint64_t windows = 0;
  std::uint64_t qgram_hashes = 0;
  std::uint64_t link_checks = 0;
  std::uint64_t verifications = 0;
  std::uint64_t hv_rejections = 0;

  /// Windows whose chain walk reached the window start.
  std::uint64_t completed_walks() const noexcept { return verifications + hv_rejections; }

  SearchMetrics& operator+=(const SearchMetrics& o) noexcept;
  bool operator==(const SearchMetrics&) const = default;
};

struct SearchResult {
  std::vector<Occurrence> occurrences;
  SearchMetrics metrics;
};

enum class Instrument : bool { off = false, on = true };

/// Text storage with writable slack after the logical end, used by SHC to
/// place the sentinel copy of the pattern. Bytes [0, size()) are the text.
class SearchBuffer {
 public:
  SearchBuffer(std::size_t n, std::size_t slack) : data_(n + slack, 0), n_(n) {}

  /// Copies `text` into a fresh buffer with `slack` spare bytes.
  SearchBuffer(ByteView text, std::size_t slack);

  std::size_t size() const noexcept { return n_; }
  std::size_t capacity() const noexcept { return data_.size(); }
  std::size_t slack() const noexcept { return data_.size() - n_; }

  std::span<const Byte> text() const noexcept { return {data_.data(), n_}; }
  std::span<Byte> text() noexcept { return {data_.data(), n_}; }

  /// Whole storage including slack.
  std::span<const Byte> storage() const noexcept { return data_; }

 private:
  friend SearchResult search_shc(const CompiledPattern&, SearchBuffer&, Instrument);

  std::vector<Byte> data_;
  std::size_t n_;
};

/// Hash Chain search. Reports every occurrence of the compiled pattern in
/// `text`, ascending, overlaps included. Never writes to `text`.
SearchResult search_hc(const CompiledPattern& cp, ByteView text, Instrument instrument = Instrument::on);

/// Sentinel Hash Chain search. Writes the pattern into the slack region
/// [n, n+m) and scans with an unchecked skip loop. Same result set as
/// search_hc. Throws Error(buffer_too_small) before writing anything when
/// slack < m.
SearchResult search_shc(const CompiledPattern& cp, SearchBuffer& buf, Instrument instrument = Instrument::on);

}  // namespace hashchain
