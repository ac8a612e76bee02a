#include "hashchain/search.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "hashchain/error.hpp"
#include "qgram_kernel.hpp"

namespace hashchain {

SearchMetrics& SearchMetrics::operator+=(const SearchMetrics& o) noexcept {
  windows += o.windows;
  qgram_hashes += o.qgram_hashes;
  link_checks += o.link_checks;
  verifications += o.verifications;
  hv_rejections += o.hv_rejections;
  return *this;
}

SearchBuffer::SearchBuffer(ByteView text, std::size_t slack) : data_(text.size() + slack, 0), n_(text.size()) {
  std::copy(text.begin(), text.end(), data_.begin());
}

namespace {

// Counters compile away when kCount is false.
template <bool kCount>
struct Counters {
  SearchMetrics m;
  void window() noexcept { if constexpr (kCount) ++m.windows; }
  void windows(std::uint64_t k) noexcept { if constexpr (kCount) m.windows += k; }
  void hashes(std::uint64_t k) noexcept { if constexpr (kCount) m.qgram_hashes += k; }
  void hash() noexcept { if constexpr (kCount) ++m.qgram_hashes; }
  void link() noexcept { if constexpr (kCount) ++m.link_checks; }
  void verify() noexcept { if constexpr (kCount) ++m.verifications; }
  void reject() noexcept { if constexpr (kCount) ++m.hv_rejections; }
};

struct Scan {
  const Byte* x;
  std::size_t m;
  std::size_t q;
  std::size_t shift;  // m - q + 1
  const FilterWord* F;
  std::size_t h_v;
};

Scan make_scan(const CompiledPattern& cp) {
  const std::size_t m = cp.size();
  const std::size_t q = cp.params().q;
  return {cp.pattern().data(), m, q, m - q + 1, cp.table().data(), cp.h_v()};
}

// Reads the window ending at `end` backward from the q-gram already hashed
// to `z = F[v]`. Returns the window end to continue from: end + 1 after a
// completed walk, otherwise the position just past the rejected q-gram plus
// the maximal shift.
template <class Hasher, bool kCount>
inline std::size_t walk_window(const Scan& sc, const Hasher& hash, const Byte* y, std::size_t end, std::size_t v,
                               FilterWord z, std::vector<Occurrence>& out, Counters<kCount>& ctr) {
  // First q-gram of the window's last chain ends at `stop`.
  const std::size_t stop = end + 2 * sc.q - sc.m;
  std::size_t j = end;
  while (j >= stop) {
    j -= sc.q;
    v = hash(y, j);
    ctr.hash();
    ctr.link();
    if ((z & link_hash(v)) == 0) return j + sc.shift;
    z = sc.F[v];
  }
  if (v == sc.h_v) {
    ctr.verify();
    const std::size_t start = end + 1 - sc.m;
    if (std::memcmp(y + start, sc.x, sc.m) == 0) out.push_back(Occurrence{start});
  } else {
    ctr.reject();
  }
  return end + 1;
}

template <bool kCount, class Hasher>
void hc_loop(const Scan& sc, const Hasher& hash, const Byte* y, std::size_t n, std::vector<Occurrence>& out,
             Counters<kCount>& ctr) {
  std::size_t j = sc.m - 1;
  while (j < n) {
    ctr.window();
    const std::size_t v = hash(y, j);
    ctr.hash();
    const FilterWord z = sc.F[v];
    if (z != 0)
      j = walk_window(sc, hash, y, j, v, z, out, ctr);
    else
      j += sc.shift;
  }
}

// y[n, n+m) holds a copy of the pattern, so every q-gram of it is a nonzero
// word and the skip loop stops at the latest at n + m - 1.
template <bool kCount, class Hasher>
void shc_loop(const Scan& sc, const Hasher& hash, const Byte* y, std::size_t n, std::vector<Occurrence>& out,
              Counters<kCount>& ctr) {
  std::size_t j = sc.m - 1;
  while (j < n) {
    const std::size_t first = j;
    std::size_t v;
    FilterWord z;
    while ((z = sc.F[v = hash(y, j)]) == 0) j += sc.shift;
    // Every skip-loop step is one hash; only those ending inside the text
    // count as windows.
    const std::size_t steps = (j - first) / sc.shift + 1;
    ctr.hashes(steps);
    if (j >= n) {
      ctr.windows((n - first + sc.shift - 1) / sc.shift);
      break;
    }
    ctr.windows(steps);
    j = walk_window(sc, hash, y, j, v, z, out, ctr);
  }
}

template <bool kCount>
SearchResult run_hc(const CompiledPattern& cp, ByteView text) {
  SearchResult r;
  Counters<kCount> ctr;
  if (text.size() >= cp.size()) {
    const Scan sc = make_scan(cp);
    detail::with_hasher(cp.params(), [&](const auto& hash) { hc_loop(sc, hash, text.data(), text.size(), r.occurrences, ctr); });
  }
  r.metrics = ctr.m;
  return r;
}

template <bool kCount>
SearchResult run_shc(const CompiledPattern& cp, const Byte* y, std::size_t n) {
  SearchResult r;
  Counters<kCount> ctr;
  const Scan sc = make_scan(cp);
  detail::with_hasher(cp.params(), [&](const auto& hash) { shc_loop(sc, hash, y, n, r.occurrences, ctr); });
  r.metrics = ctr.m;
  return r;
}

}  // namespace

SearchResult search_hc(const CompiledPattern& cp, ByteView text, Instrument instrument) {
  return instrument == Instrument::on ? run_hc<true>(cp, text) : run_hc<false>(cp, text);
}

SearchResult search_shc(const CompiledPattern& cp, SearchBuffer& buf, Instrument instrument) {
  const std::size_t m = cp.size();
  if (buf.slack() < m)
    throw Error(ErrorKind::buffer_too_small, "search buffer needs " + std::to_string(m) +
                                                 " bytes of slack for the sentinel, has " + std::to_string(buf.slack()));
  const std::size_t n = buf.n_;
  std::copy(cp.pattern().begin(), cp.pattern().end(), buf.data_.begin() + static_cast<std::ptrdiff_t>(n));
  const Byte* y = buf.data_.data();
  return instrument == Instrument::on ? run_shc<true>(cp, y, n) : run_shc<false>(cp, y, n);
}

}  // namespace hashchain
