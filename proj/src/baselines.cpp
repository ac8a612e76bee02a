#include "hashchain/baselines.hpp"

#include <array>
#include <cstring>

#include "hashchain/error.hpp"

namespace hashchain {

std::string_view to_string(BaselineAlgo algo) noexcept {
  switch (algo) {
    case BaselineAlgo::naive: return "naive";
    case BaselineAlgo::horspool: return "horspool";
  }
  return "?";
}

std::optional<BaselineAlgo> parse_baseline(std::string_view name) noexcept {
  if (name == "naive") return BaselineAlgo::naive;
  if (name == "horspool") return BaselineAlgo::horspool;
  return std::nullopt;
}

namespace {

void require_pattern(ByteView pattern) {
  if (pattern.empty()) throw Error(ErrorKind::empty_pattern, "pattern must not be empty");
}

}  // namespace

std::vector<Occurrence> naive_search(ByteView pattern, ByteView text) {
  require_pattern(pattern);
  std::vector<Occurrence> out;
  const std::size_t m = pattern.size();
  const std::size_t n = text.size();
  if (n < m) return out;
  for (std::size_t p = 0; p + m <= n; ++p) {
    std::size_t k = 0;
    while (k < m && text[p + k] == pattern[k]) ++k;
    if (k == m) out.push_back(Occurrence{p});
  }
  return out;
}

std::vector<Occurrence> horspool_search(ByteView pattern, ByteView text) {
  require_pattern(pattern);
  std::vector<Occurrence> out;
  const std::size_t m = pattern.size();
  const std::size_t n = text.size();
  if (n < m) return out;

  std::array<std::size_t, 256> shift;
  shift.fill(m);
  for (std::size_t i = 0; i + 1 < m; ++i) shift[pattern[i]] = m - 1 - i;

  const Byte last = pattern[m - 1];
  for (std::size_t p = 0; p + m <= n;) {
    const Byte c = text[p + m - 1];
    if (c == last && std::memcmp(text.data() + p, pattern.data(), m - 1) == 0) out.push_back(Occurrence{p});
    p += shift[c];
  }
  return out;
}

std::vector<Occurrence> run_baseline(BaselineAlgo algo, ByteView pattern, ByteView text) {
  return algo == BaselineAlgo::naive ? naive_search(pattern, text) : horspool_search(pattern, text);
}

}  // namespace hashchain
