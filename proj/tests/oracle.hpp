#pragma once

// Reference evaluators used only by tests. They follow the defining
// formulas directly and share no code with the library's loops.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Bytes = std::vector<std::uint8_t>;

inline Bytes bytes(const std::string& s) { return Bytes(s.begin(), s.end()); }

/// h(u) = (h(u[1..]) * 2^s + u[0]) mod 2^alpha, evaluated recursively over
/// the q-gram as a string.
inline std::uint64_t hash_string(const std::uint8_t* u, std::size_t len, unsigned s, unsigned alpha) {
  if (len == 0) return 0;
  const std::uint64_t mod = std::uint64_t{1} << alpha;
  return ((hash_string(u + 1, len - 1, s, alpha) << s) + u[0]) % mod;
}

inline std::uint64_t hash_at_start(const Bytes& x, std::size_t start, std::size_t q, unsigned alpha) {
  return hash_string(x.data() + start, q, static_cast<unsigned>(alpha / q), alpha);
}

/// Filter words built from the pair formula over every adjacent pair of
/// non-overlapping q-grams, then the leading-q-gram marks.
inline std::vector<std::uint64_t> filter_words(const Bytes& x, std::size_t q, unsigned alpha, unsigned w) {
  const std::size_t m = x.size();
  std::vector<std::uint64_t> F(std::size_t{1} << alpha, 0);
  for (std::size_t i = 0; i + 2 * q <= m; ++i) {
    const auto h1 = hash_at_start(x, i, q, alpha);
    const auto h2 = hash_at_start(x, i + q, q, alpha);
    F[h2] |= std::uint64_t{1} << (h1 % w);
  }
  const std::size_t leading = std::min(q, m - q + 1);
  for (std::size_t i = 0; i < leading; ++i) {
    const auto h = hash_at_start(x, i, q, alpha);
    if (F[h] == 0) F[h] = 1;
  }
  return F;
}

/// Hash of the earliest q-gram in the chain ending at m - 1.
inline std::uint64_t chain_head_hash(const Bytes& x, std::size_t q, unsigned alpha) {
  std::size_t start = x.size() - q;
  while (start >= q) start -= q;
  return hash_at_start(x, start, q, alpha);
}

/// Chains for every end position j in [m-q, m) that fits a q-gram, largest j
/// first, each listing the starts j-q+1, j-2q+1, ... that are >= 0.
inline std::vector<std::vector<std::size_t>> chains(std::size_t m, std::size_t q) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t j = m; j-- > m - q;) {
    if (j + 1 < q) break;
    std::vector<std::size_t> starts;
    for (long long s = static_cast<long long>(j) - static_cast<long long>(q) + 1; s >= 0;
         s -= static_cast<long long>(q))
      starts.insert(starts.begin(), static_cast<std::size_t>(s));
    out.push_back(starts);
  }
  return out;
}

/// Second, independently written occurrence scan using std::string.
inline std::vector<std::size_t> positions(const Bytes& pattern, const Bytes& text) {
  const std::string p(pattern.begin(), pattern.end());
  const std::string t(text.begin(), text.end());
  std::vector<std::size_t> out;
  for (auto pos = t.find(p); pos != std::string::npos; pos = t.find(p, pos + 1)) out.push_back(pos);
  return out;
}

inline Bytes random_bytes(std::mt19937_64& rng, std::size_t n, unsigned sigma) {
  std::uniform_int_distribution<unsigned> d(0, sigma - 1);
  Bytes b(n);
  for (auto& c : b) c = static_cast<std::uint8_t>(d(rng));
  return b;
}

}  // namespace oracle
