#include "hashchain/selftest.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <random>
#include <sstream>

#include "hashchain/baselines.hpp"
#include "hashchain/pattern.hpp"
#include "hashchain/search.hpp"

namespace hashchain {

std::vector<TrialCase> generate_trials(std::size_t count, std::uint64_t seed, std::size_t max_text) {
  static constexpr std::array<unsigned, 5> kSigmas{2, 4, 20, 64, 256};
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };

  std::vector<TrialCase> trials;
  trials.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    TrialCase c;
    c.sigma = kSigmas[uniform(0, kSigmas.size() - 1)];
    const std::size_t m = uniform(1, 128);
    c.q = uniform(1, std::min<std::size_t>(8, m));
    c.alpha = static_cast<unsigned>(uniform(8, 12));
    const std::size_t n = uniform(0, max_text);
    auto symbol = [&] { return static_cast<Byte>(uniform(0, c.sigma - 1)); };
    c.pattern.resize(m);
    std::generate(c.pattern.begin(), c.pattern.end(), symbol);
    c.text.resize(n);
    std::generate(c.text.begin(), c.text.end(), symbol);
    if (n >= m && uniform(0, 1) == 1) {
      const std::size_t plants = uniform(1, 4);
      for (std::size_t k = 0; k < plants; ++k) {
        const std::size_t at = uniform(0, n - m);
        std::copy(c.pattern.begin(), c.pattern.end(), c.text.begin() + static_cast<std::ptrdiff_t>(at));
      }
    }
    trials.push_back(std::move(c));
  }
  return trials;
}

std::optional<std::string> check_trial(const TrialCase& t, bool corrupt_hc) {
  const ByteView x(t.pattern);
  const ByteView y(t.text);
  const std::size_t m = x.size();
  const auto expected = naive_search(x, y);
  const CompiledPattern cp = compile(x, t.q, t.alpha);

  if (cp.table().popcount() > m - t.q + 1) return "filter popcount exceeds m - q + 1";

  SearchResult hc = search_hc(cp, y);
  if (corrupt_hc && !hc.occurrences.empty()) hc.occurrences.pop_back();
  if (hc.occurrences != expected) return "hc occurrences differ from the naive oracle";
  const SearchMetrics& mt = hc.metrics;
  if (mt.verifications > mt.windows) return "hc verified more windows than it visited";
  if (y.size() >= m && mt.qgram_hashes < mt.windows) return "hc hashed fewer q-grams than windows";

  SearchBuffer buf(y, m);
  const SearchResult shc = search_shc(cp, buf);
  if (shc.occurrences != expected) return "shc occurrences differ from the naive oracle";
  if (!std::equal(y.begin(), y.end(), buf.text().begin())) return "shc modified the logical text";

  if (horspool_search(x, y) != expected) return "horspool occurrences differ from the naive oracle";
  return std::nullopt;
}

namespace {

// Greedy shrink of the text while the case keeps failing.
TrialCase shrink(TrialCase c, bool corrupt_hc) {
  auto fails = [&](const TrialCase& k) { return check_trial(k, corrupt_hc).has_value(); };
  bool progress = true;
  while (progress) {
    progress = false;
    const std::size_t n = c.text.size();
    std::vector<std::pair<std::size_t, std::size_t>> cuts;  // [from, to) to erase
    if (n >= 2) {
      cuts.emplace_back(n / 2, n);
      cuts.emplace_back(0, n / 2);
    }
    if (n >= 1) {
      cuts.emplace_back(n - 1, n);
      cuts.emplace_back(0, 1);
    }
    for (auto [from, to] : cuts) {
      TrialCase k = c;
      k.text.erase(k.text.begin() + static_cast<std::ptrdiff_t>(from), k.text.begin() + static_cast<std::ptrdiff_t>(to));
      if (fails(k)) {
        c = std::move(k);
        progress = true;
        break;
      }
    }
  }
  return c;
}

}  // namespace

SelftestSummary run_selftest(const SelftestOptions& options) {
  SelftestSummary s;
  for (const TrialCase& t : generate_trials(options.trials, options.seed, options.max_text)) {
    ++s.trials;
    if (auto reason = check_trial(t, options.corrupt_hc)) {
      ++s.failures;
      if (!s.minimal_failure) {
        s.minimal_failure = shrink(t, options.corrupt_hc);
        s.failure_reason = check_trial(*s.minimal_failure, options.corrupt_hc).value_or(*reason);
      }
    }
  }
  return s;
}

std::string escape_bytes(ByteView bytes) {
  std::string out;
  out.reserve(bytes.size());
  for (Byte b : bytes) {
    if (b >= 0x21 && b < 0x7f && b != '\\') {
      out.push_back(static_cast<char>(b));
    } else {
      char hex[5];
      std::snprintf(hex, sizeof hex, "\\x%02x", b);
      out += hex;
    }
  }
  return out;
}

}  // namespace hashchain
