#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hashchain/hash.hpp"

namespace hashchain {

struct TrialCase {
  unsigned sigma = 0;
  std::vector<Byte> pattern;
  std::vector<Byte> text;
  std::size_t q = 0;
  unsigned alpha = 0;
};

struct SelftestOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::size_t max_text = 5000;
  /// Test hook: drop the last HC occurrence so the suite has something to catch.
  bool corrupt_hc = false;
};

struct SelftestSummary {
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Smallest failing case found by shrinking the first failure.
  std::optional<TrialCase> minimal_failure;
  std::string failure_reason;

  bool passed() const noexcept { return failures == 0; }
};

/// Deterministic sequence of randomized trials for `seed`. Patterns are
/// planted into the text at random offsets in about half the trials.
std::vector<TrialCase> generate_trials(std::size_t count, std::uint64_t seed, std::size_t max_text = 5000);

/// Checks one trial against the naive oracle and the core invariants.
/// Returns a description of the first violation, or nullopt.
std::optional<std::string> check_trial(const TrialCase& t, bool corrupt_hc = false);

SelftestSummary run_selftest(const SelftestOptions& options);

/// Printable form of raw bytes: ASCII graphics as is, the rest as \xHH.
std::string escape_bytes(ByteView bytes);

}  // namespace hashchain
