#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hashchain/hash.hpp"

namespace hashchain::bench {

enum class Algorithm { hc, shc, naive, horspool };

std::string_view to_string(Algorithm algo) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;
inline bool is_parameterized(Algorithm a) noexcept { return a == Algorithm::hc || a == Algorithm::shc; }

struct Corpus {
  std::string name;
  std::vector<Byte> data;
  std::size_t sigma_observed = 0;
};

std::size_t count_distinct_bytes(ByteView data) noexcept;

/// Uniform i.i.d. bytes over {0, ..., sigma-1}; deterministic in the seed.
Corpus generate_corpus(unsigned sigma, std::size_t n, std::uint64_t seed);

/// Reads `path` verbatim. Throws Error(io) naming the path when the file is
/// missing, unreadable or empty.
Corpus load_corpus(const std::filesystem::path& path);

struct SampledPattern {
  std::size_t offset = 0;
  std::vector<Byte> bytes;
};

/// `count` substrings of length m taken at uniform random offsets.
std::vector<SampledPattern> sample_patterns(const Corpus& corpus, std::size_t m, std::size_t count,
                                            std::uint64_t seed);

struct GeneratorSpec {
  unsigned sigma = 4;
  std::size_t n = 1'000'000;
};

struct ParamPair {
  std::size_t q = 0;
  unsigned alpha = 0;

  auto operator<=>(const ParamPair&) const = default;
};

struct BenchConfig {
  std::variant<std::filesystem::path, GeneratorSpec> corpus = GeneratorSpec{};
  std::vector<std::size_t> lengths{8, 16, 32, 64, 128, 256, 512, 1024};
  std::size_t runs = 50;
  std::vector<Algorithm> algorithms{Algorithm::hc, Algorithm::shc, Algorithm::horspool, Algorithm::naive};
  std::vector<std::size_t> q_values{kDefaultQ};
  std::vector<unsigned> alpha_values{kDefaultAlpha};
  std::uint64_t seed = 1;
  /// Test hook: this algorithm over-reports by one occurrence per run.
  std::optional<Algorithm> corrupt;

  /// Throws Error(invalid_parameters) describing the first violated rule.
  void validate(std::size_t corpus_size) const;
};

struct VariantTiming {
  std::optional<ParamPair> params;
  double mean_ms = 0.0;
};

/// Index of the fastest variant; equal means go to the smaller (q, alpha).
std::size_t select_best(std::span<const VariantTiming> variants);

/// Aggregate for one (algorithm, m) cell using its fastest parameter pair.
struct BenchCell {
  Algorithm algorithm = Algorithm::hc;
  std::size_t m = 0;
  std::vector<VariantTiming> variants;
  std::optional<ParamPair> best;
  double mean_ms = 0.0;
  std::uint64_t occurrence_checksum = 0;
  /// Instrumented work; only present for hc and shc.
  std::optional<double> hashes_per_byte;
  std::optional<double> verifications_per_window;
};

struct CorpusTable {
  std::string corpus_name;
  std::size_t corpus_size = 0;
  std::size_t sigma = 0;
  std::size_t runs = 0;
  std::vector<std::size_t> lengths;
  std::vector<Algorithm> algorithms;
  std::vector<BenchCell> cells;

  const BenchCell& cell(Algorithm a, std::size_t m) const;
};

struct BenchReport {
  std::vector<CorpusTable> tables;
  std::vector<std::string> warnings;
};

/// Times compile + search for every algorithm, length and parameter pair.
/// Every run's occurrence count is cross-checked between all variants;
/// a disagreement throws Error(correctness).
BenchReport run_bench(const BenchConfig& config);

/// Same protocol against an already acquired corpus.
BenchReport run_bench(const BenchConfig& config, const Corpus& corpus);

enum class ReportFormat { tsv, markdown };

/// Accepts "tsv", "md" and "markdown".
ReportFormat parse_report_format(std::string_view name);

std::string render_report(const BenchReport& report, ReportFormat format);
std::string render_report(const BenchReport& report, std::string_view format);

}  // namespace hashchain::bench
