#include "hashchain/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>

#include "hashchain/baselines.hpp"
#include "hashchain/error.hpp"
#include "hashchain/pattern.hpp"
#include "hashchain/search.hpp"

namespace hashchain::bench {

std::string_view to_string(Algorithm algo) noexcept {
  switch (algo) {
    case Algorithm::hc: return "hc";
    case Algorithm::shc: return "shc";
    case Algorithm::naive: return "naive";
    case Algorithm::horspool: return "horspool";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
  if (name == "hc") return Algorithm::hc;
  if (name == "shc") return Algorithm::shc;
  if (name == "naive") return Algorithm::naive;
  if (name == "horspool") return Algorithm::horspool;
  return std::nullopt;
}

std::size_t count_distinct_bytes(ByteView data) noexcept {
  std::array<bool, 256> seen{};
  std::size_t distinct = 0;
  for (Byte b : data) {
    if (!seen[b]) {
      seen[b] = true;
      ++distinct;
    }
  }
  return distinct;
}

Corpus generate_corpus(unsigned sigma, std::size_t n, std::uint64_t seed) {
  if (sigma < 1 || sigma > 256)
    throw Error(ErrorKind::invalid_parameters, "sigma must be in [1, 256], got " + std::to_string(sigma));
  if (n < 1) throw Error(ErrorKind::invalid_parameters, "corpus length must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> dist(0, sigma - 1);
  Corpus c;
  c.name = "random-sigma" + std::to_string(sigma);
  c.data.resize(n);
  for (Byte& b : c.data) b = static_cast<Byte>(dist(rng));
  c.sigma_observed = count_distinct_bytes(c.data);
  return c;
}

Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open corpus file '" + path.string() + "'");
  Corpus c;
  c.name = path.filename().string();
  c.data.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorKind::io, "error reading corpus file '" + path.string() + "'");
  if (c.data.empty()) throw Error(ErrorKind::io, "corpus file '" + path.string() + "' is empty");
  c.sigma_observed = count_distinct_bytes(c.data);
  return c;
}

std::vector<SampledPattern> sample_patterns(const Corpus& corpus, std::size_t m, std::size_t count,
                                            std::uint64_t seed) {
  if (m < 1 || m > corpus.data.size())
    throw Error(ErrorKind::invalid_parameters, "pattern length " + std::to_string(m) + " exceeds corpus length " +
                                                   std::to_string(corpus.data.size()));
  if (count < 1) throw Error(ErrorKind::invalid_parameters, "pattern count must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dist(0, corpus.data.size() - m);
  std::vector<SampledPattern> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t off = dist(rng);
    const auto first = corpus.data.begin() + static_cast<std::ptrdiff_t>(off);
    out.push_back({off, std::vector<Byte>(first, first + static_cast<std::ptrdiff_t>(m))});
  }
  return out;
}

void BenchConfig::validate(std::size_t corpus_size) const {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::invalid_parameters, msg); };
  if (runs < 1) fail("runs must be at least 1");
  if (algorithms.empty()) fail("at least one algorithm is required");
  if (lengths.empty()) fail("at least one pattern length is required");
  for (std::size_t m : lengths) {
    if (m < 1) fail("pattern lengths must be at least 1");
    if (m > corpus_size)
      fail("pattern length " + std::to_string(m) + " exceeds corpus length " + std::to_string(corpus_size));
  }
  const bool needs_grid = std::any_of(algorithms.begin(), algorithms.end(), is_parameterized);
  if (needs_grid && (q_values.empty() || alpha_values.empty())) fail("hc/shc need at least one q and one alpha");
  for (std::size_t q : q_values)
    if (q < 1) fail("q values must be at least 1");
  for (unsigned a : alpha_values)
    if (a < 8 || a > 16) fail("alpha values must be in [8, 16], got " + std::to_string(a));
}

std::size_t select_best(std::span<const VariantTiming> variants) {
  if (variants.empty()) throw Error(ErrorKind::invalid_parameters, "no variants to choose from");
  std::size_t best = 0;
  for (std::size_t i = 1; i < variants.size(); ++i) {
    const VariantTiming& a = variants[i];
    const VariantTiming& b = variants[best];
    if (a.mean_ms < b.mean_ms || (a.mean_ms == b.mean_ms && a.params < b.params)) best = i;
  }
  return best;
}

const BenchCell& CorpusTable::cell(Algorithm a, std::size_t m) const {
  for (const BenchCell& c : cells)
    if (c.algorithm == a && c.m == m) return c;
  throw Error(ErrorKind::invalid_parameters,
              "no cell for " + std::string(to_string(a)) + " at m=" + std::to_string(m));
}

namespace {

using Clock = std::chrono::steady_clock;

// Smallest nonzero step observed between consecutive clock reads, in ms.
double clock_tick_ms() {
  auto best = Clock::duration::max();
  for (int i = 0; i < 2000; ++i) {
    const auto a = Clock::now();
    auto b = Clock::now();
    while (b == a) b = Clock::now();
    best = std::min(best, b - a);
  }
  return std::chrono::duration<double, std::milli>(best).count();
}

struct Variant {
  Algorithm algo;
  std::optional<ParamPair> params;
  double total_ms = 0.0;
  std::uint64_t occurrences = 0;
  double hashes_per_byte = 0.0;
  double verifications_per_window = 0.0;
};

// hc/shc variants with q <= m, in (q, alpha) order; falls back to q = m when
// every grid q is longer than the pattern.
std::vector<ParamPair> grid_for(const BenchConfig& cfg, std::size_t m) {
  std::vector<std::size_t> qs(cfg.q_values);
  std::vector<unsigned> alphas(cfg.alpha_values);
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  std::vector<ParamPair> grid;
  for (std::size_t q : qs)
    if (q <= m)
      for (unsigned a : alphas) grid.push_back({q, a});
  if (grid.empty())
    for (unsigned a : alphas) grid.push_back({m, a});
  return grid;
}

std::uint64_t pattern_seed(std::uint64_t seed, std::size_t m) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(m)};
  std::array<std::uint64_t, 1> out{};
  seq.generate(reinterpret_cast<std::uint32_t*>(out.data()), reinterpret_cast<std::uint32_t*>(out.data() + 1));
  return out[0];
}

std::string describe_failure(const Corpus& corpus, const SampledPattern& p, const Variant& v,
                             std::uint64_t got, std::uint64_t expected) {
  std::ostringstream os;
  os << "occurrence count mismatch: algorithm " << to_string(v.algo);
  if (v.params) os << " (q=" << v.params->q << ", alpha=" << v.params->alpha << ")";
  os << " found " << got << " but reference found " << expected << " for the pattern of length " << p.bytes.size()
     << " taken at offset " << p.offset << " of corpus '" << corpus.name << "'";
  return os.str();
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
  if (const auto* path = std::get_if<std::filesystem::path>(&config.corpus)) return run_bench(config, load_corpus(*path));
  const auto& gen = std::get<GeneratorSpec>(config.corpus);
  return run_bench(config, generate_corpus(gen.sigma, gen.n, config.seed));
}

BenchReport run_bench(const BenchConfig& config, const Corpus& corpus) {
  config.validate(corpus.data.size());

  BenchReport report;
  CorpusTable table;
  table.corpus_name = corpus.name;
  table.corpus_size = corpus.data.size();
  table.sigma = corpus.sigma_observed;
  table.runs = config.runs;
  table.lengths = config.lengths;
  table.algorithms = config.algorithms;

  const ByteView text(corpus.data);
  const double n = static_cast<double>(text.size());
  const std::size_t max_m = *std::max_element(config.lengths.begin(), config.lengths.end());
  SearchBuffer sentinel_buf(text, max_m);
  const double tick_ms = clock_tick_ms();

  for (std::size_t m : config.lengths) {
    const auto patterns = sample_patterns(corpus, m, config.runs, pattern_seed(config.seed, m));

    std::vector<Variant> variants;
    for (Algorithm a : config.algorithms) {
      if (is_parameterized(a)) {
        for (const ParamPair& p : grid_for(config, m)) variants.push_back({a, p});
      } else {
        variants.push_back({a, std::nullopt});
      }
    }

    for (const SampledPattern& pat : patterns) {
      const ByteView x(pat.bytes);
      std::optional<std::uint64_t> reference;
      for (Variant& v : variants) {
        std::size_t count = 0;
        std::optional<CompiledPattern> cp;
        const auto t0 = Clock::now();
        switch (v.algo) {
          case Algorithm::hc:
            cp.emplace(compile(x, v.params->q, v.params->alpha));
            count = search_hc(*cp, text, Instrument::off).occurrences.size();
            break;
          case Algorithm::shc:
            cp.emplace(compile(x, v.params->q, v.params->alpha));
            count = search_shc(*cp, sentinel_buf, Instrument::off).occurrences.size();
            break;
          case Algorithm::naive: count = naive_search(x, text).size(); break;
          case Algorithm::horspool: count = horspool_search(x, text).size(); break;
        }
        const auto t1 = Clock::now();
        v.total_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();

        if (config.corrupt == v.algo) ++count;
        if (!reference) reference = count;
        if (count != *reference) throw Error(ErrorKind::correctness, describe_failure(corpus, pat, v, count, *reference));
        v.occurrences += count;

        // Work counters come from a separate untimed pass.
        if (cp) {
          const SearchMetrics mt = v.algo == Algorithm::hc ? search_hc(*cp, text).metrics
                                                            : search_shc(*cp, sentinel_buf).metrics;
          v.hashes_per_byte += static_cast<double>(mt.qgram_hashes) / n;
          if (mt.windows > 0)
            v.verifications_per_window += static_cast<double>(mt.verifications) / static_cast<double>(mt.windows);
        }
      }
    }

    const double runs = static_cast<double>(config.runs);
    for (Algorithm a : config.algorithms) {
      BenchCell cell;
      cell.algorithm = a;
      cell.m = m;
      std::vector<const Variant*> mine;
      for (const Variant& v : variants) {
        if (v.algo != a) continue;
        mine.push_back(&v);
        cell.variants.push_back({v.params, v.total_ms / runs});
      }
      const Variant* best = mine[select_best(cell.variants)];
      cell.best = best->params;
      cell.mean_ms = best->total_ms / runs;
      cell.occurrence_checksum = best->occurrences;
      if (is_parameterized(a)) {
        cell.hashes_per_byte = best->hashes_per_byte / runs;
        cell.verifications_per_window = best->verifications_per_window / runs;
      }
      // Three significant digits need the interval to span 100 clock ticks.
      if (cell.mean_ms < 100.0 * tick_ms) {
        std::ostringstream w;
        w << "timer resolution too coarse for " << to_string(a) << " at m=" << m << ": mean " << cell.mean_ms
          << " ms vs tick " << tick_ms << " ms";
        report.warnings.push_back(w.str());
      }
      table.cells.push_back(cell);
    }
  }

  report.tables.push_back(std::move(table));
  return report;
}

}  // namespace hashchain::bench
