#include "hashchain/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "hashchain/baselines.hpp"
#include "hashchain/bench.hpp"
#include "hashchain/error.hpp"
#include "hashchain/pattern.hpp"
#include "hashchain/search.hpp"
#include "hashchain/selftest.hpp"

namespace hashchain::cli {

namespace {

struct SearchOptions {
  std::vector<std::string> args;
  std::string pattern_file;
  std::string algo = "hc";
  std::size_t q = kDefaultQ;
  unsigned alpha = kDefaultAlpha;
  bool count = false;
};

struct BenchOptions {
  std::string corpus;
  std::string gen;
  std::vector<std::size_t> lengths{8, 16, 32, 64, 128, 256, 512, 1024};
  std::size_t runs = 50;
  std::vector<std::string> algos{"hc", "shc", "horspool", "naive"};
  std::vector<std::size_t> q{kDefaultQ};
  std::vector<unsigned> alpha{kDefaultAlpha};
  std::uint64_t seed = 1;
  std::string format = "md";
  std::string corrupt;
};

struct SelftestCliOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  bool corrupt = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t size_on_disk(const std::filesystem::path& path) {
  std::error_code ec;
  const auto size = std::filesystem::file_size(path, ec);
  if (ec) throw Error(ErrorKind::io, "cannot read '" + path.string() + "': " + ec.message());
  return static_cast<std::size_t>(size);
}

// Reads a whole file into dst, which must be exactly size_on_disk(path) long.
void read_into(const std::filesystem::path& path, std::span<Byte> dst) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open '" + path.string() + "'");
  in.read(reinterpret_cast<char*>(dst.data()), static_cast<std::streamsize>(dst.size()));
  if (static_cast<std::size_t>(in.gcount()) != dst.size())
    throw Error(ErrorKind::io, "short read from '" + path.string() + "'");
}

std::vector<Byte> read_file(const std::filesystem::path& path) {
  std::vector<Byte> data(size_on_disk(path));
  read_into(path, data);
  return data;
}

int cmd_search(const SearchOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<Byte> pattern;
  std::filesystem::path text_path;
  if (!opt.pattern_file.empty()) {
    if (opt.args.size() != 1) throw UsageError("with --pattern-file give exactly one TEXT argument");
    pattern = read_file(opt.pattern_file);
    text_path = opt.args[0];
  } else {
    if (opt.args.size() != 2) throw UsageError("expected PATTERN and TEXT arguments");
    pattern.assign(opt.args[0].begin(), opt.args[0].end());
    text_path = opt.args[1];
  }
  if (pattern.empty()) throw Error(ErrorKind::empty_pattern, "pattern must not be empty");

  const auto algo = bench::parse_algorithm(opt.algo);
  if (!algo) throw UsageError("unknown algorithm '" + opt.algo + "'");

  std::size_t q = opt.q;
  if (bench::is_parameterized(*algo) && q > pattern.size()) {
    err << "warning: q=" << q << " exceeds the pattern length, using q=" << pattern.size() << '\n';
    q = pattern.size();
  }

  std::vector<Occurrence> found;
  switch (*algo) {
    case bench::Algorithm::hc: {
      const CompiledPattern cp = compile(pattern, q, opt.alpha);
      found = search_hc(cp, read_file(text_path), Instrument::off).occurrences;
      break;
    }
    case bench::Algorithm::shc: {
      const CompiledPattern cp = compile(pattern, q, opt.alpha);
      SearchBuffer buf(size_on_disk(text_path), pattern.size());
      read_into(text_path, buf.text());
      found = search_shc(cp, buf, Instrument::off).occurrences;
      break;
    }
    case bench::Algorithm::naive: found = naive_search(pattern, read_file(text_path)); break;
    case bench::Algorithm::horspool: found = horspool_search(pattern, read_file(text_path)); break;
  }

  if (opt.count) {
    out << found.size() << '\n';
  } else {
    std::string lines;
    lines.reserve(found.size() * 8);
    for (const Occurrence& o : found) {
      lines += std::to_string(o.start);
      lines += '\n';
    }
    out << lines;
  }
  return found.empty() ? kNotFound : kFound;
}

bench::BenchConfig to_config(const BenchOptions& opt) {
  if (opt.corpus.empty() == opt.gen.empty()) throw UsageError("give exactly one of --corpus or --gen");
  bench::BenchConfig cfg;
  if (!opt.corpus.empty()) {
    cfg.corpus = std::filesystem::path(opt.corpus);
  } else {
    const auto comma = opt.gen.find(',');
    if (comma == std::string::npos) throw UsageError("--gen expects SIGMA,N");
    bench::GeneratorSpec g;
    try {
      std::size_t used = 0;
      const std::string sigma = opt.gen.substr(0, comma);
      const std::string n = opt.gen.substr(comma + 1);
      g.sigma = static_cast<unsigned>(std::stoul(sigma, &used));
      if (used != sigma.size()) throw std::invalid_argument(sigma);
      g.n = static_cast<std::size_t>(std::stoull(n, &used));
      if (used != n.size()) throw std::invalid_argument(n);
    } catch (const std::logic_error&) {
      throw UsageError("--gen expects SIGMA,N, got '" + opt.gen + "'");
    }
    cfg.corpus = g;
  }
  cfg.lengths = opt.lengths;
  cfg.runs = opt.runs;
  cfg.algorithms.clear();
  for (const std::string& name : opt.algos) {
    const auto a = bench::parse_algorithm(name);
    if (!a) throw UsageError("unknown algorithm '" + name + "'");
    cfg.algorithms.push_back(*a);
  }
  cfg.q_values = opt.q;
  cfg.alpha_values = opt.alpha;
  cfg.seed = opt.seed;
  if (!opt.corrupt.empty()) {
    cfg.corrupt = bench::parse_algorithm(opt.corrupt);
    if (!cfg.corrupt) throw UsageError("unknown algorithm '" + opt.corrupt + "'");
  }
  return cfg;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  const bench::BenchConfig cfg = to_config(opt);
  const bench::ReportFormat format = bench::parse_report_format(opt.format);
  const bench::BenchReport report = bench::run_bench(cfg);
  for (const std::string& w : report.warnings) err << "warning: " << w << '\n';
  out << bench::render_report(report, format);
  return kFound;
}

int cmd_selftest(const SelftestCliOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.trials < 1) throw UsageError("--trials must be at least 1");
  SelftestOptions so;
  so.trials = opt.trials;
  so.seed = opt.seed;
  so.corrupt_hc = opt.corrupt;
  const SelftestSummary s = run_selftest(so);
  out << "selftest: " << (s.trials - s.failures) << "/" << s.trials << " trials passed (seed " << opt.seed << ")\n";
  if (s.passed()) return kFound;
  const TrialCase& c = *s.minimal_failure;
  err << "FAIL: " << s.failure_reason << '\n'
      << "  pattern: " << escape_bytes(c.pattern) << '\n'
      << "  text:    " << escape_bytes(c.text) << '\n'
      << "  q=" << c.q << " alpha=" << c.alpha << " sigma=" << c.sigma << '\n';
  return kSelftestFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hash Chain exact string matching: search, benchmark and self-test", "hashchain"};
  app.require_subcommand(1);

  SearchOptions so;
  CLI::App* search = app.add_subcommand("search", "Report occurrences of a pattern in a file");
  search->add_option("args", so.args, "PATTERN TEXT, or just TEXT with --pattern-file")->required()->expected(1, 2);
  search->add_option("-f,--pattern-file", so.pattern_file, "Read the pattern bytes from a file");
  search->add_option("-a,--algo", so.algo, "hc, shc, naive or horspool")->capture_default_str();
  search->add_option("-q", so.q, "q-gram length")->capture_default_str();
  search->add_option("--alpha", so.alpha, "Filter table size exponent")->capture_default_str();
  search->add_flag("-c,--count", so.count, "Print only the number of occurrences");

  BenchOptions bo;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time algorithms over sampled patterns");
  bench_cmd->add_option("--corpus", bo.corpus, "Corpus file read verbatim");
  bench_cmd->add_option("--gen", bo.gen, "Generate a random corpus: SIGMA,N");
  bench_cmd->add_option("--lengths", bo.lengths, "Pattern lengths")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--runs", bo.runs, "Patterns per length")->capture_default_str();
  bench_cmd->add_option("--algos", bo.algos, "Algorithms")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--q", bo.q, "q values for hc/shc")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--alpha", bo.alpha, "alpha values for hc/shc")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--seed", bo.seed, "RNG seed")->capture_default_str();
  bench_cmd->add_option("--format", bo.format, "tsv or md")->capture_default_str();
  bench_cmd->add_option("--inject-fault", bo.corrupt)->group("");

  SelftestCliOptions to;
  CLI::App* selftest = app.add_subcommand("selftest", "Randomized comparison against the naive oracle");
  selftest->add_option("--trials", to.trials, "Number of trials")->capture_default_str();
  selftest->add_option("--seed", to.seed, "RNG seed")->capture_default_str();
  selftest->add_flag("--inject-fault", to.corrupt)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (search->parsed()) return cmd_search(so, out, err);
    if (bench_cmd->parsed()) return cmd_bench(bo, out, err);
    return cmd_selftest(to, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::correctness ? kBenchMismatch : kUsage;
  }
}

}  // namespace hashchain::cli
