#include <cctype>
#include <iomanip>
#include <sstream>

#include "hashchain/bench.hpp"
#include "hashchain/error.hpp"

namespace hashchain::bench {

namespace {

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string render_tsv(const BenchReport& report) {
  std::ostringstream os;
  os << "corpus\talgorithm";
  for (std::size_t m : report.tables.front().lengths)
    os << "\tms_" << m << "\tq_" << m << "\talpha_" << m << "\toccurrences_" << m << "\thashes_per_byte_" << m
       << "\tverifications_per_window_" << m;
  os << '\n';
  for (const CorpusTable& t : report.tables) {
    for (Algorithm a : t.algorithms) {
      os << t.corpus_name << '\t' << to_string(a);
      for (std::size_t m : t.lengths) {
        const BenchCell& c = t.cell(a, m);
        os << '\t' << fixed(c.mean_ms, 2);
        if (c.best)
          os << '\t' << c.best->q << '\t' << c.best->alpha;
        else
          os << "\t-\t-";
        os << '\t' << c.occurrence_checksum;
        os << '\t' << (c.hashes_per_byte ? fixed(*c.hashes_per_byte, 6) : "-");
        os << '\t' << (c.verifications_per_window ? fixed(*c.verifications_per_window, 6) : "-");
      }
      os << '\n';
    }
  }
  return os.str();
}

std::string render_markdown(const BenchReport& report) {
  std::ostringstream os;
  bool first = true;
  for (const CorpusTable& t : report.tables) {
    if (!first) os << '\n';
    first = false;
    os << "### " << t.corpus_name << " (n=" << t.corpus_size << ", sigma=" << t.sigma << ", runs=" << t.runs
       << ")\n\n";
    os << "| m |";
    for (std::size_t m : t.lengths) os << ' ' << m << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < t.lengths.size(); ++i) os << "---|";
    os << '\n';
    for (Algorithm a : t.algorithms) {
      os << "| " << upper(to_string(a)) << " |";
      for (std::size_t m : t.lengths) {
        const BenchCell& c = t.cell(a, m);
        os << ' ' << fixed(c.mean_ms, 2);
        if (c.best) os << " <sub>(" << c.best->q << "," << c.best->alpha << ")</sub>";
        os << " |";
      }
      os << '\n';
    }
    os << "\nOccurrences per m:";
    for (std::size_t m : t.lengths) os << ' ' << m << '=' << t.cell(t.algorithms.front(), m).occurrence_checksum;
    os << '\n';
  }
  for (const std::string& w : report.warnings) os << "\n> warning: " << w << '\n';
  return os.str();
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "tsv") return ReportFormat::tsv;
  if (name == "md" || name == "markdown") return ReportFormat::markdown;
  throw Error(ErrorKind::invalid_parameters, "unknown report format '" + std::string(name) + "'");
}

std::string render_report(const BenchReport& report, ReportFormat format) {
  if (report.tables.empty()) throw Error(ErrorKind::invalid_parameters, "cannot render an empty report");
  return format == ReportFormat::tsv ? render_tsv(report) : render_markdown(report);
}

std::string render_report(const BenchReport& report, std::string_view format) {
  return render_report(report, parse_report_format(format));
}

}  // namespace hashchain::bench
