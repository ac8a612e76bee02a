#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hashchain/cli.hpp"

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "hashchain");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = hashchain::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

struct TempFile {
  std::filesystem::path path;
  TempFile(const std::string& name, const std::string& contents)
      : path(std::filesystem::temp_directory_path() / name) {
    std::ofstream(path, std::ios::binary) << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("search prints ascending positions") {
  TempFile text("hc_cli_aaaa.txt", "aaaa");
  for (const char* algo : {"hc", "shc", "naive", "horspool"}) {
    CAPTURE(algo);
    const Outcome o = run({"search", "aa", text.str(), "--algo", algo, "-q", "2"});
    CHECK(o.status == 0);
    CHECK(o.out == "0\n1\n2\n");
  }
}

TEST_CASE("search without a match exits 1 with empty output") {
  TempFile text("hc_cli_text.txt", "the quick brown fox");
  const Outcome o = run({"search", "zebra", text.str()});
  CHECK(o.status == 1);
  CHECK(o.out.empty());
  const Outcome c = run({"search", "zebra", text.str(), "--count"});
  CHECK(c.status == 1);
  CHECK(c.out == "0\n");
}

TEST_CASE("count mode and pattern files") {
  TempFile text("hc_cli_bin.txt", std::string("ab\0ab\0ab", 8));
  TempFile pat("hc_cli_pat.bin", std::string("b\0a", 3));
  const Outcome o = run({"search", "--pattern-file", pat.str(), text.str(), "-q", "2"});
  CHECK(o.status == 0);
  CHECK(o.out == "1\n4\n");
  const Outcome c = run({"search", "-f", pat.str(), text.str(), "-c"});
  CHECK(c.out == "2\n");
}

TEST_CASE("hc and shc print identical output") {
  std::mt19937_64 rng(6);
  std::string data(200'000, 'a');
  for (char& c : data) c = "acgt"[rng() % 4];
  TempFile text("hc_cli_dna.txt", data);
  const std::string pattern = data.substr(1234, 12);
  const Outcome hc = run({"search", pattern, text.str(), "--algo", "hc", "-q", "6", "--alpha", "12"});
  const Outcome shc = run({"search", pattern, text.str(), "--algo", "shc", "-q", "6", "--alpha", "12"});
  const Outcome naive = run({"search", pattern, text.str(), "--algo", "naive"});
  CHECK(hc.status == 0);
  CHECK(hc.out == shc.out);
  CHECK(hc.out == naive.out);
}

TEST_CASE("q larger than the pattern is clamped with a warning") {
  TempFile text("hc_cli_clamp.txt", "xxabcxxabc");
  const Outcome o = run({"search", "abc", text.str(), "-q", "8"});
  CHECK(o.status == 0);
  CHECK(o.out == "2\n7\n");
  CHECK(o.err.find("warning") != std::string::npos);
}

TEST_CASE("search usage and I/O errors exit 2") {
  TempFile text("hc_cli_err.txt", "abc");
  CHECK(run({"search", "abc", "/nonexistent/file.txt"}).status == 2);
  CHECK(run({"search", "", text.str()}).status == 2);
  CHECK(run({"search", "abc", text.str(), "--alpha", "0"}).status == 2);
  CHECK(run({"search", "abc", text.str(), "--alpha", "31"}).status == 2);
  CHECK(run({"search", "abc", text.str(), "-q", "0"}).status == 2);
  CHECK(run({"search", "abc", text.str(), "--algo", "bndm"}).status == 2);
  CHECK(run({"search", "abc", text.str(), "--bogus"}).status == 2);
  CHECK(run({"search", text.str()}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  TempFile empty("hc_cli_empty_pat.bin", "");
  CHECK(run({"search", "-f", empty.str(), text.str()}).status == 2);
}

TEST_CASE("help exits 0") {
  const Outcome o = run({"--help"});
  CHECK(o.status == 0);
  CHECK(o.out.find("search") != std::string::npos);
}

TEST_CASE("bench report shape") {
  const Outcome o = run({"bench", "--gen", "4,1000000", "--lengths", "8,16,32", "--algos", "hc,naive", "--seed", "1",
                         "--runs", "3", "--format", "tsv"});
  REQUIRE(o.status == 0);
  CHECK(count_lines(o.out) == 3);  // header + 2 algorithm rows
  std::istringstream is(o.out);
  std::string header;
  std::getline(is, header);
  CHECK(std::count(header.begin(), header.end(), '\t') == 1 + 6 * 3);

  const Outcome md = run({"bench", "--gen", "4,1000000", "--lengths", "8,16,32", "--algos", "hc,naive", "--seed",
                          "1", "--runs", "3"});
  REQUIRE(md.status == 0);
  CHECK(md.out.find("| m | 8 | 16 | 32 |") != std::string::npos);
  CHECK(md.out.find("| HC |") != std::string::npos);
  CHECK(md.out.find("| NAIVE |") != std::string::npos);
}

TEST_CASE("bench is deterministic in its checksums") {
  const std::vector<std::string> args{"bench", "--gen", "4,200000", "--lengths", "8,16", "--algos", "hc,shc,naive",
                                      "--runs", "4", "--seed", "5", "--format", "md"};
  const Outcome a = run(args);
  const Outcome b = run(args);
  REQUIRE(a.status == 0);
  const auto checksums = [](const std::string& s) { return s.substr(s.find("Occurrences per m:")); };
  CHECK(checksums(a.out).substr(0, checksums(a.out).find('\n')) ==
        checksums(b.out).substr(0, checksums(b.out).find('\n')));
}

TEST_CASE("bench error paths") {
  CHECK(run({"bench", "--gen", "4,100000", "--lengths", "8", "--algos", "hc,naive", "--runs", "2", "--inject-fault",
             "hc"})
            .status == 3);
  CHECK(run({"bench", "--lengths", "8"}).status == 2);
  TempFile corpus("hc_cli_corpus.txt", std::string(1000, 'a'));
  CHECK(run({"bench", "--gen", "4,1000", "--corpus", corpus.str()}).status == 2);
  CHECK(run({"bench", "--corpus", "/nonexistent/corpus"}).status == 2);
  CHECK(run({"bench", "--gen", "4"}).status == 2);
  CHECK(run({"bench", "--gen", "4,x"}).status == 2);
  CHECK(run({"bench", "--gen", "4,1000", "--alpha", "20"}).status == 2);
  CHECK(run({"bench", "--gen", "4,1000", "--algos", "grep"}).status == 2);
  CHECK(run({"bench", "--gen", "4,1000", "--lengths", "8", "--format", "csv"}).status == 2);
  CHECK(run({"bench", "--gen", "4,100", "--lengths", "128"}).status == 2);

  const Outcome ok = run({"bench", "--corpus", corpus.str(), "--lengths", "8", "--runs", "2", "--format", "tsv"});
  CHECK(ok.status == 0);
  CHECK(ok.out.find("hc_cli_corpus.txt") != std::string::npos);
}

TEST_CASE("selftest") {
  const Outcome o = run({"selftest", "--trials", "1000", "--seed", "1"});
  CHECK(o.status == 0);
  CHECK(o.out.find("1000/1000") != std::string::npos);
  CHECK(run({"selftest", "--trials", "0"}).status == 2);

  const Outcome a = run({"selftest", "--trials", "50", "--seed", "3"});
  const Outcome b = run({"selftest", "--trials", "50", "--seed", "3"});
  CHECK(a.out == b.out);

  const Outcome bad = run({"selftest", "--trials", "200", "--seed", "2", "--inject-fault"});
  CHECK(bad.status == 4);
  CHECK(bad.err.find("pattern:") != std::string::npos);
  CHECK(bad.err.find("q=") != std::string::npos);
}
