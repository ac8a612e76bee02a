#include <doctest.h>

#include <random>

#include "hashchain/baselines.hpp"
#include "hashchain/error.hpp"
#include "oracle.hpp"

using namespace hashchain;

namespace {

std::vector<std::size_t> starts(const std::vector<Occurrence>& occ) {
  std::vector<std::size_t> out;
  for (const auto& o : occ) out.push_back(o.start);
  return out;
}

}  // namespace

TEST_CASE("baselines on small inputs") {
  for (auto algo : {BaselineAlgo::naive, BaselineAlgo::horspool}) {
    CAPTURE(to_string(algo));
    CHECK(starts(run_baseline(algo, as_bytes("aa"), as_bytes("aaaa"))) == std::vector<std::size_t>{0, 1, 2});
    CHECK(run_baseline(algo, as_bytes("abc"), as_bytes("zzzz")).empty());
    CHECK(run_baseline(algo, as_bytes("abc"), as_bytes("ab")).empty());
    CHECK(run_baseline(algo, as_bytes("abc"), as_bytes("")).empty());
    CHECK(starts(run_baseline(algo, as_bytes("x"), as_bytes("xax"))) == std::vector<std::size_t>{0, 2});
    CHECK_THROWS_AS(run_baseline(algo, as_bytes(""), as_bytes("abc")), Error);
  }
}

TEST_CASE("baseline names round-trip") {
  CHECK(parse_baseline("naive") == BaselineAlgo::naive);
  CHECK(parse_baseline("horspool") == BaselineAlgo::horspool);
  CHECK_FALSE(parse_baseline("bndm").has_value());
  CHECK(to_string(BaselineAlgo::horspool) == "horspool");
}

TEST_CASE("naive and horspool agree with an independent scan") {
  std::mt19937_64 rng(99);
  const unsigned sigmas[] = {2, 4, 20, 64, 256};
  for (int trial = 0; trial < 10'000; ++trial) {
    const unsigned sigma = sigmas[trial % 5];
    const std::size_t m = 1 + rng() % 24;
    const auto x = oracle::random_bytes(rng, m, sigma);
    auto y = oracle::random_bytes(rng, rng() % 400, sigma);
    if (y.size() >= m && rng() % 2 == 0) std::copy(x.begin(), x.end(), y.begin() + static_cast<std::ptrdiff_t>(rng() % (y.size() - m + 1)));
    const auto naive = starts(naive_search(x, y));
    REQUIRE(naive == oracle::positions(x, y));
    REQUIRE(starts(horspool_search(x, y)) == naive);
  }
}
