#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "kwclass/sequences.hpp"

using namespace kwclass;

namespace {

std::vector<long long> ints(const std::vector<BigInt>& values) {
  std::vector<long long> out;
  for (const auto& v : values) out.push_back(v.convert_to<long long>());
  return out;
}

// Independent oracle: number of subsets of {F_1..F_max_index} summing to
// value, by flat bitmask enumeration. Also reports how many of those are
// nonconsecutive.
struct SubsetCounts {
  long long total = 0;
  long long nonconsecutive = 0;
};

SubsetCounts subset_search(int m, long long value, int max_index) {
  const auto f = fib_table(m, max_index);
  SubsetCounts counts;
  for (std::uint32_t pick = 0; pick < (1u << max_index); ++pick) {
    long long sum = 0;
    for (int i = 1; i <= max_index; ++i)
      if (pick >> (i - 1) & 1u) sum += f[i].convert_to<long long>();
    if (sum != value) continue;
    ++counts.total;
    if ((pick & (pick >> 1)) == 0) ++counts.nonconsecutive;
  }
  return counts;
}

}  // namespace

TEST_CASE("m-step sequence values") {
  CHECK(fib(1, 7) == 1);
  CHECK(ints(fib_table(1, 5)) == std::vector<long long>{1, 1, 1, 1, 1, 1});
  CHECK(ints(fib_table(2, 6)) == std::vector<long long>{1, 1, 2, 3, 5, 8, 13});
  CHECK(ints(fib_table(3, 5)) == std::vector<long long>{1, 1, 2, 4, 7, 13});
  CHECK(ints(fib_table(4, 7)) ==
        std::vector<long long>{1, 1, 2, 4, 8, 15, 29, 56});
  CHECK_THROWS_AS(fib(0, 3), Error);
  CHECK_THROWS_AS(fib(2, -1), Error);
}

TEST_CASE("partial sums") {
  CHECK(ints(partial_sum_table(2, 6)) ==
        std::vector<long long>{1, 2, 4, 7, 12, 20, 33});
  CHECK(partial_sum(3, 3) == 8);
  CHECK(partial_sum(2, 4) == 12);
}

TEST_CASE("both characterizations of the partial sums agree") {
  for (int m = 1; m <= 5; ++m) {
    const auto sums = partial_sum_table(m, 40);
    for (int n = 0; n <= 40; ++n) {
      if (n <= m) {
        CHECK(sums[n] == BigInt(1) << n);
      } else {
        CHECK(sums[n] == 2 * sums[n - 1] - sums[n - m - 1]);
      }
    }
  }
}

TEST_CASE("word values") {
  CHECK(word_value(2, Word::parse("0000")) == 0);
  CHECK(word_value(2, Word::parse("1111")) == 11);
  CHECK(word_value(2, Word::parse("00010")) == 5);
  CHECK(word_value(2, Word::parse("")) == 0);
}

TEST_CASE("greedy nonconsecutive representation") {
  CHECK(zeckendorf(0).indices.empty());
  CHECK(zeckendorf(16).indices == std::vector<int>{3, 6});
  CHECK(zeckendorf(11).indices == std::vector<int>{3, 5});
  CHECK(to_string(zeckendorf(16)) == "(3,3) (6,13)");
  CHECK(to_string(zeckendorf(0)) == "");
  CHECK_THROWS_AS(zeckendorf(-1), Error);
}

TEST_CASE("representation is nonconsecutive, exact and unique") {
  // F_14 = 610 > 500, so 13 indices cover every value checked.
  for (long long value = 0; value <= 500; ++value) {
    const auto rep = zeckendorf(value);
    BigInt sum = 0;
    const auto f = fib_table(2, 14);
    for (std::size_t at = 0; at < rep.indices.size(); ++at) {
      sum += f[rep.indices[at]];
      if (at > 0) CHECK(rep.indices[at] - rep.indices[at - 1] >= 2);
    }
    CHECK(sum == value);
    CHECK(subset_search(2, value, 13).nonconsecutive == 1);
  }
}

TEST_CASE("representation counts match exhaustive search") {
  CHECK(count_representations(2, 0, 10) == 1);
  CHECK(count_representations(2, 8, 10) == 3);   // 8; 5+3; 5+2+1
  CHECK(count_representations(2, 16, 10) == 4);  // 13+3; 13+2+1; 8+5+3; 8+5+2+1
  for (long long value = 0; value <= 500; ++value)
    CHECK(count_representations(2, value, 13) ==
          subset_search(2, value, 13).total);
  // All m=1 terms equal 1, so the count is binomial.
  CHECK(count_representations(1, 2, 4) == 6);
  CHECK_THROWS_AS(count_representations(2, -3, 10), Error);
  CHECK_THROWS_AS(count_representations(2, 5, 0), Error);
}

TEST_CASE("tribonacci representation counts") {
  // Exhaustive cross-check for a second step count.
  for (long long value = 0; value <= 200; ++value)
    CHECK(count_representations(3, value, 10) ==
          subset_search(3, value, 10).total);
}

TEST_CASE("largest representation count per block") {
  CHECK(max_representations(2, 6) == 4);
  CHECK(max_representations(2, 5) == 3);
  CHECK(max_representations(2, 1) == 1);
  CHECK_THROWS_AS(max_representations(1, 4), Error);
  CHECK_THROWS_AS(max_representations(2, 0), Error);
}

TEST_CASE("block maxima follow the closed forms") {
  // Max(2n+1) = F_{n+1}, Max(2n+2) = 2 F_n.
  const auto f = fib_table(2, 8);
  for (int n = 1; n <= 4; ++n) {
    CHECK(max_representations(2, 2 * n + 1) == f[n + 1]);
    CHECK(max_representations(2, 2 * n + 2) == 2 * f[n]);
  }
}
