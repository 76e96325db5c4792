#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kwclass/classes.hpp"

using namespace kwclass;

namespace {

Word w(const std::string& s) { return Word::parse(s); }
Keyword kw(const std::string& s) { return Keyword::parse(s); }

std::vector<std::string> members(const Keyword& a, const std::string& word) {
  std::vector<std::string> out;
  for (const auto& member : class_of(a, w(word))) out.push_back(member.str());
  return out;
}

Word random_word(std::mt19937& rng, int n) {
  return Word(static_cast<std::uint32_t>(rng()) & mask_of(n), n);
}

}  // namespace

TEST_CASE("the worked four-element class") {
  const auto got = members(kw("101"), "10010");
  CHECK(got == std::vector<std::string>{"10010", "01001", "10101", "11011"});
  CHECK(members(kw("101"), "11011") == got);  // any member, same class

  const ClassPartition partition(kw("101"), 5);
  CHECK(partition.class_size(w("10010")) == 4);
  CHECK(partition.same_class(w("10010"), w("11011")));
  CHECK(partition.representative(w("11011")) == w("10010"));
}

TEST_CASE("words shorter than the keyword form singletons") {
  const ClassPartition partition(kw("0011"), 3);
  CHECK(partition.class_count() == 8);
  const auto hist = partition.histogram();
  CHECK(hist == SizeHistogram{{1, 8}});
}

TEST_CASE("length equal to keyword gives one doubleton") {
  CHECK(members(kw("110"), "110") == std::vector<std::string>{"110", "001"});
  CHECK(members(kw("110"), "000") == std::vector<std::string>{"000"});
  const auto hist = histogram(kw("110"), 3);
  CHECK(hist == SizeHistogram{{1, 6}, {2, 1}});
}

TEST_CASE("reference class counts") {
  CHECK(count_classes(kw("110"), 4) == 12);
  CHECK(count_classes(kw("101"), 5) == 20);
  CHECK(count_classes(kw("101"), 6) == 33);
  CHECK(count_classes(kw("10001"), 11) == 1606);
}

TEST_CASE("reference histograms") {
  CHECK(histogram(kw("110"), 6) ==
        SizeHistogram{{1, 12}, {2, 12}, {3, 8}, {4, 1}});
  CHECK(histogram(kw("101"), 6) == SizeHistogram{{1, 26}, {5, 6}, {8, 1}});
  CHECK(histogram(kw("01001"), 12) ==
        SizeHistogram{{1, 2356}, {2, 528}, {3, 176}, {4, 24}, {5, 12}});
}

TEST_CASE("n = 0 has the single class of the empty word") {
  const ClassPartition partition(kw("110"), 0);
  CHECK(partition.class_count() == 1);
  CHECK(count_classes(kw("10"), 0) == 1);
}

TEST_CASE("capacity errors") {
  CHECK_THROWS_AS(ClassPartition(kw("110"), max_n() + 1), Error);
  CHECK_THROWS_AS(verify_theorem(kw("110"), max_n() + 1), Error);
}

TEST_CASE("histogram mass conservation") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    const Keyword a{Word(static_cast<std::uint32_t>(rng()) & mask_of(m + 1),
                        m + 1)};
    const int n = static_cast<int>(rng() % 13);
    const ClassPartition partition(a, n);
    const auto hist = partition.histogram();
    std::uint64_t total_words = 0, total_classes = 0;
    for (const auto& [size, count] : hist) {
      total_words += size * count;
      total_classes += count;
    }
    CHECK(total_words == partition.word_count());
    CHECK(total_classes == partition.class_count());
  }
}

TEST_CASE("parallel build matches the sequential build") {
  for (const char* keyword : {"10", "110", "0100"}) {
    const ClassPartition sequential(kw(keyword), 11, 1);
    const ClassPartition parallel(kw(keyword), 11, 3);
    CHECK(sequential.class_count() == parallel.class_count());
    CHECK(sequential.histogram() == parallel.histogram());
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
      const Word u = random_word(rng, 11);
      CHECK(sequential.representative(u) == parallel.representative(u));
    }
  }
}

TEST_CASE("negating the keyword changes nothing") {
  for (const char* keyword : {"10", "110", "101", "0011", "10001"}) {
    const Keyword a = kw(keyword);
    const Keyword negated{negate(a.word())};
    for (int n = 0; n <= 8; ++n) {
      const ClassPartition pa(a, n);
      const ClassPartition pn(negated, n);
      CHECK(pa.class_count() == pn.class_count());
      for (std::uint64_t id = 0; id < pa.word_count(); ++id) {
        const Word u(static_cast<std::uint32_t>(id), n);
        CHECK(pa.representative(u) == pn.representative(u));
      }
    }
  }
}

TEST_CASE("theorem verification reports") {
  const auto report = verify_theorem(kw("101"), 6);
  CHECK(report.ok);
  REQUIRE(report.rows.size() == 7);
  CHECK(report.rows[4].classes == 12);
  CHECK(report.rows[5].classes == 20);
  CHECK(report.rows[6].classes == 33);
  CHECK(report.str().find("MISMATCH") == std::string::npos);
  CHECK(verify_theorem(kw("0011"), 10).ok);
}

TEST_CASE("appending or prepending a common word preserves equivalence") {
  // u ~ v  iff  u+w ~ v+w  iff  w+u ~ w+v, sampled with a fixed seed.
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 120; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 3);
    const Keyword a{Word(static_cast<std::uint32_t>(rng()) & mask_of(m + 1),
                        m + 1)};
    const int n = 1 + static_cast<int>(rng() % 8);
    const int room = std::max(1, 12 - n);
    const int extra = 1 + static_cast<int>(rng() % room);
    const ClassPartition small(a, n);
    const ClassPartition big(a, n + extra);
    const Word u = random_word(rng, n);
    const Word v = random_word(rng, n);
    const Word tail = random_word(rng, extra);
    const bool base = small.same_class(u, v);
    CHECK(base == big.same_class(concat(u, tail), concat(v, tail)));
    CHECK(base == big.same_class(concat(tail, u), concat(tail, v)));
  }
}

TEST_CASE("class counts obey the two-term recursion") {
  for (const char* keyword : {"110", "101", "0001"}) {
    const Keyword a = kw(keyword);
    const int m = a.m();
    std::vector<std::uint64_t> counts;
    for (int n = 0; n <= 10; ++n) counts.push_back(count_classes(a, n));
    for (int n = m + 1; n <= 10; ++n)
      CHECK(counts[n] == 2 * counts[n - 1] - counts[n - m - 1]);
  }
}

TEST_CASE("serialization formats") {
  const auto hist = histogram(kw("110"), 4);
  CHECK(histogram_csv(hist) == "s,count\n1,8\n2,4\n");
  CHECK(histogram_json(kw("110"), 4, hist) ==
        R"({"keyword":"110","n":4,"histogram":{"1":8,"2":4},"total":12})");
}

TEST_CASE("length mismatch on queries") {
  const ClassPartition partition(kw("110"), 5);
  CHECK_THROWS_AS(partition.class_size(w("1100")), Error);
  CHECK_THROWS_AS(partition.same_class(w("11000"), w("110")), Error);
}
