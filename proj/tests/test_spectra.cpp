#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "kwclass/classes.hpp"
#include "kwclass/spectra.hpp"

using namespace kwclass;

namespace {

Keyword kw(const std::string& s) { return Keyword::parse(s); }

std::vector<long long> ints(const std::vector<BigInt>& values) {
  std::vector<long long> out;
  for (const auto& v : values) out.push_back(v.convert_to<long long>());
  return out;
}

std::vector<Keyword> keywords_up_to_m(int max_m) {
  std::vector<Keyword> out;
  for (int m = 1; m <= max_m; ++m)
    for (std::uint32_t bits = 0; bits < (1u << (m + 1)); ++bits)
      out.push_back(Keyword{Word(bits, m + 1)});
  return out;
}

}  // namespace

TEST_CASE("overlap fingerprints") {
  CHECK(fingerprint(kw("10001")).true_overlaps() == std::vector<int>{1, 2, 5});
  CHECK(fingerprint(kw("01001")).true_overlaps() == std::vector<int>{1, 2, 5});
  CHECK(fingerprint(kw("110")).true_overlaps() == std::vector<int>{1, 3});
  CHECK(fingerprint(kw("10001")).flag_string() == "11001");
}

TEST_CASE("the full overlap flag is always set") {
  for (const Keyword& a : keywords_up_to_m(4))
    CHECK(fingerprint(a).flags.back());
}

TEST_CASE("fingerprint is invariant under the keyword transformations") {
  for (const Keyword& a : keywords_up_to_m(4)) {
    const auto fp = fingerprint(a);
    CHECK(fp == fingerprint(Keyword{negate(a.word())}));
    CHECK(fp == fingerprint(Keyword{reverse(a.word())}));
    CHECK(fp == fingerprint(Keyword{seminegate(a.word())}));
  }
}

TEST_CASE("equal singleton counts") {
  CHECK(same_size1_counts(kw("10001"), kw("01001")));
  CHECK_FALSE(same_size1_counts(kw("110"), kw("101")));
  CHECK(same_size1_counts(kw("0111"), Keyword{reverse(Word::parse("0111"))}));
  CHECK_THROWS_AS(same_size1_counts(kw("110"), kw("1100")), Error);
}

TEST_CASE("equal fingerprints coincide with equal singleton counts") {
  // Both directions, comparing the exhaustive counts for n <= 12.
  const auto keywords = keywords_up_to_m(3);
  for (std::size_t x = 0; x < keywords.size(); ++x) {
    for (std::size_t y = x + 1; y < keywords.size(); ++y) {
      if (keywords[x].length() != keywords[y].length()) continue;
      const bool same_counts = size1_series_brute(keywords[x], 12) ==
                               size1_series_brute(keywords[y], 12);
      CHECK(same_counts == same_size1_counts(keywords[x], keywords[y]));
    }
  }
}

TEST_CASE("correlation polynomials") {
  const auto polys = correlation_polynomials(kw("110"));
  CHECK(poly_str(polys.p1) == "0");
  CHECK(poly_str(polys.p2) == "z");
  CHECK(poly_str(polys.q) == "z");
  const auto polys101 = correlation_polynomials(kw("101"));
  CHECK(poly_str(polys101.p1) == "z");
  CHECK(poly_str(polys101.p2) == "1");
  CHECK(poly_str(polys101.q) == "z + z^2");
}

TEST_CASE("p1 + p2 has 0/1 coefficients") {
  for (const Keyword& a : keywords_up_to_m(4)) {
    const auto polys = correlation_polynomials(a);
    for (std::size_t k = 0; k < polys.p1.size(); ++k) {
      const int coeff = polys.p1[k] + polys.p2[k];
      CHECK((coeff == 0 || coeff == 1));
    }
  }
}

TEST_CASE("reference avoidance counts") {
  CHECK(ints(size1_series_brute(kw("110"), 6)) ==
        std::vector<long long>{1, 2, 4, 6, 8, 10, 12});
  CHECK(ints(size1_series_brute(kw("101"), 6)) ==
        std::vector<long long>{1, 2, 4, 6, 10, 16, 26});
  CHECK(size1_series_brute(kw("0011"), 0) == std::vector<BigInt>{1});
  CHECK(size1_series_gf(kw("10001"), 11).back() == 1262);
  CHECK(size1_series_gf(kw("10001"), 12).back() == 2356);
}

TEST_CASE("the three series routes agree and match the histograms") {
  for (const Keyword& a : keywords_up_to_m(3)) {
    const auto brute = size1_series_brute(a, 12);
    CHECK(size1_series_gf(a, 12) == brute);
    CHECK(size1_series_transfer(a, 12) == brute);
    for (int n = 0; n <= 12; n += 3) {
      const auto hist = histogram(a, n);
      const auto it = hist.find(1);
      const std::uint64_t singletons = it == hist.end() ? 0 : it->second;
      CHECK(BigInt(singletons) == brute[n]);
    }
  }
}

TEST_CASE("series sanity bounds") {
  for (const Keyword& a : keywords_up_to_m(4)) {
    const auto series = size1_series_gf(a, 14);
    for (int n = 0; n <= a.m(); ++n) CHECK(series[n] == BigInt(1) << n);
    for (int n = 1; n <= 14; ++n) CHECK(series[n] <= 2 * series[n - 1]);
  }
}

TEST_CASE("transfer matrix extends past the exhaustive range") {
  // Alternating words are the only ones avoiding both 00 and 11.
  const auto series = size1_series_transfer(kw("00"), 40);
  CHECK(series[40] == 2);
  // Avoiding 10/01 keeps words constant.
  CHECK(size1_series_transfer(kw("10"), 35)[35] == 2);
  // Fibonacci-style growth for the m = 2 keywords.
  const auto gf = size1_series_gf(kw("101"), 30);
  const auto tm = size1_series_transfer(kw("101"), 30);
  CHECK(gf == tm);
}

TEST_CASE("series serialization") {
  const auto series = size1_series_gf(kw("110"), 3);
  CHECK(series_csv(series) == "n,c\n0,1\n1,2\n2,4\n3,6\n");
  CHECK(series_json(kw("110"), series) ==
        R"({"keyword": "110", "coefficients": [1, 2, 4, 6]})");
}

TEST_CASE("invalid series length") {
  CHECK_THROWS_AS(size1_series_brute(kw("110"), -1), Error);
}
