#include "kwclass/verify.hpp"

#include <algorithm>
#include <sstream>

#include "kwclass/classes.hpp"
#include "kwclass/graphs.hpp"
#include "kwclass/spectra.hpp"

namespace kwclass {

namespace {

std::vector<Keyword> keywords_of_length(int length, bool dedupe_orbit) {
  std::vector<Keyword> out;
  for (std::uint32_t bits = 0; bits < (1u << length); ++bits) {
    const Keyword a{Word(bits, length)};
    if (dedupe_orbit && keyword_orbit(a).front().bits() != bits) continue;
    out.push_back(a);
  }
  return out;
}

template <typename Fn>
SuiteResult sweep(const std::string& name, int max_m, bool dedupe_orbit,
                  Fn&& check_keyword) {
  SuiteResult result;
  std::ostringstream report;
  for (int m = 1; m <= max_m; ++m) {
    for (const Keyword& a : keywords_of_length(m + 1, dedupe_orbit)) {
      const std::string failure = check_keyword(a);
      if (failure.empty()) {
        report << name << " keyword " << a.str() << ": ok\n";
      } else {
        report << name << " keyword " << a.str() << ": FAIL " << failure
               << '\n';
        result.ok = false;
      }
    }
  }
  report << name << ": " << (result.ok ? "all keywords ok" : "FAILURES")
         << " (m <= " << max_m << ")\n";
  result.report = report.str();
  return result;
}

}  // namespace

SuiteResult verify_theorem_sweep(int max_m, int max_n, int workers,
                                 bool dedupe_orbit) {
  return sweep("theorem", max_m, dedupe_orbit, [&](const Keyword& a) {
    const int m = a.m();
    const auto expected = partial_sum_table(m, max_n);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
      counts[n] = count_classes(a, n, workers);
      if (BigInt(counts[n]) != expected[n])
        return "count at n=" + std::to_string(n) + " is " +
               std::to_string(counts[n]) + ", expected " + expected[n].str();
    }
    for (int n = m + 1; n <= max_n; ++n) {
      if (BigInt(counts[n]) !=
          2 * BigInt(counts[n - 1]) - BigInt(counts[n - m - 1]))
        return "recursion fails at n=" + std::to_string(n);
    }
    return std::string();
  });
}

SuiteResult verify_gf_sweep(int max_m, int max_n, bool dedupe_orbit) {
  return sweep("gf", max_m, dedupe_orbit, [&](const Keyword& a) {
    const auto brute = size1_series_brute(a, max_n);
    const auto rational = size1_series_gf(a, max_n);
    const auto transfer = size1_series_transfer(a, max_n);
    for (int n = 0; n <= max_n; ++n) {
      if (rational[n] != brute[n] || transfer[n] != brute[n])
        return "series disagree at n=" + std::to_string(n) + ": brute " +
               brute[n].str() + ", gf " + rational[n].str() + ", transfer " +
               transfer[n].str();
      const auto hist = histogram(a, n);
      const auto it = hist.find(1);
      const BigInt singletons = it == hist.end() ? 0 : it->second;
      if (singletons != brute[n])
        return "histogram s=1 at n=" + std::to_string(n) + " is " +
               singletons.str() + ", series says " + brute[n].str();
    }
    return std::string();
  });
}

SuiteResult verify_commute_sweep(int max_m, int max_n, bool dedupe_orbit) {
  return sweep("commute", max_m, dedupe_orbit, [&](const Keyword& a) {
    const int m = a.m();
    for (int n = m + 2; n <= max_n; ++n)
      for (int i = 1; i < n - m; ++i)
        for (int j = i + 1; j <= n - m; ++j) {
          const bool predicted = commutes_by_criterion(a, j - i);
          const bool exhaustive = commutes_brute_force(a, i, j, n);
          if (predicted != exhaustive)
            return "criterion says " + std::to_string(predicted) +
                   " but exhaustive check says " + std::to_string(exhaustive) +
                   " at (i,j,n)=(" + std::to_string(i) + "," +
                   std::to_string(j) + "," + std::to_string(n) + ")";
        }
    return std::string();
  });
}

SuiteResult verify_bipartite_sweep(int max_m, int max_n, bool dedupe_orbit) {
  return sweep("bipartite", max_m, dedupe_orbit, [&](const Keyword& a) {
    for (int n = 1; n <= max_n; ++n)
      if (!is_bipartite(a, n)) return "odd cycle at n=" + std::to_string(n);
    return std::string();
  });
}

SuiteResult verify_iso_sweep(int max_m, int max_n, int cross_pair_max_n,
                             bool dedupe_orbit) {
  SuiteResult result = sweep("iso", max_m, dedupe_orbit, [&](const Keyword& a) {
    const Keyword negated{negate(a.word())};
    const Keyword reversed{reverse(a.word())};
    const Keyword seminegated{seminegate(a.word())};
    for (int n = 1; n <= max_n; ++n) {
      const SubstitutionGraph g(a, n), gn(negated, n);
      if (g.offsets() != gn.offsets() || g.targets() != gn.targets())
        return "negated keyword graph differs at n=" + std::to_string(n);
      if (!isomorphic(a, reversed, n))
        return "reversal not isomorphic at n=" + std::to_string(n);
      if (!isomorphic(a, seminegated, n))
        return "seminegation not isomorphic at n=" + std::to_string(n);
    }
    return std::string();
  });

  if (cross_pair_max_n > 0) {
    const Keyword first = Keyword::parse("10000");
    const Keyword second = Keyword::parse("01000");
    std::ostringstream report;
    for (int n = 1; n <= cross_pair_max_n; ++n) {
      if (!isomorphic(first, second, n)) {
        report << "iso cross pair 10000/01000: FAIL at n=" << n << '\n';
        result.ok = false;
        result.report += report.str();
        return result;
      }
    }
    report << "iso cross pair 10000/01000: isomorphic for n <= "
           << cross_pair_max_n << '\n';
    result.report += report.str();
  }
  return result;
}

}  // namespace kwclass
