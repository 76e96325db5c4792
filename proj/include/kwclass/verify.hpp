#pragma once

#include <string>

namespace kwclass {

struct SuiteResult {
  bool ok = true;
  std::string report;

  void merge(const SuiteResult& other) {
    ok = ok && other.ok;
    report += other.report;
  }
};

// Sweeps over every keyword of length 2..max_m+1 (optionally one keyword
// per orbit). Each returns a per-keyword report plus an overall verdict.

// count_classes(a, n) equals the partial sum of the m-step sequence for
// every n <= max_n, and the counts satisfy c_n = 2 c_{n-1} - c_{n-m-1}.
SuiteResult verify_theorem_sweep(int max_m, int max_n, int workers = 1,
                                 bool dedupe_orbit = false);

// Rational-series coefficients match the exhaustive avoiding-word count,
// the transfer-matrix count, and the s=1 histogram entry for n <= max_n.
SuiteResult verify_gf_sweep(int max_m, int max_n, bool dedupe_orbit = false);

// The keyword-level commutativity criterion agrees with the exhaustive
// check for every 1 <= i < j <= n - m, n <= max_n.
SuiteResult verify_commute_sweep(int max_m, int max_n,
                                 bool dedupe_orbit = false);

// Every substitution graph with n <= max_n two-colors.
SuiteResult verify_bipartite_sweep(int max_m, int max_n,
                                   bool dedupe_orbit = false);

// The negation builds the identical graph, and reversal/seminegation give
// isomorphic graphs, for n <= max_n. When cross_pair_max_n > 0 the sweep
// also confirms the cross-orbit pair 10000/01000 stays isomorphic for
// n <= cross_pair_max_n.
SuiteResult verify_iso_sweep(int max_m, int max_n, int cross_pair_max_n = 0,
                             bool dedupe_orbit = false);

}  // namespace kwclass
