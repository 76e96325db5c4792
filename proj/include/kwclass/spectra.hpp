#pragma once

#include <string>
#include <vector>

#include "kwclass/sequences.hpp"
#include "kwclass/word.hpp"

namespace kwclass {

// flags[i-1] is true iff the length-i prefix of the keyword equals the
// length-i suffix or its negation. The full overlap i = m+1 is always true.
// Two keywords produce the same count of singleton classes at every length
// iff their fingerprints are equal.
struct CorrelationFingerprint {
  int m = 0;
  std::vector<bool> flags;  // size m+1, overlap i at index i-1

  std::vector<int> true_overlaps() const;
  std::string flag_string() const;  // e.g. "11001"

  friend bool operator==(const CorrelationFingerprint&,
                         const CorrelationFingerprint&) = default;
};

CorrelationFingerprint fingerprint(const Keyword& a);

// p1/p2: overlap indicators weighted by z^{m-i} (prefix equals suffix /
// prefix equals negated suffix). q: the occurrence form sum z^i over both
// indicator kinds, which drives the validated rational series below.
struct CorrelationPolynomials {
  std::vector<int> p1;  // coefficient of z^k at index k, degree <= m-1
  std::vector<int> p2;
  std::vector<int> q;  // size m+1, q[0] == 0
};

CorrelationPolynomials correlation_polynomials(const Keyword& a);

// Ascending powers, zero terms suppressed: "1 + z + 2z^3"; "0" when empty.
std::string poly_str(const std::vector<int>& coeffs);

// True iff a and b induce the same number of singleton classes for every
// word length (decided by fingerprint equality). Lengths must match.
bool same_size1_counts(const Keyword& a, const Keyword& b);

// c_n = number of length-n words containing neither the keyword nor its
// negation; equals the number of singleton classes at length n.

// Exhaustive scan for n <= max_n(), transfer-matrix evaluation beyond.
std::vector<BigInt> size1_series_brute(const Keyword& a, int n_max);

// Dynamic programming over states = last m letters, with transitions that
// would complete the keyword or its negation removed.
std::vector<BigInt> size1_series_transfer(const Keyword& a, int n_max);

// Series of the rational function
//   G(z) = z (z^{m+1} + Q(z)) / ((z-2)(z^{m+1} + Q(z)) + 2z)
// in powers of 1/z, expanded through the linear recurrence read off the
// denominator with exhaustively-computed initial terms. Tests pin this to
// the brute-force count for every keyword they sweep.
std::vector<BigInt> size1_series_gf(const Keyword& a, int n_max);

std::string series_csv(const std::vector<BigInt>& series);
std::string series_json(const Keyword& a, const std::vector<BigInt>& series);

}  // namespace kwclass
