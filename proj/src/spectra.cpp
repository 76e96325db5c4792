#include "kwclass/spectra.hpp"

#include <algorithm>
#include <numeric>

namespace kwclass {

namespace {

void check_n_max(int n_max) {
  if (n_max < 0)
    throw Error(errc::invalid_parameter,
                "series length must be >= 0, got " + std::to_string(n_max));
}

}  // namespace

std::vector<int> CorrelationFingerprint::true_overlaps() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < flags.size(); ++k)
    if (flags[k]) out.push_back(static_cast<int>(k) + 1);
  return out;
}

std::string CorrelationFingerprint::flag_string() const {
  std::string out(flags.size(), '0');
  for (std::size_t k = 0; k < flags.size(); ++k)
    if (flags[k]) out[k] = '1';
  return out;
}

CorrelationFingerprint fingerprint(const Keyword& a) {
  const int m = a.m();
  CorrelationFingerprint fp{m, std::vector<bool>(m + 1, false)};
  for (int i = 1; i <= m + 1; ++i) {
    const Word prefix = subword(a.word(), 1, i);
    const Word suffix = subword(a.word(), m + 2 - i, m + 1);
    fp.flags[i - 1] = prefix == suffix || prefix == negate(suffix);
  }
  return fp;
}

CorrelationPolynomials correlation_polynomials(const Keyword& a) {
  const int m = a.m();
  CorrelationPolynomials polys;
  polys.p1.assign(m, 0);
  polys.p2.assign(m, 0);
  polys.q.assign(m + 1, 0);
  for (int i = 1; i <= m; ++i) {
    const Word prefix = subword(a.word(), 1, i);
    const Word suffix = subword(a.word(), m + 2 - i, m + 1);
    if (prefix == suffix) polys.p1[m - i] = 1;
    if (prefix == negate(suffix)) polys.p2[m - i] = 1;
    polys.q[i] = polys.p1[m - i] + polys.p2[m - i];
  }
  return polys;
}

std::string poly_str(const std::vector<int>& coeffs) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (!out.empty()) out += coeffs[k] > 0 ? " + " : " - ";
    else if (coeffs[k] < 0) out += "-";
    const int mag = std::abs(coeffs[k]);
    if (k == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag);
      out += "z";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

bool same_size1_counts(const Keyword& a, const Keyword& b) {
  if (a.length() != b.length())
    throw Error(errc::length_mismatch,
                "keywords of lengths " + std::to_string(a.length()) + " and " +
                    std::to_string(b.length()) + " are not comparable");
  return fingerprint(a) == fingerprint(b);
}

std::vector<BigInt> size1_series_brute(const Keyword& a, int n_max) {
  check_n_max(n_max);
  std::vector<BigInt> c(static_cast<std::size_t>(n_max) + 1);
  const int cutoff = std::min(n_max, max_n());
  for (int n = 0; n <= cutoff; ++n) {
    const int top = n - a.m();
    std::uint64_t avoiding = 0;
    for (std::uint64_t u = 0; u < (std::uint64_t(1) << n); ++u) {
      bool hit = false;
      for (int i = 1; i <= top && !hit; ++i)
        hit = window_matches(a, static_cast<std::uint32_t>(u), i);
      avoiding += !hit;
    }
    c[n] = avoiding;
  }
  if (n_max > max_n()) {
    const auto tail = size1_series_transfer(a, n_max);
    for (int n = max_n() + 1; n <= n_max; ++n) c[n] = tail[n];
  }
  return c;
}

std::vector<BigInt> size1_series_transfer(const Keyword& a, int n_max) {
  check_n_max(n_max);
  const int m = a.m();
  std::vector<BigInt> c(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= std::min(n_max, m); ++n) c[n] = BigInt(1) << n;
  if (n_max <= m) return c;

  // State = last m letters, oldest letter at bit 0. Appending letter b
  // completes the window s | b<<m; transitions spelling the keyword or its
  // negation are forbidden.
  const std::uint32_t states = 1u << m;
  std::vector<BigInt> reach(states, BigInt(1));
  for (int n = m + 1; n <= n_max; ++n) {
    std::vector<BigInt> next(states, BigInt(0));
    for (std::uint32_t s = 0; s < states; ++s) {
      if (reach[s] == 0) continue;
      for (std::uint32_t b = 0; b <= 1; ++b) {
        const std::uint32_t window = s | (b << m);
        if (window == a.bits() || window == a.negated_bits()) continue;
        next[(s >> 1) | (b << (m - 1))] += reach[s];
      }
    }
    reach = std::move(next);
    c[n] = std::accumulate(reach.begin(), reach.end(), BigInt(0));
  }
  return c;
}

std::vector<BigInt> size1_series_gf(const Keyword& a, int n_max) {
  check_n_max(n_max);
  const int m = a.m();
  // A(z) = z^{m+1} + Q(z); denominator D(z) = (z-2) A(z) + 2z is monic of
  // degree m+2, and multiplying the series by D must clear every negative
  // power: c_n = -sum_{k<m+2} D_k c_{n-(m+2)+k}.
  std::vector<long long> a_poly(static_cast<std::size_t>(m) + 2, 0);
  a_poly[static_cast<std::size_t>(m) + 1] = 1;
  const auto polys = correlation_polynomials(a);
  for (int i = 1; i <= m; ++i) a_poly[i] += polys.q[i];

  std::vector<long long> d(static_cast<std::size_t>(m) + 3, 0);
  for (int k = 0; k <= m + 1; ++k) {
    d[k + 1] += a_poly[k];
    d[k] -= 2 * a_poly[k];
  }
  d[1] += 2;

  const auto seeds = size1_series_brute(a, std::min(n_max, m + 2));
  std::vector<BigInt> c(static_cast<std::size_t>(n_max) + 1);
  std::copy(seeds.begin(), seeds.end(), c.begin());
  for (int n = m + 3; n <= n_max; ++n) {
    BigInt acc = 0;
    for (int k = 0; k <= m + 1; ++k) acc += BigInt(d[k]) * c[n - (m + 2) + k];
    c[n] = -acc;
  }
  return c;
}

std::string series_csv(const std::vector<BigInt>& series) {
  std::string out = "n,c\n";
  for (std::size_t n = 0; n < series.size(); ++n)
    out += std::to_string(n) + ',' + series[n].str() + '\n';
  return out;
}

std::string series_json(const Keyword& a, const std::vector<BigInt>& series) {
  // Coefficients can exceed 2^53, so the array is assembled by hand to keep
  // them as exact JSON integers.
  std::string out = "{\"keyword\": \"" + a.str() + "\", \"coefficients\": [";
  for (std::size_t n = 0; n < series.size(); ++n) {
    if (n > 0) out += ", ";
    out += series[n].str();
  }
  out += "]}";
  return out;
}

}  // namespace kwclass
