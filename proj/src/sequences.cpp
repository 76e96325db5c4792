#include "kwclass/sequences.hpp"

#include <map>
#include <utility>

namespace kwclass {

namespace {

void check_m(int m) {
  if (m < 1)
    throw Error(errc::invalid_parameter,
                "step count m must be >= 1, got " + std::to_string(m));
}

}  // namespace

std::vector<BigInt> fib_table(int m, int n_max) {
  check_m(m);
  if (n_max < 0)
    throw Error(errc::invalid_parameter,
                "sequence index must be >= 0, got " + std::to_string(n_max));
  std::vector<BigInt> f(static_cast<std::size_t>(n_max) + 1);
  f[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    if (n < m) {
      f[n] = BigInt(1) << (n - 1);
    } else {
      BigInt sum = 0;
      for (int k = n - m; k < n; ++k) sum += f[k];
      f[n] = sum;
    }
  }
  return f;
}

BigInt fib(int m, int n) { return fib_table(m, n).back(); }

std::vector<BigInt> partial_sum_table(int m, int n_max) {
  auto sums = fib_table(m, n_max);
  for (std::size_t n = 1; n < sums.size(); ++n) sums[n] += sums[n - 1];
  return sums;
}

BigInt partial_sum(int m, int n) { return partial_sum_table(m, n).back(); }

BigInt word_value(int m, const Word& u) {
  check_m(m);
  const auto f = fib_table(m, u.length());
  BigInt value = 0;
  for (int i = 1; i <= u.length(); ++i)
    if (u.bits() >> (i - 1) & 1u) value += f[i];
  return value;
}

std::string to_string(const Representation& rep, int m) {
  const int top = rep.indices.empty() ? 0 : rep.indices.back();
  const auto f = fib_table(m, top);
  std::string out;
  for (int i : rep.indices) {
    if (!out.empty()) out += ' ';
    out += '(' + std::to_string(i) + ',' + f[i].str() + ')';
  }
  return out;
}

Representation zeckendorf(const BigInt& n) {
  if (n < 0)
    throw Error(errc::invalid_parameter, "cannot represent a negative value");
  std::vector<BigInt> f{BigInt(1)};  // f[k] = F_{k+1}^{(2)}: 1, 2, 3, 5, ...
  f.push_back(2);
  while (f.back() <= n) f.push_back(f[f.size() - 1] + f[f.size() - 2]);

  Representation rep;
  BigInt rest = n;
  for (int k = static_cast<int>(f.size()) - 1; k >= 0 && rest > 0; --k) {
    if (f[static_cast<std::size_t>(k)] <= rest) {
      rest -= f[static_cast<std::size_t>(k)];
      rep.indices.push_back(k + 1);
      --k;  // greedy already skips, this makes the nonconsecutive rule explicit
    }
  }
  std::reverse(rep.indices.begin(), rep.indices.end());
  return rep;
}

BigInt count_representations(int m, const BigInt& n, int max_index) {
  check_m(m);
  if (n < 0)
    throw Error(errc::invalid_parameter, "cannot represent a negative value");
  if (max_index < 1)
    throw Error(errc::invalid_parameter,
                "max_index must be >= 1, got " + std::to_string(max_index));
  const auto f = fib_table(m, max_index);
  // ways[s] = number of subsets of the terms processed so far summing to s;
  // sums above n can never recover, so they are dropped.
  std::map<BigInt, BigInt> ways{{BigInt(0), BigInt(1)}};
  for (int i = 1; i <= max_index; ++i) {
    const BigInt& term = f[i];
    if (term > n) continue;
    std::map<BigInt, BigInt> next = ways;
    for (const auto& [sum, count] : ways) {
      const BigInt grown = sum + term;
      if (grown <= n) next[grown] += count;
    }
    ways = std::move(next);
  }
  const auto it = ways.find(n);
  return it == ways.end() ? BigInt(0) : it->second;
}

BigInt max_representations(int m, int n) {
  if (m < 2)
    throw Error(errc::invalid_parameter,
                "representation blocks need m >= 2 (every m=1 term is 1)");
  if (n < 1)
    throw Error(errc::invalid_parameter,
                "block index must be >= 1, got " + std::to_string(n));
  const auto f = fib_table(m, n + 1);
  BigInt best = 0;
  // max_index = n suffices: every term beyond F_n exceeds any value below
  // F_{n+1}.
  for (BigInt value = f[n]; value < f[n + 1]; ++value)
    best = std::max(best, count_representations(m, value, n));
  return best;
}

}  // namespace kwclass
