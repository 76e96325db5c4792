#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "kwclass/word.hpp"

namespace kwclass {

using BigInt = boost::multiprecision::cpp_int;

// F_0 = 1, F_n = 2^{n-1} for 1 <= n <= m-1, then each term sums the
// previous m terms. m = 2 is the Fibonacci sequence with index shifted so
// that F_1 = 1, F_2 = 2, F_3 = 3, F_4 = 5, ...
std::vector<BigInt> fib_table(int m, int n_max);
BigInt fib(int m, int n);

// S_n = F_0 + F_1 + ... + F_n. Equivalently S_n = 2^n for n <= m and
// S_n = 2 S_{n-1} - S_{n-m-1} afterwards.
std::vector<BigInt> partial_sum_table(int m, int n_max);
BigInt partial_sum(int m, int n);

// N_u = sum over letters of u_i * F_i.
BigInt word_value(int m, const Word& u);

// A set of distinct indices i >= 1 selecting terms F_i.
struct Representation {
  std::vector<int> indices;  // strictly increasing

  friend bool operator==(const Representation&, const Representation&) =
      default;
};

// "(index,value) (index,value) ..." in increasing index order; "" for the
// empty representation.
std::string to_string(const Representation& rep, int m = 2);

// The unique representation of n >= 0 as a sum of terms F_i (m = 2, i >= 1)
// with no two consecutive indices, by the greedy construction.
Representation zeckendorf(const BigInt& n);

// Number of subsets of {F_1, ..., F_max_index} summing to n, by
// index-bounded dynamic programming. When F_{max_index+1} > n this equals
// the total representation count of n.
BigInt count_representations(int m, const BigInt& n, int max_index);

// max of count_representations over n in [F_n, F_{n+1}), requires m >= 2
// (for m = 1 every term is 1 and the block is empty).
BigInt max_representations(int m, int n);

}  // namespace kwclass
