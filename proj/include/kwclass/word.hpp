#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kwclass/config.hpp"
#include "kwclass/errors.hpp"

namespace kwclass {

constexpr std::uint32_t mask_of(int len) {
  return len <= 0 ? 0u : (len >= 32 ? ~0u : ((1u << len) - 1u));
}

// Binary word u = (u_1, ..., u_n) with letter u_i stored at bit i-1, so a
// prefix is a mask and a subword is a shift plus a mask. The string form
// "u_1 u_2 ... u_n" reads left to right: parse("110") has letter(1) == 1
// and bits() == 0b011.
class Word {
 public:
  Word() = default;
  Word(std::uint32_t bits, int length);

  // Accepts characters '0' and '1' only; "" is the empty word.
  static Word parse(std::string_view text);

  int length() const { return len_; }
  std::uint32_t bits() const { return bits_; }
  bool empty() const { return len_ == 0; }
  int letter(int i) const;  // 1-based
  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) = default;

 private:
  std::uint32_t bits_ = 0;
  int len_ = 0;
};

Word negate(const Word& u);
Word reverse(const Word& u);
Word seminegate(const Word& u);  // flip letters at even positions 2, 4, ...
Word concat(const Word& u, const Word& w);
Word subword(const Word& u, int i, int j);  // letters i..j, 1-based inclusive

// Substitution pattern of length m+1 with m >= 1.
class Keyword {
 public:
  explicit Keyword(const Word& word);
  static Keyword parse(std::string_view text);

  const Word& word() const { return word_; }
  int length() const { return word_.length(); }
  int m() const { return word_.length() - 1; }
  std::uint32_t bits() const { return word_.bits(); }
  std::uint32_t negated_bits() const { return neg_bits_; }
  std::uint32_t mask() const { return mask_; }
  std::string str() const { return word_.str(); }

  friend bool operator==(const Keyword& a, const Keyword& b) {
    return a.word_ == b.word_;
  }

 private:
  Word word_;
  std::uint32_t neg_bits_ = 0;
  std::uint32_t mask_ = 0;
};

// Raw-bitmask fast path used by the enumeration engines. Caller guarantees
// i >= 1 and i + m <= n.
inline bool window_matches(const Keyword& a, std::uint32_t bits, int i) {
  const std::uint32_t window = (bits >> (i - 1)) & a.mask();
  return window == a.bits() || window == a.negated_bits();
}

inline std::uint32_t flip_window(const Keyword& a, std::uint32_t bits, int i) {
  return bits ^ (a.mask() << (i - 1));
}

// True iff the keyword or its negation spells the window of u starting at
// letter i. False (not an error) when the window overruns the word.
bool applicable(const Keyword& a, const Word& u, int i);

// Negates the window at i when applicable, otherwise returns u unchanged.
// An involution for fixed (a, i).
Word simple_map(const Keyword& a, int i, const Word& u);

// True iff every map in the list, applied first-to-last, changes the word.
bool acts_completely(const Keyword& a, const std::vector<int>& indices,
                     const Word& u);

// Commutativity of two simple maps with index gap delta = j - i >= 1,
// decided from the keyword alone: either the lines of action are disjoint
// (delta >= m+1) or the length-(m+1-delta) prefix differs from both the
// same-length suffix and its negation.
bool commutes_by_criterion(const Keyword& a, int delta);

// Exhaustive check of phi_i . phi_j == phi_j . phi_i over all of {0,1}^n.
// Requires 1 <= i < j <= n - m.
bool commutes_brute_force(const Keyword& a, int i, int j, int n);

// Closure of {a} under negation, reversal and seminegation, in increasing
// bitmask order. Always 4 or 8 keywords.
std::vector<Keyword> keyword_orbit(const Keyword& a);

}  // namespace kwclass
