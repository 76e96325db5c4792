#include "kwclass/word.hpp"

#include <algorithm>
#include <set>

namespace kwclass {

namespace {

[[noreturn]] void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace

Word::Word(std::uint32_t bits, int length) : bits_(bits), len_(length) {
  if (length < 0 || length > max_n())
    fail(errc::capacity_exceeded,
         "word length " + std::to_string(length) + " exceeds cap " +
             std::to_string(max_n()));
  if (bits > mask_of(length))
    fail(errc::invalid_parameter, "bitmask has bits beyond the word length");
}

Word Word::parse(std::string_view text) {
  if (static_cast<int>(text.size()) > max_n())
    fail(errc::capacity_exceeded,
         "word \"" + std::string(text) + "\" longer than cap " +
             std::to_string(max_n()));
  std::uint32_t bits = 0;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    if (text[pos] == '1')
      bits |= 1u << pos;
    else if (text[pos] != '0')
      fail(errc::parse_error,
           "invalid character '" + std::string(1, text[pos]) +
               "' in word \"" + std::string(text) + "\"");
  }
  return Word(bits, static_cast<int>(text.size()));
}

int Word::letter(int i) const {
  if (i < 1 || i > len_)
    fail(errc::index_out_of_range,
         "letter index " + std::to_string(i) + " outside [1, " +
             std::to_string(len_) + "]");
  return (bits_ >> (i - 1)) & 1u;
}

std::string Word::str() const {
  std::string s(static_cast<std::size_t>(len_), '0');
  for (int i = 0; i < len_; ++i)
    if (bits_ >> i & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

Word negate(const Word& u) {
  return Word(u.bits() ^ mask_of(u.length()), u.length());
}

Word reverse(const Word& u) {
  const int n = u.length();
  std::uint32_t out = 0;
  for (int i = 0; i < n; ++i)
    if (u.bits() >> i & 1u) out |= 1u << (n - 1 - i);
  return Word(out, n);
}

Word seminegate(const Word& u) {
  const std::uint32_t even_positions = 0xaaaaaaaau & mask_of(u.length());
  return Word(u.bits() ^ even_positions, u.length());
}

Word concat(const Word& u, const Word& w) {
  const int total = u.length() + w.length();
  if (total > max_n())
    fail(errc::capacity_exceeded,
         "concatenation of lengths " + std::to_string(u.length()) + " and " +
             std::to_string(w.length()) + " exceeds cap " +
             std::to_string(max_n()));
  return Word(u.bits() | (w.bits() << u.length()), total);
}

Word subword(const Word& u, int i, int j) {
  if (i < 1 || j < i || j > u.length())
    fail(errc::index_out_of_range,
         "subword range [" + std::to_string(i) + ", " + std::to_string(j) +
             "] invalid for length " + std::to_string(u.length()));
  return Word((u.bits() >> (i - 1)) & mask_of(j - i + 1), j - i + 1);
}

Keyword::Keyword(const Word& word) : word_(word) {
  if (word.length() < 2)
    fail(errc::invalid_parameter,
         "keyword must have length >= 2 (m >= 1), got length " +
             std::to_string(word.length()));
  mask_ = mask_of(word.length());
  neg_bits_ = word.bits() ^ mask_;
}

Keyword Keyword::parse(std::string_view text) {
  return Keyword(Word::parse(text));
}

bool applicable(const Keyword& a, const Word& u, int i) {
  if (i < 1)
    fail(errc::index_out_of_range,
         "substitution index " + std::to_string(i) + " must be >= 1");
  if (i + a.m() > u.length()) return false;
  return window_matches(a, u.bits(), i);
}

Word simple_map(const Keyword& a, int i, const Word& u) {
  if (!applicable(a, u, i)) return u;
  return Word(flip_window(a, u.bits(), i), u.length());
}

bool acts_completely(const Keyword& a, const std::vector<int>& indices,
                     const Word& u) {
  Word cur = u;
  for (int i : indices) {
    const Word next = simple_map(a, i, cur);
    if (next == cur) return false;
    cur = next;
  }
  return true;
}

bool commutes_by_criterion(const Keyword& a, int delta) {
  if (delta < 1)
    fail(errc::invalid_delta,
         "index gap " + std::to_string(delta) + " must be >= 1");
  const int m = a.m();
  if (delta >= m + 1) return true;  // disjoint lines of action
  const Word prefix = subword(a.word(), 1, m + 1 - delta);
  const Word suffix = subword(a.word(), delta + 1, m + 1);
  return prefix != suffix && prefix != negate(suffix);
}

bool commutes_brute_force(const Keyword& a, int i, int j, int n) {
  if (n < 0 || n > max_n())
    fail(errc::capacity_exceeded,
         "length " + std::to_string(n) + " exceeds cap " +
             std::to_string(max_n()));
  if (!(1 <= i && i < j && j <= n - a.m()))
    fail(errc::invalid_parameter,
         "need 1 <= i < j <= n - m, got i=" + std::to_string(i) +
             " j=" + std::to_string(j) + " n=" + std::to_string(n));
  const auto apply = [&a](std::uint32_t bits, int idx) {
    return window_matches(a, bits, idx) ? flip_window(a, bits, idx) : bits;
  };
  const std::uint64_t words = std::uint64_t(1) << n;
  for (std::uint64_t u = 0; u < words; ++u) {
    const auto b = static_cast<std::uint32_t>(u);
    if (apply(apply(b, j), i) != apply(apply(b, i), j)) return false;
  }
  return true;
}

std::vector<Keyword> keyword_orbit(const Keyword& a) {
  std::set<std::uint32_t> seen{a.bits()};
  std::vector<Word> frontier{a.word()};
  while (!frontier.empty()) {
    const Word w = frontier.back();
    frontier.pop_back();
    for (const Word& next : {negate(w), reverse(w), seminegate(w)})
      if (seen.insert(next.bits()).second) frontier.push_back(next);
  }
  std::vector<Keyword> orbit;
  orbit.reserve(seen.size());
  for (std::uint32_t bits : seen) orbit.emplace_back(Word(bits, a.length()));
  return orbit;
}

}  // namespace kwclass
