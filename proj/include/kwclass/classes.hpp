#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "kwclass/sequences.hpp"
#include "kwclass/word.hpp"

namespace kwclass {

// size of a class -> number of classes of that size
using SizeHistogram = std::map<std::uint64_t, std::uint64_t>;

// The quotient of {0,1}^n by the substitution relation, built as a
// union-find over word ids 0..2^n-1 and frozen afterwards. A completed
// partition is immutable and safe to share across threads.
class ClassPartition {
 public:
  // Unions u with every single-substitution image of u. workers > 1 splits
  // the scan into chunks whose edge lists are folded into one union-find;
  // the result is identical for any worker count.
  ClassPartition(const Keyword& a, int n, int workers = 1);

  ClassPartition(const ClassPartition&) = delete;
  ClassPartition& operator=(const ClassPartition&) = delete;

  const Keyword& keyword() const { return keyword_; }
  int n() const { return n_; }
  std::uint64_t word_count() const { return std::uint64_t(1) << n_; }
  std::uint64_t class_count() const { return class_count_; }

  std::uint32_t root_of(std::uint32_t id) const { return parent_[id]; }
  bool same_class(const Word& u, const Word& v) const;
  std::uint64_t class_size(const Word& u) const;

  // Minimum-bitmask member of [u]; deterministic for any build schedule.
  Word representative(const Word& u) const;

  SizeHistogram histogram() const;

 private:
  void check_member(const Word& u) const;

  Keyword keyword_;
  int n_;
  std::vector<std::uint32_t> parent_;  // fully compressed: parent_[id] = root
  std::vector<std::uint32_t> size_;    // valid at roots
  std::uint64_t class_count_ = 0;

  mutable std::once_flag rep_once_;
  mutable std::vector<std::uint32_t> rep_;  // lazy: min member per root
};

std::uint64_t count_classes(const Keyword& a, int n, int workers = 1);
SizeHistogram histogram(const Keyword& a, int n, int workers = 1);

// All members of [u] in increasing bitmask order (breadth-first closure;
// does not materialize the full partition).
std::vector<Word> class_of(const Keyword& a, const Word& u);

// Class counts versus partial sums of the m-step sequence for every
// n in [0, n_max].
struct TheoremReport {
  struct Row {
    int n;
    std::uint64_t classes;
    BigInt expected;
  };
  std::vector<Row> rows;
  bool ok = true;

  std::string str() const;
};
TheoremReport verify_theorem(const Keyword& a, int n_max, int workers = 1);

// "s,count" lines in ascending s, with a header row.
std::string histogram_csv(const SizeHistogram& hist);
// {"keyword": ..., "n": ..., "histogram": {...}, "total": ...}
std::string histogram_json(const Keyword& a, int n, const SizeHistogram& hist);

}  // namespace kwclass
