#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kwclass/word.hpp"

namespace kwclass {

// Substitution graph on vertex set {0,1}^n: an edge joins u and v whenever
// a single substitution turns one into the other. Connected components are
// exactly the equivalence classes. Stored as CSR adjacency; immutable once
// built. Neighbor lists are ordered by substitution index.
class SubstitutionGraph {
 public:
  SubstitutionGraph(const Keyword& a, int n);

  const Keyword& keyword() const { return keyword_; }
  int n() const { return n_; }
  std::uint64_t vertex_count() const { return std::uint64_t(1) << n_; }
  std::uint64_t edge_count() const { return targets_.size() / 2; }
  std::span<const std::uint32_t> neighbors(std::uint32_t id) const {
    return {targets_.data() + offsets_[id], targets_.data() + offsets_[id + 1]};
  }

  // Raw arrays, exposed so tests can assert that a keyword and its negation
  // build identical graphs.
  const std::vector<std::uint64_t>& offsets() const { return offsets_; }
  const std::vector<std::uint32_t>& targets() const { return targets_; }

 private:
  Keyword keyword_;
  int n_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> targets_;
};

// Breadth-first distance in the substitution graph, without materializing
// adjacency. nullopt when u and v are not equivalent.
std::optional<int> distance(const Keyword& a, const Word& u, const Word& v);

// Two-colors every component; true when no odd cycle exists (which the
// parity of substitution counts guarantees, so this is a verification op).
bool is_bipartite(const Keyword& a, int n);

// Isomorphism certificate of one component: vertex count plus the
// lexicographically minimal adjacency encoding over all vertex orderings.
// Equal bytes iff isomorphic as unlabeled graphs.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Exact certificate for an arbitrary graph on k <= kDefaultComponentCap
// vertices given as an edge list over 0..k-1. Branch-and-bound over vertex
// orderings; exponential in the worst case, fine at component scale.
CanonicalForm canonical_form(int k,
                             const std::vector<std::pair<int, int>>& edges);

using CanonicalHistogram = std::map<CanonicalForm, std::uint64_t>;

// Certificates of all components with multiplicity. Throws
// component_too_large when a component exceeds the cap.
CanonicalHistogram canonical_histogram(const Keyword& a, int n,
                                       int component_cap = kDefaultComponentCap);

// Whole-graph isomorphism, decided component-wise. Keywords linked by
// negation/reversal/seminegation are recognized first via their explicit
// vertex bijections (verified edge-by-edge, so the answer stays exact);
// everything else falls back to comparing canonical histograms.
bool isomorphic(const Keyword& a, const Keyword& b, int n,
                int component_cap = kDefaultComponentCap);

// DOT rendering of the component containing u, vertex labels = word
// strings.
std::string component_dot(const Keyword& a, const Word& u);

}  // namespace kwclass
