#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "kwclass/classes.hpp"
#include "kwclass/graphs.hpp"

using namespace kwclass;

namespace {

Word w(const std::string& s) { return Word::parse(s); }
Keyword kw(const std::string& s) { return Keyword::parse(s); }

using EdgeList = std::vector<std::pair<int, int>>;

// Brute-force isomorphism oracle over all k! vertex bijections.
bool isomorphic_by_permutation(int k, const EdgeList& lhs, const EdgeList& rhs) {
  if (lhs.size() != rhs.size()) return false;
  const auto edge_set = [k](const EdgeList& edges,
                            const std::vector<int>& relabel) {
    std::set<std::pair<int, int>> out;
    for (auto [x, y] : edges) {
      int px = relabel.empty() ? x : relabel[x];
      int py = relabel.empty() ? y : relabel[y];
      if (px > py) std::swap(px, py);
      out.emplace(px, py);
    }
    return out;
  };
  const auto target = edge_set(rhs, {});
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (edge_set(lhs, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

EdgeList random_graph(std::mt19937& rng, int k, double density) {
  EdgeList edges;
  for (int x = 0; x < k; ++x)
    for (int y = x + 1; y < k; ++y)
      if (std::uniform_real_distribution<double>(0, 1)(rng) < density)
        edges.emplace_back(x, y);
  return edges;
}

EdgeList relabel(const EdgeList& edges, const std::vector<int>& perm) {
  EdgeList out;
  for (auto [x, y] : edges) out.emplace_back(perm[x], perm[y]);
  return out;
}

}  // namespace

TEST_CASE("adjacency of the smallest interesting graphs") {
  const SubstitutionGraph g(kw("110"), 3);
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 1);
  CHECK(g.neighbors(w("110").bits()).size() == 1);
  CHECK(g.neighbors(w("110").bits())[0] == w("001").bits());
  CHECK(g.neighbors(w("000").bits()).empty());
}

TEST_CASE("the four-element class is a star") {
  const SubstitutionGraph g(kw("101"), 5);
  CHECK(g.neighbors(w("10101").bits()).size() == 3);
  CHECK(g.neighbors(w("10010").bits()).size() == 1);
  CHECK(g.neighbors(w("01001").bits()).size() == 1);
  CHECK(g.neighbors(w("11011").bits()).size() == 1);
  // Edges come in both directions.
  std::uint64_t half_edges = 0;
  for (std::uint64_t id = 0; id < g.vertex_count(); ++id) {
    for (std::uint32_t target : g.neighbors(static_cast<std::uint32_t>(id))) {
      const auto back = g.neighbors(target);
      CHECK(std::count(back.begin(), back.end(), id) == 1);
      ++half_edges;
    }
  }
  CHECK(half_edges == 2 * g.edge_count());
}

TEST_CASE("one size-8 component at length six") {
  const auto hist = histogram(kw("101"), 6);
  CHECK(hist.at(8) == 1);
}

TEST_CASE("negated keyword builds the identical graph") {
  for (const char* keyword : {"10", "110", "0100", "10001"}) {
    for (int n = 1; n <= 9; ++n) {
      const SubstitutionGraph g(kw(keyword), n);
      const SubstitutionGraph gn(Keyword{negate(Word::parse(keyword))}, n);
      CHECK(g.offsets() == gn.offsets());
      CHECK(g.targets() == gn.targets());
    }
  }
}

TEST_CASE("graph distances") {
  CHECK(distance(kw("101"), w("10101"), w("11011")) == 1);
  CHECK(distance(kw("101"), w("10010"), w("11011")) == 2);
  CHECK(distance(kw("101"), w("10010"), w("10010")) == 0);
  CHECK_FALSE(distance(kw("110"), w("000"), w("111")).has_value());
  CHECK_THROWS_AS(distance(kw("110"), w("000"), w("0000")), Error);
}

TEST_CASE("distance 1 exactly at edges, symmetric within components") {
  const Keyword a = kw("110");
  const SubstitutionGraph g(a, 7);
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 300; ++trial) {
    const Word u(static_cast<std::uint32_t>(rng()) & mask_of(7), 7);
    const Word v(static_cast<std::uint32_t>(rng()) & mask_of(7), 7);
    const auto d_uv = distance(a, u, v);
    CHECK(d_uv == distance(a, v, u));
    const auto nbrs = g.neighbors(u.bits());
    const bool edge = std::count(nbrs.begin(), nbrs.end(), v.bits()) == 1;
    CHECK(edge == (d_uv == 1));
  }
}

TEST_CASE("reversing everything preserves distances") {
  for (const char* keyword : {"110", "101", "0100"}) {
    const Keyword a = kw(keyword);
    const Keyword reversed{reverse(a.word())};
    const int n = 8;
    const ClassPartition partition(a, n);
    for (std::uint64_t id = 0; id < partition.word_count(); ++id) {
      const Word u(static_cast<std::uint32_t>(id), n);
      if (partition.class_size(u) > 8) continue;
      for (const Word& v : class_of(a, u))
        CHECK(distance(a, u, v) == distance(reversed, reverse(u), reverse(v)));
    }
  }
}

TEST_CASE("bipartite everywhere") {
  CHECK(is_bipartite(kw("101"), 6));
  CHECK(is_bipartite(kw("0011"), 10));
  CHECK(is_bipartite(kw("110"), 2));  // edgeless
}

TEST_CASE("canonical form separates small shapes") {
  // Path, star and triangle-plus-isolated on four vertices.
  const auto path = canonical_form(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto star = canonical_form(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto triangle = canonical_form(4, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(path != star);
  CHECK(path != triangle);
  CHECK(star != triangle);
  // Relabeled path has the same certificate.
  CHECK(path == canonical_form(4, {{2, 0}, {0, 3}, {3, 1}}));
  CHECK_THROWS_AS(canonical_form(kDefaultComponentCap + 1, {}), Error);
}

TEST_CASE("canonical form equality matches permutation isomorphism") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 150; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 5);  // up to 6 vertices
    const auto lhs = random_graph(rng, k, 0.4);
    const auto rhs = random_graph(rng, k, 0.4);
    CHECK((canonical_form(k, lhs) == canonical_form(k, rhs)) ==
          isomorphic_by_permutation(k, lhs, rhs));
  }
  // Relabeling never changes the certificate.
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 6);  // up to 7 vertices
    const auto edges = random_graph(rng, k, 0.5);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(k, edges) == canonical_form(k, relabel(edges, perm)));
  }
}

TEST_CASE("certificate histograms") {
  CHECK(canonical_histogram(kw("110"), 3) == canonical_histogram(kw("011"), 3));
  CHECK(canonical_histogram(kw("110"), 4) != canonical_histogram(kw("101"), 4));
  CHECK(canonical_histogram(kw("0100"), 8) ==
        canonical_histogram(kw("1011"), 8));
  // Certificate count equals the class count.
  const auto hist = canonical_histogram(kw("101"), 6);
  std::uint64_t total = 0;
  for (const auto& [form, count] : hist) total += count;
  CHECK(total == count_classes(kw("101"), 6));
}

TEST_CASE("oversized components are reported, not canonicalized") {
  CHECK_THROWS_AS(canonical_histogram(kw("10"), 10), Error);
  CHECK_THROWS_AS(isomorphic(kw("110"), kw("101"), 5, 2), Error);
}

TEST_CASE("isomorphism within the keyword orbit") {
  CHECK(isomorphic(kw("101"), kw("111"), 8));  // seminegation of 101
  CHECK(isomorphic(kw("110"), kw("011"), 9));  // reversal of 110
  CHECK(isomorphic(kw("110"), kw("001"), 9));  // negation: identical graph
  // Orbit transforms reach components far beyond the canonical cap.
  CHECK(isomorphic(kw("10"), kw("00"), 12));
  CHECK_FALSE(isomorphic(kw("110"), kw("101"), 4));
  CHECK_THROWS_AS(isomorphic(kw("110"), kw("1010"), 4), Error);
}

TEST_CASE("orbit fast path agrees with the canonical certificates") {
  for (const char* keyword : {"110", "101", "0100", "0011"}) {
    const Keyword a = kw(keyword);
    for (int n = 1; n <= 7; ++n) {
      for (const Keyword& b : keyword_orbit(a)) {
        const bool claimed = isomorphic(a, b, n);
        CHECK(claimed);
        CHECK(canonical_histogram(a, n) == canonical_histogram(b, n));
      }
    }
  }
}

TEST_CASE("the cross-orbit pair stays isomorphic at moderate lengths") {
  const Keyword a = kw("10000");
  const Keyword b = kw("01000");
  const auto orbit = keyword_orbit(a);
  const bool in_orbit =
      std::any_of(orbit.begin(), orbit.end(),
                  [&](const Keyword& member) { return member == b; });
  CHECK_FALSE(in_orbit);  // forces the certificate route
  for (int n = 6; n <= 12; n += 3) CHECK(isomorphic(a, b, n));
}

TEST_CASE("dot export of one component") {
  const std::string dot = component_dot(kw("110"), w("110"));
  CHECK(dot.find("graph component {") == 0);
  CHECK(dot.find("\"110\" -- \"001\";") != std::string::npos);
  CHECK(dot.find("\"110\";") != std::string::npos);
  CHECK(dot.back() == '\n');
}

TEST_CASE("graph capacity checks") {
  CHECK_THROWS_AS(SubstitutionGraph(kw("110"), max_n_graph() + 1), Error);
  CHECK_THROWS_AS(is_bipartite(kw("110"), max_n_graph() + 1), Error);
}
