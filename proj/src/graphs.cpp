#include "kwclass/graphs.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "kwclass/classes.hpp"

namespace kwclass {

namespace {

void check_graph_n(int n) {
  if (n < 0 || n > max_n_graph())
    throw Error(errc::capacity_exceeded,
                "graph length " + std::to_string(n) + " exceeds cap " +
                    std::to_string(max_n_graph()));
}

}  // namespace

SubstitutionGraph::SubstitutionGraph(const Keyword& a, int n)
    : keyword_(a), n_(n) {
  check_graph_n(n);
  const std::uint64_t words = std::uint64_t(1) << n;
  const int top = n - a.m();
  offsets_.assign(words + 1, 0);
  for (std::uint64_t u = 0; u < words; ++u) {
    const auto bits = static_cast<std::uint32_t>(u);
    std::uint64_t degree = 0;
    for (int i = 1; i <= top; ++i) degree += window_matches(a, bits, i);
    offsets_[u + 1] = degree;
  }
  for (std::uint64_t u = 0; u < words; ++u) offsets_[u + 1] += offsets_[u];
  targets_.resize(offsets_[words]);
  for (std::uint64_t u = 0; u < words; ++u) {
    const auto bits = static_cast<std::uint32_t>(u);
    std::uint64_t cursor = offsets_[u];
    for (int i = 1; i <= top; ++i)
      if (window_matches(a, bits, i))
        targets_[cursor++] = flip_window(a, bits, i);
  }
}

std::optional<int> distance(const Keyword& a, const Word& u, const Word& v) {
  if (u.length() != v.length())
    throw Error(errc::length_mismatch,
                "distance between words of lengths " +
                    std::to_string(u.length()) + " and " +
                    std::to_string(v.length()));
  const int n = u.length();
  check_graph_n(n);
  if (u == v) return 0;
  const int top = n - a.m();
  std::vector<std::uint64_t> visited((std::uint64_t(1) << n) / 64 + 1, 0);
  const auto mark = [&visited](std::uint32_t id) {
    visited[id >> 6] |= std::uint64_t(1) << (id & 63);
  };
  const auto seen = [&visited](std::uint32_t id) {
    return (visited[id >> 6] >> (id & 63)) & 1;
  };
  mark(u.bits());
  std::vector<std::uint32_t> frontier{u.bits()}, next;
  for (int depth = 1; !frontier.empty(); ++depth) {
    next.clear();
    for (std::uint32_t bits : frontier) {
      for (int i = 1; i <= top; ++i) {
        if (!window_matches(a, bits, i)) continue;
        const std::uint32_t image = flip_window(a, bits, i);
        if (image == v.bits()) return depth;
        if (!seen(image)) {
          mark(image);
          next.push_back(image);
        }
      }
    }
    frontier.swap(next);
  }
  return std::nullopt;
}

bool is_bipartite(const Keyword& a, int n) {
  check_graph_n(n);
  const std::uint64_t words = std::uint64_t(1) << n;
  const int top = n - a.m();
  std::vector<std::int8_t> color(words, -1);
  std::deque<std::uint32_t> queue;
  for (std::uint64_t start = 0; start < words; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    queue.push_back(static_cast<std::uint32_t>(start));
    while (!queue.empty()) {
      const std::uint32_t bits = queue.front();
      queue.pop_front();
      for (int i = 1; i <= top; ++i) {
        if (!window_matches(a, bits, i)) continue;
        const std::uint32_t image = flip_window(a, bits, i);
        if (color[image] == -1) {
          color[image] = static_cast<std::int8_t>(1 - color[bits]);
          queue.push_back(image);
        } else if (color[image] == color[bits]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Lexicographically minimal "growth" encoding: placing vertex t appends the
// t bits adjacency(new, placed_0), ..., adjacency(new, placed_{t-1}). The
// encoding prefix depends only on the placed vertices, which is what makes
// branch-and-bound sound. Rows are adjacency bitsets, so k <= 64. The
// search is exhaustive except for prunes against the incumbent best, so the
// result is the exact minimum.
class Canonicalizer {
 public:
  explicit Canonicalizer(const std::vector<std::uint64_t>& rows)
      : rows_(rows), k_(static_cast<int>(rows.size())), used_(rows.size(), false) {
    placed_.reserve(rows.size());
    cur_.reserve(rows.size() * rows.size() / 2);
  }

  std::vector<std::uint8_t> run() {
    descend(0);
    return best_;
  }

 private:
  void descend(int t) {
    if (t == k_) {
      if (best_.empty() || cur_ < best_) best_ = cur_;
      return;
    }
    struct Candidate {
      std::vector<std::uint8_t> segment;
      int vertex;
    };
    std::vector<Candidate> candidates;
    for (int v = 0; v < k_; ++v) {
      if (used_[v]) continue;
      Candidate c{{}, v};
      c.segment.reserve(static_cast<std::size_t>(t));
      for (int x = 0; x < t; ++x)
        c.segment.push_back(
            static_cast<std::uint8_t>(rows_[v] >> placed_[x] & 1));
      candidates.push_back(std::move(c));
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& lhs, const Candidate& rhs) {
                return std::tie(lhs.segment, lhs.vertex) <
                       std::tie(rhs.segment, rhs.vertex);
              });
    const std::size_t offset = cur_.size();
    for (const auto& c : candidates) {
      // best_ can change under us, so the prefix relation is recomputed per
      // candidate. Above the incumbent: discard. Equal prefix: the sorted
      // segments allow a cut as soon as one exceeds the incumbent segment.
      if (!best_.empty()) {
        const auto split =
            std::mismatch(cur_.begin(), cur_.end(), best_.begin());
        if (split.first != cur_.end()) {
          if (*split.first > *split.second) return;
        } else if (compare_to_best(c.segment, offset) > 0) {
          break;
        }
      }
      cur_.insert(cur_.end(), c.segment.begin(), c.segment.end());
      used_[c.vertex] = true;
      placed_.push_back(c.vertex);
      descend(t + 1);
      placed_.pop_back();
      used_[c.vertex] = false;
      cur_.resize(offset);
    }
  }

  int compare_to_best(const std::vector<std::uint8_t>& segment,
                      std::size_t offset) const {
    for (std::size_t x = 0; x < segment.size(); ++x) {
      if (segment[x] != best_[offset + x])
        return segment[x] < best_[offset + x] ? -1 : 1;
    }
    return 0;
  }

  const std::vector<std::uint64_t>& rows_;
  int k_;
  std::vector<bool> used_;
  std::vector<int> placed_;
  std::vector<std::uint8_t> cur_;
  std::vector<std::uint8_t> best_;
};

CanonicalForm pack_certificate(int k, const std::vector<std::uint8_t>& bits) {
  CanonicalForm form;
  form.bytes.push_back(static_cast<std::uint8_t>(k));
  std::uint8_t acc = 0;
  int filled = 0;
  for (std::uint8_t b : bits) {
    acc = static_cast<std::uint8_t>(acc << 1 | b);
    if (++filled == 8) {
      form.bytes.push_back(acc);
      acc = 0;
      filled = 0;
    }
  }
  if (filled > 0)
    form.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
  return form;
}

CanonicalForm canonical_form_rows(const std::vector<std::uint64_t>& rows) {
  const int k = static_cast<int>(rows.size());
  if (k <= 1) return pack_certificate(k, {});
  Canonicalizer search(rows);
  return pack_certificate(k, search.run());
}

}  // namespace

std::string CanonicalForm::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out += digits[b >> 4];
    out += digits[b & 15];
  }
  return out;
}

CanonicalForm canonical_form(int k,
                             const std::vector<std::pair<int, int>>& edges) {
  if (k < 0 || k > kDefaultComponentCap)
    throw Error(errc::component_too_large,
                "component of " + std::to_string(k) +
                    " vertices exceeds canonical-labeling cap " +
                    std::to_string(kDefaultComponentCap));
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(k), 0);
  for (const auto& [x, y] : edges) {
    if (x < 0 || y < 0 || x >= k || y >= k || x == y)
      throw Error(errc::invalid_parameter, "bad edge in component");
    rows[x] |= std::uint64_t(1) << y;
    rows[y] |= std::uint64_t(1) << x;
  }
  return canonical_form_rows(rows);
}

CanonicalHistogram canonical_histogram(const Keyword& a, int n,
                                       int component_cap) {
  check_graph_n(n);
  if (component_cap <= 0 || component_cap > kDefaultComponentCap)
    component_cap = kDefaultComponentCap;
  const ClassPartition partition(a, n);
  const std::uint64_t words = partition.word_count();
  const int top = n - a.m();

  // Bucket members by root; ascending scan keeps each bucket sorted.
  std::vector<std::int32_t> slot(words, -1);
  std::vector<std::vector<std::uint32_t>> components;
  for (std::uint64_t id = 0; id < words; ++id) {
    const std::uint32_t root = partition.root_of(static_cast<std::uint32_t>(id));
    if (slot[root] == -1) {
      slot[root] = static_cast<std::int32_t>(components.size());
      components.emplace_back();
    }
    components[static_cast<std::size_t>(slot[root])].push_back(
        static_cast<std::uint32_t>(id));
  }

  CanonicalHistogram hist;
  std::map<std::vector<std::uint64_t>, CanonicalForm> cache;
  for (const auto& members : components) {
    const int k = static_cast<int>(members.size());
    if (k > component_cap)
      throw Error(errc::component_too_large,
                  "component of " + std::to_string(k) +
                      " vertices exceeds cap " + std::to_string(component_cap));
    std::vector<std::uint64_t> rows(members.size(), 0);
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (int i = 1; i <= top; ++i) {
        if (!window_matches(a, members[x], i)) continue;
        const std::uint32_t image = flip_window(a, members[x], i);
        const auto it =
            std::lower_bound(members.begin(), members.end(), image);
        rows[x] |= std::uint64_t(1)
                   << static_cast<std::size_t>(it - members.begin());
      }
    }
    auto [it, inserted] = cache.try_emplace(rows);
    if (inserted) it->second = canonical_form_rows(rows);
    ++hist[it->second];
  }
  return hist;
}

namespace {

enum class OrbitOp : std::uint8_t { negation, reversal, seminegation };

Word apply_op(OrbitOp op, const Word& w) {
  switch (op) {
    case OrbitOp::negation:
      return negate(w);
    case OrbitOp::reversal:
      return reverse(w);
    case OrbitOp::seminegation:
      return seminegate(w);
  }
  return w;
}

// Shortest op sequence turning keyword a into b, if one exists.
std::optional<std::vector<OrbitOp>> orbit_path(const Keyword& a,
                                               const Keyword& b) {
  std::map<std::uint32_t, std::vector<OrbitOp>> paths{{a.bits(), {}}};
  std::deque<Word> queue{a.word()};
  while (!queue.empty()) {
    const Word w = queue.front();
    queue.pop_front();
    for (OrbitOp op : {OrbitOp::negation, OrbitOp::reversal,
                       OrbitOp::seminegation}) {
      const Word next = apply_op(op, w);
      if (paths.contains(next.bits())) continue;
      auto path = paths[w.bits()];
      path.push_back(op);
      paths[next.bits()] = std::move(path);
      queue.push_back(next);
    }
  }
  const auto it = paths.find(b.bits());
  if (it == paths.end()) return std::nullopt;
  return it->second;
}

// The vertex bijection induced by an op sequence: negation of the keyword
// leaves vertices fixed, reversal reverses them, seminegation seminegates.
std::uint32_t apply_vertex_map(const std::vector<OrbitOp>& ops,
                               std::uint32_t bits, int n) {
  Word w(bits, n);
  for (OrbitOp op : ops)
    if (op != OrbitOp::negation) w = apply_op(op, w);
  return w.bits();
}

bool has_edge(const Keyword& b, std::uint32_t x, std::uint32_t y, int n) {
  const std::uint32_t diff = x ^ y;
  if (diff == 0) return false;
  const int i = std::countr_zero(diff) + 1;
  if (i + b.m() > n) return false;
  if (diff != b.mask() << (i - 1)) return false;
  return window_matches(b, x, i);
}

std::uint64_t count_edges(const Keyword& a, int n) {
  const std::uint64_t words = std::uint64_t(1) << n;
  const int top = n - a.m();
  std::uint64_t edges = 0;
  for (std::uint64_t u = 0; u < words; ++u)
    for (int i = 1; i <= top; ++i)
      edges += window_matches(a, static_cast<std::uint32_t>(u), i);
  return edges / 2;
}

// Exhaustively checks that the bijection carries every a-edge to a b-edge;
// with equal edge counts that is a full graph isomorphism.
bool verify_orbit_isomorphism(const Keyword& a, const Keyword& b, int n,
                              const std::vector<OrbitOp>& ops) {
  if (count_edges(a, n) != count_edges(b, n)) return false;
  const std::uint64_t words = std::uint64_t(1) << n;
  const int top = n - a.m();
  for (std::uint64_t u = 0; u < words; ++u) {
    const auto bits = static_cast<std::uint32_t>(u);
    for (int i = 1; i <= top; ++i) {
      if (!window_matches(a, bits, i)) continue;
      const std::uint32_t image = flip_window(a, bits, i);
      if (image < bits) continue;  // one direction per edge
      if (!has_edge(b, apply_vertex_map(ops, bits, n),
                    apply_vertex_map(ops, image, n), n))
        return false;
    }
  }
  return true;
}

}  // namespace

bool isomorphic(const Keyword& a, const Keyword& b, int n,
                int component_cap) {
  if (a.length() != b.length())
    throw Error(errc::length_mismatch,
                "keywords of lengths " + std::to_string(a.length()) + " and " +
                    std::to_string(b.length()) + " are not comparable");
  check_graph_n(n);
  if (b.bits() == a.bits() || b.bits() == a.negated_bits())
    return true;  // the same graph
  if (const auto ops = orbit_path(a, b))
    if (verify_orbit_isomorphism(a, b, n, *ops)) return true;
  return canonical_histogram(a, n, component_cap) ==
         canonical_histogram(b, n, component_cap);
}

std::string component_dot(const Keyword& a, const Word& u) {
  const auto members = class_of(a, u);
  const int n = u.length();
  const int top = n - a.m();
  std::string out = "graph component {\n";
  out += "  // keyword " + a.str() + ", n = " + std::to_string(n) + "\n";
  for (const Word& w : members) out += "  \"" + w.str() + "\";\n";
  for (const Word& w : members) {
    for (int i = 1; i <= top; ++i) {
      if (!window_matches(a, w.bits(), i)) continue;
      const std::uint32_t image = flip_window(a, w.bits(), i);
      if (image > w.bits())
        out += "  \"" + w.str() + "\" -- \"" + Word(image, n).str() + "\";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace kwclass
