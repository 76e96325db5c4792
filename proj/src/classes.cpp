#include "kwclass/classes.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <deque>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "json.hpp"

namespace kwclass {

namespace {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

struct UnionFind {
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> size;

  explicit UnionFind(std::uint64_t count)
      : parent(count), size(count, 1) {
    std::iota(parent.begin(), parent.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];  // path halving
      x = parent[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

// Collects the substitution edges for word ids in [lo, hi).
std::vector<Edge> collect_edges(const Keyword& a, std::uint64_t lo,
                                std::uint64_t hi, int top) {
  std::vector<Edge> edges;
  for (std::uint64_t u = lo; u < hi; ++u) {
    const auto bits = static_cast<std::uint32_t>(u);
    for (int i = 1; i <= top; ++i)
      if (window_matches(a, bits, i))
        edges.emplace_back(bits, flip_window(a, bits, i));
  }
  return edges;
}

}  // namespace

ClassPartition::ClassPartition(const Keyword& a, int n, int workers)
    : keyword_(a), n_(n) {
  if (n < 0 || n > max_n())
    throw Error(errc::capacity_exceeded,
                "partition length " + std::to_string(n) + " exceeds cap " +
                    std::to_string(max_n()));
  const std::uint64_t words = std::uint64_t(1) << n;
  UnionFind uf(words);
  const int top = n - a.m();

  if (top >= 1 && workers <= 1) {
    for (std::uint64_t u = 0; u < words; ++u) {
      const auto bits = static_cast<std::uint32_t>(u);
      for (int i = 1; i <= top; ++i)
        if (window_matches(a, bits, i))
          uf.unite(bits, flip_window(a, bits, i));
    }
  } else if (top >= 1) {
    // Chunked producers, single consumer. The union-find result does not
    // depend on the order edges arrive.
    const std::uint64_t chunk_words =
        std::uint64_t(1) << std::min(14, std::max(4, n - 3));
    const std::uint64_t num_chunks = (words + chunk_words - 1) / chunk_words;
    const std::size_t queue_cap = static_cast<std::size_t>(workers) * 2;

    std::atomic<std::uint64_t> next_chunk{0};
    std::mutex mu;
    std::condition_variable can_produce, can_consume;
    std::deque<std::vector<Edge>> queue;

    auto producer = [&] {
      for (;;) {
        const std::uint64_t c = next_chunk.fetch_add(1);
        if (c >= num_chunks) break;
        const std::uint64_t lo = c * chunk_words;
        auto edges =
            collect_edges(keyword_, lo, std::min(words, lo + chunk_words), top);
        std::unique_lock lock(mu);
        can_produce.wait(lock, [&] { return queue.size() < queue_cap; });
        queue.push_back(std::move(edges));
        can_consume.notify_one();
      }
    };

    std::vector<std::thread> threads;
    const int thread_count = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(workers),
                                num_chunks));
    threads.reserve(static_cast<std::size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) threads.emplace_back(producer);

    for (std::uint64_t consumed = 0; consumed < num_chunks; ++consumed) {
      std::vector<Edge> edges;
      {
        std::unique_lock lock(mu);
        can_consume.wait(lock, [&] { return !queue.empty(); });
        edges = std::move(queue.front());
        queue.pop_front();
        can_produce.notify_all();
      }
      for (const auto& [u, v] : edges) uf.unite(u, v);
    }
    for (auto& t : threads) t.join();
  }

  class_count_ = 0;
  for (std::uint64_t id = 0; id < words; ++id)
    if (uf.parent[id] == id) ++class_count_;
  // Freeze with full path compression so root_of is a plain lookup.
  for (std::uint64_t id = 0; id < words; ++id) {
    std::uint32_t root = static_cast<std::uint32_t>(id);
    while (uf.parent[root] != root) root = uf.parent[root];
    std::uint32_t cur = static_cast<std::uint32_t>(id);
    while (uf.parent[cur] != root) {
      const std::uint32_t next = uf.parent[cur];
      uf.parent[cur] = root;
      cur = next;
    }
  }
  parent_ = std::move(uf.parent);
  size_ = std::move(uf.size);
}

void ClassPartition::check_member(const Word& u) const {
  if (u.length() != n_)
    throw Error(errc::length_mismatch,
                "word of length " + std::to_string(u.length()) +
                    " queried against a partition of {0,1}^" +
                    std::to_string(n_));
}

bool ClassPartition::same_class(const Word& u, const Word& v) const {
  check_member(u);
  check_member(v);
  return parent_[u.bits()] == parent_[v.bits()];
}

std::uint64_t ClassPartition::class_size(const Word& u) const {
  check_member(u);
  return size_[parent_[u.bits()]];
}

Word ClassPartition::representative(const Word& u) const {
  check_member(u);
  std::call_once(rep_once_, [this] {
    rep_.assign(parent_.size(), UINT32_MAX);
    for (std::uint64_t id = 0; id < parent_.size(); ++id) {
      const std::uint32_t root = parent_[id];
      if (rep_[root] == UINT32_MAX) rep_[root] = static_cast<std::uint32_t>(id);
    }
  });
  return Word(rep_[parent_[u.bits()]], n_);
}

SizeHistogram ClassPartition::histogram() const {
  SizeHistogram hist;
  for (std::uint64_t id = 0; id < parent_.size(); ++id)
    if (parent_[id] == id) ++hist[size_[id]];
  return hist;
}

std::uint64_t count_classes(const Keyword& a, int n, int workers) {
  return ClassPartition(a, n, workers).class_count();
}

SizeHistogram histogram(const Keyword& a, int n, int workers) {
  return ClassPartition(a, n, workers).histogram();
}

std::vector<Word> class_of(const Keyword& a, const Word& u) {
  const int n = u.length();
  const int top = n - a.m();
  std::unordered_set<std::uint32_t> seen{u.bits()};
  std::vector<std::uint32_t> frontier{u.bits()};
  while (!frontier.empty()) {
    const std::uint32_t bits = frontier.back();
    frontier.pop_back();
    for (int i = 1; i <= top; ++i) {
      if (!window_matches(a, bits, i)) continue;
      const std::uint32_t next = flip_window(a, bits, i);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  std::vector<std::uint32_t> ids(seen.begin(), seen.end());
  std::sort(ids.begin(), ids.end());
  std::vector<Word> members;
  members.reserve(ids.size());
  for (std::uint32_t id : ids) members.emplace_back(id, n);
  return members;
}

TheoremReport verify_theorem(const Keyword& a, int n_max, int workers) {
  if (n_max < 0 || n_max > max_n())
    throw Error(errc::capacity_exceeded,
                "n_max " + std::to_string(n_max) + " exceeds cap " +
                    std::to_string(max_n()));
  const auto expected = partial_sum_table(a.m(), n_max);
  TheoremReport report;
  for (int n = 0; n <= n_max; ++n) {
    const std::uint64_t classes = count_classes(a, n, workers);
    report.rows.push_back({n, classes, expected[n]});
    if (BigInt(classes) != expected[n]) report.ok = false;
  }
  return report;
}

std::string TheoremReport::str() const {
  std::ostringstream out;
  for (const auto& row : rows) {
    out << "n=" << row.n << " classes=" << row.classes
        << " expected=" << row.expected.str();
    if (BigInt(row.classes) != row.expected) out << " MISMATCH";
    out << '\n';
  }
  return out.str();
}

std::string histogram_csv(const SizeHistogram& hist) {
  std::string out = "s,count\n";
  for (const auto& [size, count] : hist)
    out += std::to_string(size) + ',' + std::to_string(count) + '\n';
  return out;
}

std::string histogram_json(const Keyword& a, int n,
                           const SizeHistogram& hist) {
  nlohmann::ordered_json j;
  j["keyword"] = a.str();
  j["n"] = n;
  auto entries = nlohmann::ordered_json::object();
  std::uint64_t total = 0;
  for (const auto& [size, count] : hist) {
    entries[std::to_string(size)] = count;
    total += count;
  }
  j["histogram"] = std::move(entries);
  j["total"] = total;
  return j.dump();
}

}  // namespace kwclass
