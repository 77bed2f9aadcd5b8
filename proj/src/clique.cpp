#include "tridist/clique.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "tridist/errors.hpp"

namespace tridist {

// ---------------------------------------------------------------------------
// Graph construction

CompatGraph::CompatGraph(std::vector<LatticePoint> vertices, std::vector<Bitset> adjacency, DistanceMenu menu)
    : vertices_(std::move(vertices)), adjacency_(std::move(adjacency)), menu_(std::move(menu)) {}

CompatGraph CompatGraph::from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  std::vector<LatticePoint> vertices;
  vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) vertices.push_back({static_cast<Coord>(i), 0});
  std::vector<Bitset> adjacency(n, Bitset(n));
  for (auto [i, j] : edges) {
    if (i == j) continue;
    adjacency[i].set(j);
    adjacency[j].set(i);
  }
  return CompatGraph(std::move(vertices), std::move(adjacency), DistanceMenu{1});
}

std::optional<std::size_t> CompatGraph::index_of(LatticePoint p) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
  if (it != vertices_.end() && *it == p) return static_cast<std::size_t>(it - vertices_.begin());
  // Vertices are normally sorted; fall back to a scan for hand-built graphs.
  it = std::find(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

CompatGraph CompatGraph::induced(std::span<const std::size_t> keep) const {
  std::vector<LatticePoint> vertices;
  vertices.reserve(keep.size());
  std::vector<Bitset> adjacency(keep.size(), Bitset(keep.size()));
  for (std::size_t x = 0; x < keep.size(); ++x) {
    vertices.push_back(vertices_[keep[x]]);
    for (std::size_t y = x + 1; y < keep.size(); ++y) {
      if (adjacency_[keep[x]].test(keep[y])) {
        adjacency[x].set(y);
        adjacency[y].set(x);
      }
    }
  }
  return CompatGraph(std::move(vertices), std::move(adjacency), menu_);
}

std::vector<LatticePoint> candidate_vertices(const DistanceMenu& menu) {
  if (!menu.contains(1)) throw InvalidMenuError("menu must contain 1 so the anchors A, B are compatible");
  // Any valid P has norm(P) <= max(menu); |a|, |b| <= sqrt(4 max / 3) on that disk.
  const auto bound = menu.max();
  auto r = static_cast<Coord>(std::sqrt(4.0 * static_cast<double>(bound) / 3.0)) + 1;
  std::vector<LatticePoint> out;
  for (Coord a = -r; a <= r; ++a) {
    for (Coord b = -r; b <= r; ++b) {
      const LatticePoint p{a, b};
      if (p == kAnchorA || p == kAnchorB) continue;
      if (norm(p) > bound) continue;
      if (menu.contains(delta_norm(p, kAnchorA)) && menu.contains(delta_norm(p, kAnchorB))) out.push_back(p);
    }
  }
  return out;  // generated in lexicographic order
}

CompatGraph build_graph(std::vector<LatticePoint> vertices, const DistanceMenu& menu) {
  const auto n = vertices.size();
  std::vector<Bitset> adjacency(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (menu.contains(delta_norm(vertices[i], vertices[j]))) {
        adjacency[i].set(j);
        adjacency[j].set(i);
      }
    }
  }
  return CompatGraph(std::move(vertices), std::move(adjacency), menu);
}

CompatGraph prune_by_degree(const CompatGraph& g, std::size_t t) {
  const auto n = g.size();
  const std::size_t min_degree = t > 0 ? t - 1 : 0;
  std::vector<std::size_t> degree(n);
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] < min_degree) {
      alive[v] = false;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const auto v = queue.back();
    queue.pop_back();
    for (auto u : g.adjacency()[v].indices()) {
      if (!alive[u]) continue;
      if (--degree[u] < min_degree) {
        alive[u] = false;
        queue.push_back(u);
      }
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v]) keep.push_back(v);
  if (keep.size() == n) return g;
  return g.induced(keep);
}

bool verify_clique(const CompatGraph& g, std::span<const LatticePoint> clique) {
  std::vector<std::size_t> idx;
  idx.reserve(clique.size());
  for (const auto& p : clique) {
    auto i = g.index_of(p);
    if (!i) {
      std::ostringstream msg;
      msg << "point " << p << " is not a vertex of the graph";
      throw MembershipError(msg.str());
    }
    idx.push_back(*i);
  }
  for (std::size_t x = 0; x < idx.size(); ++x)
    for (std::size_t y = x + 1; y < idx.size(); ++y)
      if (idx[x] == idx[y] || !g.adjacent(idx[x], idx[y])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Branch and bound

namespace {

using Word = Bitset::Word;
using Clock = std::chrono::steady_clock;

// Search over vertices renumbered by non-increasing degree. The root's
// children ("root branches") are numbered in the order a serial search visits
// them. The incumbent carries the branch that produced it and a tie is
// accepted only from an earlier branch, so parallel runs return exactly the
// clique a serial run would.
class BranchAndBound {
 public:
  BranchAndBound(const CompatGraph& g, const CliqueOptions& options)
      : options_(options), n_(g.size()), words_(Bitset::word_count(g.size())) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::vector<std::size_t> degree(n_);
    for (std::size_t v = 0; v < n_; ++v) degree[v] = g.degree(v);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      if (degree[x] != degree[y]) return degree[x] > degree[y];
      return g.vertices()[x] < g.vertices()[y];
    });
    adj_.assign(n_ * words_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && g.adjacent(order_[i], order_[j])) adj_[i * words_ + j / 64] |= Word{1} << (j % 64);
  }

  /// Returns the incumbent as original vertex indices (possibly empty).
  std::vector<std::size_t> run(std::size_t lower_bound, const std::vector<std::size_t>& seed) {
    long initial = lower_bound > 0 ? static_cast<long>(lower_bound) - 1 : 0;
    best_clique_.clear();
    if (!seed.empty() && static_cast<long>(seed.size()) >= initial) {
      initial = static_cast<long>(seed.size());
      std::vector<std::size_t> rank(n_);
      for (std::size_t i = 0; i < n_; ++i) rank[order_[i]] = i;
      for (auto v : seed) best_clique_.push_back(static_cast<int>(rank[v]));
    }
    incumbent_.store(pack(initial, -1));
    if (options_.budget) deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(*options_.budget);

    if (n_ > 0) search_root();

    std::vector<std::size_t> out;
    for (int v : best_clique_) out.push_back(order_[static_cast<std::size_t>(v)]);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool completed() const { return !stop_.load(); }
  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  struct Worker {
    std::vector<Word> p;          // candidate sets, one row per depth
    std::vector<Word> u, q;       // colouring scratch
    std::vector<int> order, colour;  // per-depth branching lists
    std::vector<int> current;
    long branch = 0;
    std::uint64_t nodes = 0;
  };

  static std::uint64_t pack(long size, long branch) {
    return (static_cast<std::uint64_t>(size) << 32) | static_cast<std::uint64_t>(branch + 1);
  }

  // Largest clique size a search in `branch` may not report.
  long threshold(long branch) const {
    const auto key = incumbent_.load(std::memory_order_relaxed);
    const long size = static_cast<long>(key >> 32);
    const long owner = static_cast<long>(key & 0xffffffffU) - 1;
    return owner <= branch ? size : size - 1;
  }

  const Word* row(int v) const { return adj_.data() + static_cast<std::size_t>(v) * words_; }

  Worker make_worker() const {
    Worker w;
    w.p.assign((n_ + 2) * words_, 0);
    w.u.assign(words_, 0);
    w.q.assign(words_, 0);
    w.order.assign((n_ + 2) * n_, 0);
    w.colour.assign((n_ + 2) * n_, 0);
    w.current.reserve(n_ + 1);
    return w;
  }

  // Greedy sequential colouring of P. Writes the vertices whose colour can
  // still beat the threshold, in non-decreasing colour order; returns the count.
  int colour_sort(Worker& w, const Word* P, long kmin, int* ord, int* col) const {
    Word* U = w.u.data();
    Word* Q = w.q.data();
    std::copy(P, P + words_, U);
    int count = 0;
    int colour = 0;
    auto nonempty = [&](const Word* s) {
      for (std::size_t k = 0; k < words_; ++k)
        if (s[k]) return true;
      return false;
    };
    while (nonempty(U)) {
      ++colour;
      std::copy(U, U + words_, Q);
      for (std::size_t k = 0; k < words_; ++k) {
        while (Q[k]) {
          const int bit = std::countr_zero(Q[k]);
          const int v = static_cast<int>(k * 64) + bit;
          const Word mask = ~(Word{1} << bit);
          U[k] &= mask;
          Q[k] &= mask;
          const Word* a = row(v);
          for (std::size_t j = k; j < words_; ++j) Q[j] &= ~a[j];
          if (colour >= kmin) {
            ord[count] = v;
            col[count] = colour;
            ++count;
          }
        }
      }
    }
    return count;
  }

  void record(Worker& w) {
    std::lock_guard lock(mutex_);
    const long size = static_cast<long>(w.current.size());
    if (size <= threshold(w.branch)) return;
    best_clique_ = w.current;
    incumbent_.store(pack(size, w.branch));
  }

  void tick(Worker& w) {
    if ((++w.nodes & 1023U) == 0 && options_.budget && Clock::now() >= deadline_) stop_.store(true);
  }

  void expand(Worker& w, std::size_t depth) {
    tick(w);
    if (stop_.load(std::memory_order_relaxed)) return;
    Word* P = w.p.data() + depth * words_;
    int* ord = w.order.data() + depth * n_;
    int* col = w.colour.data() + depth * n_;
    const long d = static_cast<long>(depth);
    const int count = colour_sort(w, P, threshold(w.branch) - d + 1, ord, col);

    for (int i = count - 1; i >= 0; --i) {
      if (d + col[i] <= threshold(w.branch)) return;
      const int v = ord[i];
      Word* next = P + words_;
      const Word* a = row(v);
      Word any = 0;
      for (std::size_t k = 0; k < words_; ++k) {
        next[k] = P[k] & a[k];
        any |= next[k];
      }
      w.current.push_back(v);
      if (any) {
        expand(w, depth + 1);
      } else if (d + 1 > threshold(w.branch)) {
        record(w);
      }
      w.current.pop_back();
      P[static_cast<std::size_t>(v) / 64] &= ~(Word{1} << (v % 64));
      if (stop_.load(std::memory_order_relaxed)) return;
    }
  }

  void search_root() {
    Worker root = make_worker();
    std::vector<Word> all(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) all[v / 64] |= Word{1} << (v % 64);
    root_order_.assign(n_, 0);
    root_colour_.assign(n_, 0);
    root_count_ = colour_sort(root, all.data(), threshold(-1) + 1, root_order_.data(), root_colour_.data());
    nodes_.fetch_add(1);

    const unsigned threads = std::max(1U, options_.threads);
    next_branch_.store(0);
    if (threads == 1) {
      work(std::move(root));
      return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back([this] { work(make_worker()); });
  }

  void work(Worker w) {
    for (;;) {
      const long b = next_branch_.fetch_add(1);
      if (b >= root_count_ || stop_.load()) break;
      const int i = root_count_ - 1 - static_cast<int>(b);
      w.branch = b;
      if (root_colour_[static_cast<std::size_t>(i)] <= threshold(b)) continue;
      const int v = root_order_[static_cast<std::size_t>(i)];
      // Candidates: neighbours of v not already branched on at the root.
      Word* P = w.p.data() + words_;
      const Word* a = row(v);
      std::copy(a, a + words_, P);
      for (int j = i + 1; j < root_count_; ++j) {
        const int u = root_order_[static_cast<std::size_t>(j)];
        P[static_cast<std::size_t>(u) / 64] &= ~(Word{1} << (u % 64));
      }
      Word any = 0;
      for (std::size_t k = 0; k < words_; ++k) any |= P[k];
      w.current.assign(1, v);
      if (any) {
        expand(w, 1);
      } else if (1 > threshold(b)) {
        record(w);
      }
      w.current.clear();
    }
    nodes_.fetch_add(w.nodes);
  }

  const CliqueOptions& options_;
  std::size_t n_;
  std::size_t words_;
  std::vector<std::size_t> order_;
  std::vector<Word> adj_;

  std::vector<int> root_order_, root_colour_;
  int root_count_ = 0;
  std::atomic<long> next_branch_{0};

  std::mutex mutex_;
  std::vector<int> best_clique_;
  std::atomic<std::uint64_t> incumbent_{0};
  std::atomic<bool> stop_{false};
  std::atomic<std::uint64_t> nodes_{0};
  Clock::time_point deadline_{};
};

}  // namespace

CliqueResult max_clique(const CompatGraph& g, const CliqueOptions& options) {
  const auto start = Clock::now();
  std::vector<std::size_t> seed;
  if (!options.seed.empty()) {
    bool valid = true;
    for (const auto& p : options.seed) {
      auto i = g.index_of(p);
      if (!i) {
        valid = false;
        break;
      }
      seed.push_back(*i);
    }
    std::sort(seed.begin(), seed.end());
    if (valid && std::adjacent_find(seed.begin(), seed.end()) != seed.end()) valid = false;
    for (std::size_t x = 0; valid && x < seed.size(); ++x)
      for (std::size_t y = x + 1; valid && y < seed.size(); ++y) valid = g.adjacent(seed[x], seed[y]);
    if (!valid) seed.clear();
  }

  BranchAndBound search(g, options);
  auto best = search.run(options.lower_bound, seed);
  std::uint64_t nodes = search.nodes();
  bool optimal = search.completed();

  if (best.empty() && optimal && options.lower_bound > 1 && g.size() > 0) {
    // The bound was too optimistic: no clique reaches it. Search again without it.
    CliqueOptions relaxed = options;
    relaxed.lower_bound = 0;
    if (options.budget) relaxed.budget = *options.budget - (Clock::now() - start);
    BranchAndBound retry(g, relaxed);
    best = retry.run(0, seed);
    nodes += retry.nodes();
    optimal = retry.completed();
  }

  CliqueResult out;
  for (auto v : best) out.clique.push_back(g.vertices()[v]);
  std::sort(out.clique.begin(), out.clique.end());
  out.size = out.clique.size();
  out.optimal = optimal;
  out.nodes_explored = nodes;
  out.elapsed = Clock::now() - start;
  return out;
}

// ---------------------------------------------------------------------------
// Oracle

namespace {

void enumerate_cliques(const CompatGraph& g, std::vector<std::size_t>& current, const std::vector<std::size_t>& candidates,
                       std::vector<std::size_t>& best, std::uint64_t& nodes) {
  ++nodes;
  if (current.size() > best.size()) best = current;
  for (std::size_t x = 0; x < candidates.size(); ++x) {
    const auto v = candidates[x];
    std::vector<std::size_t> next;
    for (std::size_t y = x + 1; y < candidates.size(); ++y)
      if (g.adjacent(v, candidates[y])) next.push_back(candidates[y]);
    current.push_back(v);
    enumerate_cliques(g, current, next, best, nodes);
    current.pop_back();
  }
}

}  // namespace

CliqueResult brute_force_clique(const CompatGraph& g) {
  if (g.size() > 30) throw OracleLimitError("brute_force_clique is limited to 30 vertices");
  const auto start = Clock::now();
  std::vector<std::size_t> all(g.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<std::size_t> current, best;
  CliqueResult out;
  enumerate_cliques(g, current, all, best, out.nodes_explored);
  for (auto v : best) out.clique.push_back(g.vertices()[v]);
  std::sort(out.clique.begin(), out.clique.end());
  out.size = out.clique.size();
  out.optimal = true;
  out.elapsed = Clock::now() - start;
  return out;
}

}  // namespace tridist
