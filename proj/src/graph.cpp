#include "tough/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "tough/error.hpp"

namespace tough {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_order: return "invalid-order";
    case Errc::empty_remainder: return "empty-remainder";
    case Errc::invalid_input: return "invalid-input";
    case Errc::invalid_partition: return "invalid-partition";
    case Errc::not_equitable: return "not-equitable";
    case Errc::parse: return "parse";
    case Errc::size: return "size";
    case Errc::domain: return "domain";
    case Errc::hypothesis: return "hypothesis";
    case Errc::no_convergence: return "no-convergence";
  }
  return "unknown";
}

namespace {

constexpr std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i % 64); }

// Mask of the valid bits in word w for a universe of n elements.
std::uint64_t tail_mask(std::size_t n, std::size_t w) {
  const std::size_t full_words = n / 64;
  if (w < full_words) return ~std::uint64_t{0};
  return (std::uint64_t{1} << (n % 64)) - 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe,
                     std::initializer_list<std::size_t> members)
    : VertexSet(universe) {
  for (std::size_t v : members) insert(v);
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) {
    throw Error(Errc::invalid_input, "from_mask needs universe <= 64");
  }
  VertexSet s(universe);
  if (universe > 0) {
    const std::uint64_t valid =
        universe == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
    if (mask & ~valid) {
      throw Error(Errc::invalid_input, "mask has bits outside the universe");
    }
    s.words_[0] = mask;
  } else if (mask != 0) {
    throw Error(Errc::invalid_input, "mask has bits outside the universe");
  }
  return s;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = tail_mask(universe, w);
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::contains(std::size_t v) const {
  if (v >= universe_) return false;
  return (words_[v / 64] & bit(v)) != 0;
}

void VertexSet::insert(std::size_t v) {
  if (v >= universe_) {
    throw Error(Errc::invalid_input,
                "vertex " + std::to_string(v) + " outside 0.." +
                    std::to_string(universe_) + "-1");
  }
  words_[v / 64] |= bit(v);
}

void VertexSet::erase(std::size_t v) {
  if (v < universe_) words_[v / 64] &= ~bit(v);
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t x = words_[w];
    while (x) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

std::uint64_t VertexSet::mask() const {
  if (universe_ > 64) throw Error(Errc::invalid_input, "mask() needs universe <= 64");
  return words_.empty() ? 0 : words_[0];
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t order)
    : n_(order), words_(word_count(order)), bits_(order * word_count(order), 0) {
  if (order == 0) throw Error(Errc::invalid_order, "graph order must be >= 1");
}

Graph::Graph(std::size_t order,
             std::initializer_list<std::pair<std::size_t, std::size_t>> edges)
    : Graph(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(std::size_t v) const {
  if (v >= n_) {
    throw Error(Errc::invalid_input, "vertex " + std::to_string(v) +
                                         " outside 0.." + std::to_string(n_) + "-1");
  }
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (std::size_t v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[u * words_ + v / 64] & bit(v)) != 0;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(Errc::invalid_input, "self-loops are not allowed");
  if (adjacent(u, v)) return;
  bits_[u * words_ + v / 64] |= bit(v);
  bits_[v * words_ + u / 64] |= bit(u);
  ++edges_;
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
  if (!adjacent(u, v)) return;
  bits_[u * words_ + v / 64] &= ~bit(v);
  bits_[v * words_ + u / 64] &= ~bit(u);
  --edges_;
}

std::span<const std::uint64_t> Graph::row(std::size_t v) const {
  check_vertex(v);
  return std::span<const std::uint64_t>(bits_).subspan(v * words_, words_);
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  auto r = row(v);
  for (std::size_t w = 0; w < r.size(); ++w) {
    std::uint64_t x = r[w];
    while (x) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edges_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructors

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order();
  Graph g(n1 + g2.order());
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(u + n1, v + n1);
  return g;
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  const std::size_t n1 = g1.order();
  for (std::size_t u = 0; u < n1; ++u)
    for (std::size_t v = 0; v < g2.order(); ++v) g.add_edge(u, n1 + v);
  return g;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != g.order()) {
    throw Error(Errc::invalid_input, "vertex set universe does not match graph order");
  }
  const auto kept = keep.members();
  if (kept.empty()) throw Error(Errc::empty_remainder, "induced subgraph on no vertices");
  std::vector<std::size_t> index(g.order(), g.order());
  for (std::size_t i = 0; i < kept.size(); ++i) index[kept[i]] = i;
  Graph h(kept.size());
  for (auto [u, v] : g.edges()) {
    if (index[u] < g.order() && index[v] < g.order()) h.add_edge(index[u], index[v]);
  }
  return h;
}

Graph permuted(const Graph& g, std::span<const std::size_t> perm) {
  if (perm.size() != g.order()) {
    throw Error(Errc::invalid_input, "permutation length does not match graph order");
  }
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p]) throw Error(Errc::invalid_input, "not a permutation");
    seen[p] = true;
  }
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

// ---------------------------------------------------------------------------
// Connectivity

std::size_t components_after_removal(const Graph& g, const VertexSet& removed) {
  if (removed.universe() != g.order()) {
    throw Error(Errc::invalid_input, "vertex set universe does not match graph order");
  }
  const std::size_t words = g.words_per_row();
  std::vector<std::uint64_t> remaining(words);
  std::vector<std::uint64_t> component(words);
  auto rem_words = removed.words();
  bool any = false;
  for (std::size_t w = 0; w < words; ++w) {
    remaining[w] = tail_mask(g.order(), w) & ~rem_words[w];
    any = any || remaining[w] != 0;
  }
  if (!any) throw Error(Errc::empty_remainder, "removing every vertex leaves nothing");

  std::vector<std::size_t> stack;
  std::size_t count = 0;
  for (std::size_t w = 0; w < words; ++w) {
    while (remaining[w]) {
      const std::size_t seed = w * 64 + static_cast<std::size_t>(std::countr_zero(remaining[w]));
      remaining[w] &= ~bit(seed);
      stack.push_back(seed);
      while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        auto r = g.row(u);
        for (std::size_t x = 0; x < words; ++x) {
          std::uint64_t fresh = r[x] & remaining[x];
          remaining[x] &= ~fresh;
          while (fresh) {
            stack.push_back(x * 64 + static_cast<std::size_t>(std::countr_zero(fresh)));
            fresh &= fresh - 1;
          }
        }
      }
      ++count;
    }
  }
  return count;
}

std::size_t component_count(const Graph& g) {
  return components_after_removal(g, VertexSet(g.order()));
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool is_extremal(const Graph& g, std::size_t t) {
  const std::size_t n = g.order();
  if (t < 1) throw Error(Errc::invalid_input, "t must be >= 1");
  if (n < t + 2) throw Error(Errc::invalid_input, "is_extremal needs n >= t + 2");
  if (!is_connected(g)) throw Error(Errc::invalid_input, "is_extremal needs a connected graph");

  const std::size_t clique = n - t - 1;
  const std::size_t expected_edges = (n - 1) + clique * (clique - 1) / 2;
  if (g.edge_count() != expected_edges) return false;

  std::size_t hub = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) {
      if (hub != n) return false;
      hub = v;
    }
  }
  if (hub == n) return false;

  if (clique == 1) {
    // Star K_{1,t+1}: the clique part cannot be told apart from the t
    // isolated vertices, so recognise by degree multiset.
    for (std::size_t v = 0; v < n; ++v) {
      if (v != hub && g.degree(v) != 1) return false;
    }
    return true;
  }

  // g - hub must be K_clique u t K_1.
  std::size_t isolated = 0;
  std::size_t in_clique = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (v == hub) continue;
    const std::size_t d = g.degree(v) - 1;
    if (d == 0) {
      ++isolated;
    } else if (d == clique - 1) {
      ++in_clique;
    } else {
      return false;
    }
  }
  return isolated == t && in_clique == clique;
}

// ---------------------------------------------------------------------------
// Edge masks

Graph from_edge_mask(std::size_t n, std::uint64_t mask) {
  if (n > kMaxMaskOrder) {
    throw Error(Errc::size, "edge masks support orders up to " + std::to_string(kMaxMaskOrder));
  }
  const std::size_t pairs = n * (n - 1) / 2;
  if (pairs < 64 && (mask >> pairs) != 0) {
    throw Error(Errc::invalid_input, "edge mask has bits beyond n(n-1)/2");
  }
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if (mask & (std::uint64_t{1} << k)) g.add_edge(i, j);
    }
  }
  return g;
}

std::uint64_t edge_mask(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxMaskOrder) {
    throw Error(Errc::size, "edge masks support orders up to " + std::to_string(kMaxMaskOrder));
  }
  std::uint64_t mask = 0;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) mask |= std::uint64_t{1} << k;
    }
  }
  return mask;
}

}  // namespace tough
