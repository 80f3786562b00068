#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace tough {

// Subset of the vertex range 0..n-1, stored as a bitmask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<std::size_t> members);

  // Low 64 vertices taken from mask; universe must be <= 64.
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  bool contains(std::size_t v) const;
  void insert(std::size_t v);
  void erase(std::size_t v);

  std::vector<std::size_t> members() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  // Only valid when universe <= 64.
  std::uint64_t mask() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Simple undirected graph on vertices 0..n-1 with one adjacency bitset per
// vertex. Symmetric, loop-free, n >= 1.
class Graph {
 public:
  explicit Graph(std::size_t order);
  Graph(std::size_t order,
        std::initializer_list<std::pair<std::size_t, std::size_t>> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_; }
  std::size_t degree(std::size_t v) const;
  std::size_t max_degree() const;
  bool adjacent(std::size_t u, std::size_t v) const;

  // Adds u~v; a no-op when the edge already exists. Throws on loops.
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  std::size_t words_per_row() const noexcept { return words_; }
  std::span<const std::uint64_t> row(std::size_t v) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  bool is_complete() const noexcept { return edges_ == n_ * (n_ - 1) / 2; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void check_vertex(std::size_t v) const;

  std::size_t n_;
  std::size_t words_;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
};

Graph complete(std::size_t n);
// n isolated vertices (n K_1).
Graph empty_graph(std::size_t n);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);

// Subgraph induced on the vertices of keep, relabelled 0..|keep|-1 in
// increasing order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// Relabels vertex v as perm[v].
Graph permuted(const Graph& g, std::span<const std::size_t> perm);

std::size_t components_after_removal(const Graph& g, const VertexSet& removed);
std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);

// Recognises K_1 v (K_{n-t-1} u t K_1) up to isomorphism. Requires g
// connected and n >= t + 2.
bool is_extremal(const Graph& g, std::size_t t);

// Edge masks index the upper triangle column by column, (0,1), (0,2), (1,2),
// (0,3), ... which is also the graph6 bit order. Orders up to 11 fit.
inline constexpr std::size_t kMaxMaskOrder = 11;
Graph from_edge_mask(std::size_t n, std::uint64_t mask);
std::uint64_t edge_mask(const Graph& g);

}  // namespace tough
