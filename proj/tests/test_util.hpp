#pragma once

#include <random>

#include "oracles.hpp"
#include "tough/graph.hpp"

namespace testutil {

inline oracle::Matrix matrix(const tough::Graph& g) {
  oracle::Matrix a(g.order(), std::vector<int>(g.order(), 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

// Erdos-Renyi G(n, p).
inline tough::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  tough::Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline tough::Graph path(std::size_t n) {
  tough::Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline tough::Graph cycle(std::size_t n) {
  tough::Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline tough::Graph star(std::size_t leaves) {
  tough::Graph g(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

// Triangle 0-1-2 with pendant 3 on vertex 0.
inline tough::Graph paw() { return tough::Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}); }

}  // namespace testutil
