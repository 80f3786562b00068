#pragma once

// Independent reference routines for the tests. None of these call into the
// library's algorithms; they work from plain adjacency matrices.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

inline Matrix from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Matrix a(n, std::vector<int>(n, 0));
  for (auto [u, v] : edges) a[u][v] = a[v][u] = 1;
  return a;
}

// Same upper-triangle column order as graph6.
inline Matrix from_mask(std::size_t n, std::uint64_t mask) {
  Matrix a(n, std::vector<int>(n, 0));
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k)
      if (mask >> k & 1) a[i][j] = a[j][i] = 1;
  return a;
}

inline bool isomorphic(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = a[i][j] == b[p[i]][p[j]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Components of the graph with the vertices flagged in removed deleted,
// by union-find.
inline std::size_t components(const Matrix& a, const std::vector<bool>& removed) {
  const std::size_t n = a.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a[i][j] && !removed[i] && !removed[j]) parent[find(i)] = find(j);
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (!removed[i] && find(i) == i) ++c;
  return c;
}

struct Toughness {
  bool infinite = true;
  long long num = 0, den = 1;  // reduced
};

// min |S| / c(G - S) over every subset with c >= 2, no pruning.
inline Toughness toughness(const Matrix& a) {
  const std::size_t n = a.size();
  Toughness best;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::vector<bool> removed(n);
    long long size = 0;
    for (std::size_t v = 0; v < n; ++v) {
      removed[v] = s >> v & 1;
      size += removed[v];
    }
    if (size == static_cast<long long>(n)) continue;
    const long long c = static_cast<long long>(components(a, removed));
    if (c < 2) continue;
    if (best.infinite || size * best.den < best.num * c) {
      best.infinite = false;
      best.num = size;
      best.den = c;
    }
  }
  if (!best.infinite) {
    const long long g = std::gcd(best.num, best.den);
    best.num /= g;
    best.den /= g;
  }
  return best;
}

// t|S| >= c(G - S) for every S with c >= 2.
inline bool one_over_t_tough(const Matrix& a, long long t) {
  const std::size_t n = a.size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::vector<bool> removed(n);
    long long size = 0;
    for (std::size_t v = 0; v < n; ++v) {
      removed[v] = s >> v & 1;
      size += removed[v];
    }
    if (size == static_cast<long long>(n)) continue;
    const long long c = static_cast<long long>(components(a, removed));
    if (c >= 2 && t * size < c) return false;
  }
  return true;
}

// Eigenvalues (nonincreasing) via Eigen's self-adjoint solver.
inline std::vector<double> eigenvalues(const Matrix& a) {
  const auto n = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline double radius(const Matrix& a) { return eigenvalues(a).front(); }

// Plain bisection for a sign change of f on [lo, hi].
template <typename F>
double bisect(F f, double lo, double hi) {
  const bool rising = f(hi) > f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) < 0) == rising) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Connected labeled graphs on n vertices by the standard recurrence
// C(n) = 2^{n(n-1)/2} - sum_{k<n} binom(n-1,k-1) C(k) 2^{(n-k)(n-k-1)/2}.
inline std::uint64_t connected_labeled_count(std::size_t n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  auto binom = [](std::size_t a, std::size_t b) {
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  for (std::size_t m = 1; m <= n; ++m) {
    std::uint64_t total = std::uint64_t{1} << (m * (m - 1) / 2);
    for (std::size_t k = 1; k < m; ++k)
      total -= binom(m - 1, k - 1) * c[k] * (std::uint64_t{1} << ((m - k) * (m - k - 1) / 2));
    c[m] = total;
  }
  return c[n];
}

}  // namespace oracle
