#include "tough/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "tough/error.hpp"

namespace tough {

// ---------------------------------------------------------------------------
// SymMatrix

SymMatrix::SymMatrix(std::size_t order) : m_(order), a_(order * order, 0.0) {
  if (order == 0) throw Error(Errc::invalid_input, "matrix order must be >= 1");
}

SymMatrix::SymMatrix(std::size_t order, std::vector<double> entries)
    : m_(order), a_(std::move(entries)) {
  if (order == 0) throw Error(Errc::invalid_input, "matrix order must be >= 1");
  if (a_.size() != order * order) {
    throw Error(Errc::invalid_input, "expected " + std::to_string(order * order) + " entries");
  }
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) {
      if (!std::isfinite(a_[i * m_ + j])) throw Error(Errc::invalid_input, "non-finite entry");
      if (a_[i * m_ + j] != a_[j * m_ + i]) throw Error(Errc::invalid_input, "matrix is not symmetric");
    }
  }
}

void SymMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i >= m_ || j >= m_) throw Error(Errc::invalid_input, "index out of range");
  if (!std::isfinite(value)) throw Error(Errc::invalid_input, "non-finite entry");
  a_[i * m_ + j] = value;
  a_[j * m_ + i] = value;
}

double SymMatrix::trace() const {
  double s = 0.0;
  for (std::size_t i = 0; i < m_; ++i) s += a_[i * m_ + i];
  return s;
}

// ---------------------------------------------------------------------------
// Partition / QuotientMatrix

Partition::Partition(std::size_t n, std::vector<std::vector<std::size_t>> blocks)
    : blocks_(std::move(blocks)), block_of_(n, n) {
  if (n == 0) throw Error(Errc::invalid_partition, "partition of an empty set");
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw Error(Errc::invalid_partition, "empty block " + std::to_string(b));
    for (std::size_t v : blocks_[b]) {
      if (v >= n) throw Error(Errc::invalid_partition, "vertex " + std::to_string(v) + " out of range");
      if (block_of_[v] != n) throw Error(Errc::invalid_partition, "vertex " + std::to_string(v) + " in two blocks");
      block_of_[v] = b;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (block_of_[v] == n) throw Error(Errc::invalid_partition, "vertex " + std::to_string(v) + " not covered");
  }
}

QuotientMatrix::QuotientMatrix(std::vector<std::size_t> block_sizes, std::vector<double> entries)
    : sizes_(std::move(block_sizes)), q_(std::move(entries)) {
  if (q_.size() != sizes_.size() * sizes_.size()) {
    throw Error(Errc::invalid_input, "quotient entries do not match block count");
  }
}

// ---------------------------------------------------------------------------
// Eigenvalues

SymMatrix adjacency(const Graph& g) {
  SymMatrix a(g.order());
  for (auto [u, v] : g.edges()) a.set(u, v, 1.0);
  return a;
}

PowerResult power_iteration(const SymMatrix& m, const RadiusOptions& opts) {
  const std::size_t n = m.order();
  auto a = m.data();
  // Iterating on A + I keeps -lambda_1 (bipartite graphs) from competing
  // with lambda_1.
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> w(n);
  PowerResult r;
  for (std::size_t it = 1; it <= opts.max_iterations; ++it) {
    double lambda = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      const double* row = a.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) s += row[j] * v[j];
      w[i] = s;
      lambda += v[i] * s;
    }
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(w[i] - lambda * v[i]));
    r.value = lambda;
    r.residual = residual;
    r.iterations = it;
    if (residual <= opts.tolerance * std::max(1.0, std::abs(lambda))) {
      r.converged = true;
      return r;
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] += v[i];
      norm += w[i] * w[i];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) return r;
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
  }
  return r;
}

Spectrum full_spectrum(const SymMatrix& m, const SpectrumOptions& opts) {
  const std::size_t n = m.order();
  if (n > opts.dense_limit) {
    throw Error(Errc::size, "order " + std::to_string(n) + " exceeds dense limit " +
                                std::to_string(opts.dense_limit));
  }
  std::vector<double> a(m.data().begin(), m.data().end());
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  double total = 0.0;
  for (double x : a) total += x * x;
  const double threshold = opts.tolerance * std::max(1.0, std::sqrt(total));

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  double off = off_norm();
  std::size_t sweep = 0;
  while (off > threshold) {
    if (sweep++ == opts.max_sweeps) {
      throw Error(Errc::no_convergence, "Jacobi did not converge in " +
                                            std::to_string(opts.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p);
        const double aqq = at(q, q);
        // Rotation angle chosen so the (p,q) entry vanishes; |t| <= 1.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = at(p, k) = c * akp - s * akq;
          at(k, q) = at(q, k) = s * akp + c * akq;
        }
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = at(q, p) = 0.0;
      }
    }
    off = off_norm();
  }

  Spectrum spec;
  spec.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) spec.values[i] = at(i, i);
  std::sort(spec.values.begin(), spec.values.end(), std::greater<>());
  spec.radius = spec.values.front();
  spec.tolerance = off;
  return spec;
}

double spectral_radius(const Graph& g, const RadiusOptions& opts) {
  const SymMatrix a = adjacency(g);
  const PowerResult p = power_iteration(a, opts);
  if (p.converged) return p.value;
  SpectrumOptions fallback;
  fallback.tolerance = opts.tolerance;
  try {
    return full_spectrum(a, fallback).radius;
  } catch (const Error& e) {
    throw Error(Errc::no_convergence,
                "power iteration stalled (residual " + std::to_string(p.residual) +
                    ") and full spectrum failed: " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Quotients

namespace {

void check_partition(const SymMatrix& m, const Partition& p) {
  if (p.universe() != m.order()) {
    throw Error(Errc::invalid_partition, "partition universe does not match matrix order");
  }
}

// sums[v * k + j] = sum over columns in block j of row v.
std::vector<double> block_row_sums(const SymMatrix& m, const Partition& p) {
  const std::size_t n = m.order();
  const std::size_t k = p.block_count();
  std::vector<double> sums(n * k, 0.0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u) sums[v * k + p.block_of(u)] += m(v, u);
  return sums;
}

}  // namespace

QuotientMatrix quotient_matrix(const SymMatrix& m, const Partition& p) {
  check_partition(m, p);
  const std::size_t k = p.block_count();
  const auto sums = block_row_sums(m, p);
  std::vector<double> q(k * k, 0.0);
  std::vector<std::size_t> sizes(k);
  for (std::size_t i = 0; i < k; ++i) {
    sizes[i] = p.block(i).size();
    for (std::size_t v : p.block(i))
      for (std::size_t j = 0; j < k; ++j) q[i * k + j] += sums[v * k + j];
    for (std::size_t j = 0; j < k; ++j) q[i * k + j] /= static_cast<double>(sizes[i]);
  }
  return QuotientMatrix(std::move(sizes), std::move(q));
}

bool is_equitable(const SymMatrix& m, const Partition& p) {
  check_partition(m, p);
  const std::size_t k = p.block_count();
  const auto sums = block_row_sums(m, p);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t first = p.block(i).front();
    for (std::size_t v : p.block(i))
      for (std::size_t j = 0; j < k; ++j)
        if (sums[v * k + j] != sums[first * k + j]) return false;
  }
  return true;
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& q, const SpectrumOptions& opts) {
  const std::size_t k = q.order();
  const auto& sizes = q.block_sizes();
  SymMatrix s(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      // sqrt(q_ij q_ji) equals q_ij sqrt(|V_i| / |V_j|) when the source is
      // symmetric; averaging the two routes keeps s exactly symmetric.
      const double a = q(i, j) * std::sqrt(static_cast<double>(sizes[i]) / static_cast<double>(sizes[j]));
      const double b = q(j, i) * std::sqrt(static_cast<double>(sizes[j]) / static_cast<double>(sizes[i]));
      s.set(i, j, 0.5 * (a + b));
    }
  }
  return full_spectrum(s, opts).values;
}

RadiusPair quotient_radius_check(const Graph& g, const Partition& p, const RadiusOptions& opts) {
  const SymMatrix a = adjacency(g);
  if (!is_equitable(a, p)) throw Error(Errc::not_equitable, "partition is not equitable");
  SpectrumOptions so;
  so.tolerance = opts.tolerance;
  return RadiusPair{spectral_radius(g, opts), quotient_eigenvalues(quotient_matrix(a, p), so).front()};
}

}  // namespace tough
