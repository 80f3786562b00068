#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tough/graph.hpp"

namespace tough {

// Dense real symmetric matrix, row-major. Construction rejects asymmetric
// or non-finite entries.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t order);
  SymMatrix(std::size_t order, std::vector<double> entries);

  std::size_t order() const noexcept { return m_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * m_ + j]; }
  // Sets both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, double value);

  double trace() const;
  std::span<const double> data() const noexcept { return a_; }

 private:
  std::size_t m_;
  std::vector<double> a_;
};

struct Spectrum {
  std::vector<double> values;  // nonincreasing
  double radius = 0.0;         // values.front()
  double tolerance = 0.0;      // off-diagonal Frobenius norm at exit
};

// Ordered list of disjoint, nonempty vertex blocks covering 0..n-1.
class Partition {
 public:
  Partition(std::size_t n, std::vector<std::vector<std::size_t>> blocks);

  std::size_t universe() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::size_t>& block(std::size_t i) const { return blocks_[i]; }
  std::size_t block_of(std::size_t v) const { return block_of_[v]; }

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

// q(i,j) = (sum of entries of block (i,j)) / |block i|.
class QuotientMatrix {
 public:
  QuotientMatrix(std::vector<std::size_t> block_sizes, std::vector<double> entries);

  std::size_t order() const noexcept { return sizes_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return q_[i * order() + j]; }
  const std::vector<std::size_t>& block_sizes() const noexcept { return sizes_; }

 private:
  std::vector<std::size_t> sizes_;
  std::vector<double> q_;
};

struct RadiusOptions {
  double tolerance = 1e-12;  // relative residual
  std::size_t max_iterations = 1'000'000;
};

struct SpectrumOptions {
  double tolerance = 1e-12;  // relative off-diagonal norm
  std::size_t dense_limit = 512;
  std::size_t max_sweeps = 100;
};

SymMatrix adjacency(const Graph& g);

// Largest eigenvalue of a nonnegative symmetric matrix by shifted power
// iteration from the all-ones vector. Returns false in `converged` when the
// iteration budget runs out.
struct PowerResult {
  double value = 0.0;
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};
PowerResult power_iteration(const SymMatrix& m, const RadiusOptions& opts = {});

// lambda_1(A(g)). Power iteration first, cyclic Jacobi as fallback; throws
// Errc::no_convergence only when both fail.
double spectral_radius(const Graph& g, const RadiusOptions& opts = {});

// All eigenvalues by cyclic Jacobi rotations.
Spectrum full_spectrum(const SymMatrix& m, const SpectrumOptions& opts = {});

QuotientMatrix quotient_matrix(const SymMatrix& m, const Partition& p);
bool is_equitable(const SymMatrix& m, const Partition& p);

// Eigenvalues of a quotient of a symmetric matrix, nonincreasing. The
// quotient is similar to the symmetric matrix D^{1/2} Q D^{-1/2} (D the
// block sizes), so it has a real spectrum.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& q,
                                         const SpectrumOptions& opts = {});

struct RadiusPair {
  double graph = 0.0;     // lambda_1(A(g))
  double quotient = 0.0;  // lambda_1(M_pi)
};
// Throws Errc::not_equitable when p is not equitable for A(g).
RadiusPair quotient_radius_check(const Graph& g, const Partition& p,
                                 const RadiusOptions& opts = {});

}  // namespace tough
