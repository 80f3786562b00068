#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "tough/graph.hpp"

namespace tough {

// a3 x^3 + a2 x^2 + a1 x + a0. A zero leading coefficient is allowed so the
// same type carries the quadratic characteristic polynomial of the
// two-block quotient.
class Cubic {
 public:
  Cubic(double a3, double a2, double a1, double a0) : c_{a3, a2, a1, a0} {}

  double operator()(double x) const { return ((c_[0] * x + c_[1]) * x + c_[2]) * x + c_[3]; }
  double derivative(double x) const { return (3.0 * c_[0] * x + 2.0 * c_[1]) * x + c_[2]; }

  // {a3, a2, a1, a0}
  const std::array<double, 4>& coefficients() const noexcept { return c_; }
  int degree() const noexcept;
  // Largest coefficient magnitude, at least 1; scale for residual checks.
  double scale() const noexcept;

  friend bool operator==(const Cubic&, const Cubic&) = default;

 private:
  std::array<double, 4> c_;
};

struct RootBracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct RootResult {
  double root = 0.0;
  RootBracket bracket;  // p(lo) <= 0 <= p(hi) for a positive leading term
};

// Largest real root of a polynomial of degree 1..3. The search interval is
// the monotone branch right of the largest critical point (or left of the
// smaller one when the local minimum is positive), capped by the Cauchy
// bound, then bisected to width 1e-13 and polished by two Newton steps.
// Throws Errc::domain when there is no real root.
RootResult largest_real_root(const Cubic& p);

// Same, but with the search restricted to [lo, hi]; requires p(hi) to carry
// the sign of the leading term and p to be monotone on [lo, hi] around its
// rightmost root.
RootResult largest_real_root(const Cubic& p, double lo, double hi);

struct ThresholdResult {
  std::size_t t = 0;
  std::size_t n = 0;
  double eta = 0.0;
  RootBracket bracket;
};

// x^3 - (n-t-2) x^2 - (n-1) x + t(n-t-2). Requires t >= 1, n >= t+2.
Cubic phi(std::size_t t, std::size_t n);
// Largest root of phi(t, n), searched in [0, n-1].
ThresholdResult eta(std::size_t t, std::size_t n);

// Characteristic polynomial of the three-block quotient of
// K_s v (K_{n-ts-s} u ts K_1). Requires n >= ts+s+1.
Cubic phi_b1(std::size_t s, std::size_t t, std::size_t n);
// Characteristic polynomial of the two-block quotient of K_s v (ts+1) K_1:
// x^2 - (s-1) x - s(ts+1).
Cubic phi_b2(std::size_t s, std::size_t t);
// Positive root of phi_b2, (s - 1 + sqrt((4t+1)s^2 + 2s + 1)) / 2.
double eta2_closed_form(std::size_t s, std::size_t t);

// Quadratic factor of phi(x) - phi_b1(x) = (s-1) h1(x).
double h1(std::size_t s, std::size_t t, std::size_t n, double x);
// h1 with n replaced by its minimum ts+s+1.
double f1(std::size_t s, std::size_t t, double x);

// K_s v (K_{n_1} u ... u K_{n_c}), parts nonincreasing and positive.
struct JoinCliqueSpec {
  std::size_t s = 0;
  std::vector<std::size_t> parts;

  std::size_t order() const;
  // Throws Errc::domain when s == 0, parts is empty, has a zero, or increases.
  void validate() const;

  friend bool operator==(const JoinCliqueSpec&, const JoinCliqueSpec&) = default;
};

// {s, (n-s-c+1, 1, ..., 1)}: the maximiser among c-part compositions.
JoinCliqueSpec maximizer_spec(std::size_t n, std::size_t s, std::size_t c);
// {s, (n-ts-s, 1 x ts)}.
JoinCliqueSpec g2_spec(std::size_t s, std::size_t t, std::size_t n);

Graph build_join_cliques(const JoinCliqueSpec& spec);
// K_1 v (K_{n-t-1} u t K_1). Requires t >= 1, n >= t+2.
Graph build_extremal(std::size_t t, std::size_t n);

}  // namespace tough
