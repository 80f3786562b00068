#include "tough/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tough/error.hpp"

namespace tough {

namespace {

constexpr double kBisectionWidth = 1e-13;
constexpr int kNewtonSteps = 2;

double as_double(std::size_t x) { return static_cast<double>(x); }

void require_threshold_domain(std::size_t t, std::size_t n) {
  if (t < 1) throw Error(Errc::domain, "t must be >= 1");
  if (n < t + 2) {
    throw Error(Errc::domain, "order n=" + std::to_string(n) + " must be >= t+2=" + std::to_string(t + 2));
  }
}

}  // namespace

int Cubic::degree() const noexcept {
  for (int i = 0; i < 3; ++i)
    if (c_[static_cast<std::size_t>(i)] != 0.0) return 3 - i;
  return 0;
}

double Cubic::scale() const noexcept {
  double s = 1.0;
  for (double a : c_) s = std::max(s, std::abs(a));
  return s;
}

RootResult largest_real_root(const Cubic& p, double lo, double hi) {
  const int deg = p.degree();
  if (deg == 0) throw Error(Errc::domain, "constant polynomial has no isolated root");
  const double lead = p.coefficients()[static_cast<std::size_t>(3 - deg)];
  auto signed_value = [&](double x) { return lead > 0 ? p(x) : -p(x); };

  if (!(lo <= hi)) throw Error(Errc::domain, "empty root bracket");
  if (signed_value(hi) < 0.0) throw Error(Errc::domain, "polynomial is negative at the bracket top");
  if (signed_value(lo) > 0.0) throw Error(Errc::domain, "no sign change in root bracket");

  while (hi - lo > kBisectionWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (signed_value(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  double x = 0.5 * (lo + hi);
  for (int i = 0; i < kNewtonSteps; ++i) {
    const double d = p.derivative(x);
    if (d == 0.0) break;
    const double next = x - p(x) / d;
    if (next < lo || next > hi || std::abs(p(next)) > std::abs(p(x))) break;
    x = next;
  }
  return RootResult{x, RootBracket{lo, hi}};
}

RootResult largest_real_root(const Cubic& p) {
  const int deg = p.degree();
  if (deg == 0) throw Error(Errc::domain, "constant polynomial has no isolated root");
  const auto& c = p.coefficients();
  const std::size_t lead_index = static_cast<std::size_t>(3 - deg);
  const double lead = c[lead_index];
  double cauchy = 0.0;
  for (std::size_t i = lead_index + 1; i < 4; ++i) cauchy = std::max(cauchy, std::abs(c[i] / lead));
  cauchy += 1.0;

  if (deg == 1) {
    const double x = -c[3] / c[2];
    return RootResult{x, RootBracket{x, x}};
  }

  auto signed_value = [&](double x) { return lead > 0 ? p(x) : -p(x); };

  if (deg == 2) {
    const double vertex = -c[2] / (2.0 * c[1]);
    if (signed_value(vertex) > 0.0) throw Error(Errc::domain, "quadratic has no real root");
    return largest_real_root(p, vertex, cauchy);
  }

  // Critical points of the cubic.
  const double disc = 4.0 * c[1] * c[1] - 12.0 * c[0] * c[2];
  if (disc <= 0.0) return largest_real_root(p, -cauchy, cauchy);
  const double r = std::sqrt(disc);
  const double x1 = (-2.0 * c[1] - r) / (6.0 * c[0]);
  const double x2 = (-2.0 * c[1] + r) / (6.0 * c[0]);
  const double right = std::max(x1, x2);
  const double left = std::min(x1, x2);
  if (signed_value(right) <= 0.0) return largest_real_root(p, right, cauchy);
  return largest_real_root(p, -cauchy, left);
}

Cubic phi(std::size_t t, std::size_t n) {
  require_threshold_domain(t, n);
  const double k = as_double(n - t - 2);
  return Cubic(1.0, -k, -(as_double(n) - 1.0), as_double(t) * k);
}

ThresholdResult eta(std::size_t t, std::size_t n) {
  const Cubic p = phi(t, n);
  const double top = as_double(n) - 1.0;
  // p(n-1) = t (n-1)^2 + t (n-t-2) > 0, and p has three real roots, so the
  // local minimum is nonpositive and p increases from there to n-1.
  const auto& c = p.coefficients();
  const double critical = (-2.0 * c[1] + std::sqrt(4.0 * c[1] * c[1] - 12.0 * c[2])) / 6.0;
  const RootResult r = largest_real_root(p, std::max(0.0, critical), top);
  return ThresholdResult{t, n, r.root, r.bracket};
}

Cubic phi_b1(std::size_t s, std::size_t t, std::size_t n) {
  if (s < 1 || t < 1) throw Error(Errc::domain, "s and t must be >= 1");
  if (n < t * s + s + 1) {
    throw Error(Errc::domain, "order n=" + std::to_string(n) + " must be >= ts+s+1=" +
                                  std::to_string(t * s + s + 1));
  }
  const double sd = as_double(s), td = as_double(t), nd = as_double(n);
  const double ts = td * sd;
  return Cubic(1.0, -(nd - ts - 2.0), -(nd + ts * sd - ts - 1.0), ts * sd * (nd - ts - sd - 1.0));
}

Cubic phi_b2(std::size_t s, std::size_t t) {
  if (s < 1 || t < 1) throw Error(Errc::domain, "s and t must be >= 1");
  const double sd = as_double(s), td = as_double(t);
  return Cubic(0.0, 1.0, -(sd - 1.0), -sd * (td * sd + 1.0));
}

double eta2_closed_form(std::size_t s, std::size_t t) {
  if (s < 1 || t < 1) throw Error(Errc::domain, "s and t must be >= 1");
  const double sd = as_double(s), td = as_double(t);
  return (sd - 1.0 + std::sqrt((4.0 * td + 1.0) * sd * sd + 2.0 * sd + 1.0)) / 2.0;
}

double h1(std::size_t s, std::size_t t, std::size_t n, double x) {
  const double sd = as_double(s), td = as_double(t), nd = as_double(n);
  return -td * x * x + td * sd * x - (td * sd + td) * nd + td * td * sd * sd + td * sd * sd +
         td * td * sd + 2.0 * td * sd + td * td + 2.0 * td;
}

double f1(std::size_t s, std::size_t t, double x) {
  const double sd = as_double(s), td = as_double(t);
  return -td * x * x + td * sd * x + td * td + td;
}

std::size_t JoinCliqueSpec::order() const {
  std::size_t n = s;
  for (std::size_t p : parts) n += p;
  return n;
}

void JoinCliqueSpec::validate() const {
  if (s < 1) throw Error(Errc::domain, "join-clique spec needs s >= 1");
  if (parts.empty()) throw Error(Errc::domain, "join-clique spec needs at least one part");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw Error(Errc::domain, "clique parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw Error(Errc::domain, "clique parts must be nonincreasing");
  }
}

JoinCliqueSpec maximizer_spec(std::size_t n, std::size_t s, std::size_t c) {
  if (s < 1 || c < 1 || n < s + c) {
    throw Error(Errc::domain, "need s, c >= 1 and n >= s + c");
  }
  JoinCliqueSpec spec{s, std::vector<std::size_t>(c, 1)};
  spec.parts[0] = n - s - c + 1;
  return spec;
}

JoinCliqueSpec g2_spec(std::size_t s, std::size_t t, std::size_t n) {
  if (s < 1 || t < 1 || n < t * s + s + 1) throw Error(Errc::domain, "need s, t >= 1 and n >= ts+s+1");
  return maximizer_spec(n, s, t * s + 1);
}

Graph build_join_cliques(const JoinCliqueSpec& spec) {
  spec.validate();
  Graph rest = complete(spec.parts.front());
  for (std::size_t i = 1; i < spec.parts.size(); ++i) rest = disjoint_union(rest, complete(spec.parts[i]));
  return join(complete(spec.s), rest);
}

Graph build_extremal(std::size_t t, std::size_t n) {
  require_threshold_domain(t, n);
  return join(complete(1), disjoint_union(complete(n - t - 1), empty_graph(t)));
}

}  // namespace tough
