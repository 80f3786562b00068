#include "tough/thresholds.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "test_util.hpp"
#include "tough/error.hpp"
#include "tough/spectral.hpp"

namespace tough {
namespace {

using testutil::matrix;

void expect_coefficients(const Cubic& p, double a3, double a2, double a1, double a0) {
  const auto& c = p.coefficients();
  EXPECT_EQ(c[0], a3);
  EXPECT_EQ(c[1], a2);
  EXPECT_EQ(c[2], a1);
  EXPECT_EQ(c[3], a0);
}

TEST(Phi, Coefficients) {
  expect_coefficients(phi(1, 4), 1, -1, -3, 1);
  for (std::size_t n = 3; n <= 30; ++n) {
    const double nd = static_cast<double>(n);
    expect_coefficients(phi(1, n), 1, -(nd - 3), -(nd - 1), nd - 3);
  }
  for (std::size_t t = 1; t <= 10; ++t) {
    expect_coefficients(phi(t, t + 2), 1, 0, -(t + 1.0), 0);
  }
}

TEST(Phi, DomainErrors) {
  try {
    phi(3, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::domain);
  }
  EXPECT_THROW(phi(0, 4), Error);
  EXPECT_THROW(eta(2, 3), Error);
}

TEST(Eta, Examples) {
  const double paw = oracle::bisect([](double x) { return ((x - 1) * x - 3) * x + 1; }, 2.0, 3.0);
  EXPECT_NEAR(eta(1, 4).eta, paw, 1e-13);
  EXPECT_NEAR(eta(1, 4).eta, 2.170086, 1e-6);

  for (std::size_t t = 1; t <= 20; ++t) EXPECT_NEAR(eta(t, t + 2).eta, std::sqrt(t + 1.0), 1e-13);

  // Frozen from a 30-digit polynomial root finder: 5.0695179919157556...
  EXPECT_NEAR(eta(2, 8).eta, 5.069517991915756, 1e-13);
  EXPECT_NEAR(eta(2, 8).eta, oracle::radius(matrix(build_extremal(2, 8))), 1e-9);
}

TEST(Eta, BracketAndResidualInvariants) {
  for (std::size_t t = 1; t <= 5; ++t) {
    for (std::size_t n = t + 2; n <= 60; ++n) {
      const ThresholdResult r = eta(t, n);
      const Cubic p = phi(t, n);
      EXPECT_EQ(r.t, t);
      EXPECT_EQ(r.n, n);
      EXPECT_LE(r.bracket.lo, r.eta);
      EXPECT_GE(r.bracket.hi, r.eta);
      EXPECT_LE(r.bracket.hi - r.bracket.lo, 1e-12);
      EXPECT_LE(p(r.bracket.lo), 0.0);
      EXPECT_GE(p(r.bracket.hi), 0.0);
      EXPECT_LE(std::abs(p(r.eta)), 1e-10 * p.scale());
      EXPECT_LE(r.eta, n - 1.0);
      EXPECT_GT(r.eta, std::sqrt(n - 1.0) - 1.0);
      // No larger root: p is positive and increasing beyond eta.
      EXPECT_GT(p(r.eta + 1e-6), 0.0);
      EXPECT_GT(p.derivative(r.eta), 0.0);
    }
  }
}

TEST(Eta, StrictlyIncreasingInOrder) {
  for (std::size_t t = 1; t <= 5; ++t) {
    double previous = -1.0;
    for (std::size_t n = t + 2; n <= 60; ++n) {
      const double e = eta(t, n).eta;
      EXPECT_GT(e, previous) << "t=" << t << " n=" << n;
      previous = e;
    }
  }
}

TEST(LargestRealRoot, GeneralPolynomials) {
  // (x - 1)(x - 2)(x - 5)
  EXPECT_NEAR(largest_real_root(Cubic(1, -8, 17, -10)).root, 5.0, 1e-12);
  // Negative leading term: -(x - 1)(x - 2)(x - 5)
  EXPECT_NEAR(largest_real_root(Cubic(-1, 8, -17, 10)).root, 5.0, 1e-12);
  // One real root: x^3 + x + 1.
  const double r = largest_real_root(Cubic(1, 0, 1, 1)).root;
  EXPECT_NEAR(r * r * r + r + 1, 0.0, 1e-12);
  // Local minimum above zero: (x + 3)(x^2 - 2x + 2) = x^3 + x^2 - 4x + 6.
  EXPECT_NEAR(largest_real_root(Cubic(1, 1, -4, 6)).root, -3.0, 1e-12);
  // Degree 2 and 1.
  EXPECT_NEAR(largest_real_root(Cubic(0, 1, 0, -2)).root, std::sqrt(2.0), 1e-13);
  EXPECT_NEAR(largest_real_root(Cubic(0, 0, 2, -3)).root, 1.5, 0.0);
  EXPECT_THROW(largest_real_root(Cubic(0, 1, 0, 1)), Error);
  EXPECT_THROW(largest_real_root(Cubic(0, 0, 0, 1)), Error);
}

TEST(PhiB1, Examples) {
  for (std::size_t t = 1; t <= 5; ++t)
    for (std::size_t n = t + 2; n <= 30; ++n) EXPECT_EQ(phi_b1(1, t, n), phi(t, n));
  expect_coefficients(phi_b1(1, 1, 4), 1, -1, -3, 1);
  try {
    phi_b1(2, 2, 6);  // needs n >= 7
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::domain);
  }
}

TEST(PhiB1, LargestRootIsRadiusOfG2) {
  for (std::size_t s = 1; s <= 4; ++s)
    for (std::size_t t = 1; t <= 3; ++t)
      for (std::size_t n = t * s + s + 1; n <= 20; ++n) {
        const double root = largest_real_root(phi_b1(s, t, n)).root;
        const Graph g2 = build_join_cliques(g2_spec(s, t, n));
        EXPECT_NEAR(root, oracle::radius(matrix(g2)), 1e-9) << s << " " << t << " " << n;
      }
}

TEST(Eta2ClosedForm, Examples) {
  EXPECT_NEAR(eta2_closed_form(1, 1), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(eta2_closed_form(1, 1), oracle::radius(matrix(testutil::path(3))), 1e-12);
  // K_2 v 3K_1 has quotient polynomial x^2 - x - 6.
  EXPECT_NEAR(eta2_closed_form(2, 1), 3.0, 1e-15);
  EXPECT_NEAR(eta2_closed_form(2, 1), oracle::radius(matrix(join(complete(2), empty_graph(3)))), 1e-12);
  for (std::size_t s = 1; s <= 8; ++s) {
    for (std::size_t t = 1; t <= 8; ++t) {
      const double x = eta2_closed_form(s, t);
      EXPECT_NEAR(phi_b2(s, t)(x), 0.0, 1e-12 * std::max(1.0, x * x));
      EXPECT_NEAR(largest_real_root(phi_b2(s, t)).root, x, 1e-12);
    }
  }
}

TEST(H1, FactorisationIdentityAtRandomPoints) {
  std::mt19937_64 rng(8);
  for (std::size_t s = 1; s <= 4; ++s)
    for (std::size_t t = 1; t <= 4; ++t)
      for (std::size_t n = t * s + s + 1; n <= t * s + s + 6; ++n) {
        std::uniform_real_distribution<double> xs(-10.0, 10.0);
        for (int i = 0; i < 100; ++i) {
          const double x = xs(rng);
          const double lhs = phi(t, n)(x) - phi_b1(s, t, n)(x);
          const double rhs = (s - 1.0) * h1(s, t, n, x);
          EXPECT_NEAR(lhs, rhs, 1e-9 * std::max(1.0, std::abs(lhs)));
        }
      }
}

TEST(H1, ReducesToF1AtMinimalOrder) {
  for (std::size_t s = 1; s <= 6; ++s)
    for (std::size_t t = 1; t <= 5; ++t)
      for (double x : {-3.0, 0.0, 0.5, 2.0, 7.25}) {
        const std::size_t n0 = t * s + s + 1;
        EXPECT_NEAR(h1(s, t, n0, x), f1(s, t, x), 1e-9);
        EXPECT_LT(h1(s, t, n0 + 1, x), f1(s, t, x));
      }
}

TEST(F1, VertexIsTheMaximum) {
  for (std::size_t s = 1; s <= 6; ++s)
    for (std::size_t t = 1; t <= 5; ++t) {
      const double axis = s / 2.0;
      EXPECT_NEAR(f1(s, t, axis), t * s * s / 4.0 + t * t + t, 1e-12);
      EXPECT_GT(f1(s, t, axis), f1(s, t, axis + 0.1));
      EXPECT_GT(f1(s, t, axis), f1(s, t, axis - 0.1));
    }
}

TEST(BuildExtremal, Examples) {
  EXPECT_EQ(build_extremal(1, 4), testutil::paw());
  EXPECT_EQ(build_extremal(2, 4), testutil::star(3));
  EXPECT_THROW(build_extremal(3, 4), Error);
  for (std::size_t t = 1; t <= 5; ++t)
    for (std::size_t n = t + 2; n <= 25; ++n)
      EXPECT_NEAR(spectral_radius(build_extremal(t, n)), eta(t, n).eta, 1e-9);
}

TEST(BuildJoinCliques, Examples) {
  for (std::size_t t = 1; t <= 4; ++t)
    for (std::size_t n = t + 2; n <= 12; ++n) {
      JoinCliqueSpec spec{1, std::vector<std::size_t>(t + 1, 1)};
      spec.parts[0] = n - t - 1;
      EXPECT_EQ(build_join_cliques(spec), build_extremal(t, n));
    }
  const Graph stars = build_join_cliques({2, std::vector<std::size_t>(5, 1)});
  EXPECT_EQ(stars, join(complete(2), empty_graph(5)));
  EXPECT_NEAR(spectral_radius(stars), eta2_closed_form(2, 2), 1e-12);

  const JoinCliqueSpec g2 = g2_spec(2, 1, 8);
  EXPECT_EQ(g2.s, 2u);
  EXPECT_EQ(g2.parts, (std::vector<std::size_t>{4, 1, 1}));
  EXPECT_EQ(build_join_cliques(g2).order(), 8u);
  EXPECT_EQ(maximizer_spec(8, 1, 3).parts, (std::vector<std::size_t>{5, 1, 1}));
}

TEST(BuildJoinCliques, Validation) {
  EXPECT_THROW(build_join_cliques({0, {2, 1}}), Error);
  EXPECT_THROW(build_join_cliques({1, {}}), Error);
  EXPECT_THROW(build_join_cliques({1, {1, 2}}), Error);
  EXPECT_THROW(build_join_cliques({1, {2, 0}}), Error);
  EXPECT_THROW(maximizer_spec(3, 2, 2), Error);
}

}  // namespace
}  // namespace tough
