#include "tough/toughness.hpp"

#include <array>
#include <bit>
#include <numeric>

#include "tough/error.hpp"

namespace tough {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den <= 0 || num < 0) throw Error(Errc::invalid_input, "rational needs num >= 0 and den > 0");
  const std::int64_t g = std::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

constexpr std::size_t kHardLimit = 63;

// Adjacency rows packed into single words for the cut enumeration.
class MaskGraph {
 public:
  explicit MaskGraph(const Graph& g) : n_(g.order()) {
    for (std::size_t v = 0; v < n_; ++v) rows_[v] = g.row(v)[0];
    all_ = (std::uint64_t{1} << n_) - 1;
  }

  std::size_t order() const { return n_; }

  std::size_t components_without(std::uint64_t removed) const {
    std::uint64_t remaining = all_ & ~removed;
    std::size_t count = 0;
    while (remaining) {
      std::uint64_t frontier = remaining & (~remaining + 1);
      remaining &= ~frontier;
      while (frontier) {
        const int u = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const std::uint64_t fresh = rows_[static_cast<std::size_t>(u)] & remaining;
        remaining &= ~fresh;
        frontier |= fresh;
      }
      ++count;
    }
    return count;
  }

 private:
  std::size_t n_;
  std::uint64_t all_ = 0;
  std::array<std::uint64_t, 64> rows_{};
};

void check_input(const Graph& g, const ToughnessOptions& opts) {
  const std::size_t limit = std::min(opts.exhaustive_limit, kHardLimit);
  if (g.order() > limit) {
    throw Error(Errc::size, "order " + std::to_string(g.order()) + " exceeds exhaustive limit " +
                                std::to_string(limit));
  }
  if (!is_connected(g)) throw Error(Errc::invalid_input, "toughness needs a connected graph");
}

// Visits every k-subset of n bits in increasing mask order. The visitor
// returns false to stop early.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k == 0) return fn(std::uint64_t{0});
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t x = (std::uint64_t{1} << k) - 1;
  while (x < limit) {
    if (!fn(x)) return false;
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return true;
}

}  // namespace

ToughnessResult toughness_exact(const Graph& g, const ToughnessOptions& opts) {
  check_input(g, opts);
  ToughnessResult result;
  if (g.is_complete()) {
    result.infinite = true;
    result.witness = VertexSet(g.order());
    return result;
  }

  const MaskGraph mg(g);
  const std::size_t n = mg.order();
  std::uint64_t best_mask = 0;
  std::size_t best_num = 0, best_den = 0;  // best_den == 0: nothing yet
  for (std::size_t s = 1; s + 2 <= n; ++s) {
    // c(G - S) <= n - s, so no S of this size (or larger) beats s / (n - s).
    if (best_den != 0 && s * best_den >= best_num * (n - s)) break;
    for_each_subset(n, s, [&](std::uint64_t cut) {
      const std::size_t c = mg.components_without(cut);
      if (c >= 2 && (best_den == 0 || s * best_den < best_num * c)) {
        best_num = s;
        best_den = c;
        best_mask = cut;
      }
      return true;
    });
  }
  // A connected non-complete graph always has a separating set.
  result.value = Rational(static_cast<std::int64_t>(best_num), static_cast<std::int64_t>(best_den));
  result.cut_size = best_num;
  result.components = best_den;
  result.witness = VertexSet::from_mask(n, best_mask);
  return result;
}

ToughCheck is_tough(const Graph& g, Rational threshold, const ToughnessOptions& opts) {
  check_input(g, opts);
  if (threshold.num() == 0) return ToughCheck{};
  const MaskGraph mg(g);
  const std::size_t n = mg.order();
  const auto num = static_cast<std::size_t>(threshold.num());
  const auto den = static_cast<std::size_t>(threshold.den());
  ToughCheck out;
  for (std::size_t s = 1; s + 2 <= n; ++s) {
    // Violation needs s * den < num * c with c <= n - s.
    if (s * den >= num * (n - s)) break;
    const bool finished = for_each_subset(n, s, [&](std::uint64_t cut) {
      const std::size_t c = mg.components_without(cut);
      if (c >= 2 && s * den < num * c) {
        out.tough = false;
        out.witness = VertexSet::from_mask(n, cut);
        return false;
      }
      return true;
    });
    if (!finished) break;
  }
  return out;
}

ToughCheck is_one_over_t_tough(const Graph& g, std::size_t t, const ToughnessOptions& opts) {
  if (t < 1) throw Error(Errc::invalid_input, "t must be >= 1");
  return is_tough(g, Rational(1, static_cast<std::int64_t>(t)), opts);
}

bool meets(const ToughnessResult& result, Rational threshold) {
  return result.infinite || result.value >= threshold;
}

}  // namespace tough
