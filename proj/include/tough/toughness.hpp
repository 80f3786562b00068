#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "tough/graph.hpp"

namespace tough {

// Nonnegative rational num/den in lowest terms, den > 0.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Wide l = static_cast<Wide>(a.num_) * b.den_;
    const Wide r = static_cast<Wide>(b.num_) * a.den_;
    return l <=> r;
  }

 private:
  __extension__ using Wide = __int128;

  std::int64_t num_;
  std::int64_t den_;
};

struct ToughnessOptions {
  std::size_t exhaustive_limit = 20;
};

// Either infinite (complete graph) or value = |witness| / c(G - witness)
// minimal over all cuts leaving >= 2 components. The unreduced pair
// (cut_size, components) is kept alongside the reduced value.
struct ToughnessResult {
  bool infinite = false;
  Rational value;
  std::size_t cut_size = 0;
  std::size_t components = 0;
  VertexSet witness;
};

ToughnessResult toughness_exact(const Graph& g, const ToughnessOptions& opts = {});

struct ToughCheck {
  bool tough = true;
  // On failure, a cut S with |S| < threshold * c(G - S).
  std::optional<VertexSet> witness;
};

// True iff |S| >= threshold * c(G - S) for every S with c(G - S) >= 2.
ToughCheck is_tough(const Graph& g, Rational threshold, const ToughnessOptions& opts = {});

// threshold = 1/t: true iff t|S| >= c(G - S) for every cut; a failing
// witness satisfies c(G - S) >= t|S| + 1.
ToughCheck is_one_over_t_tough(const Graph& g, std::size_t t, const ToughnessOptions& opts = {});

// True iff result >= threshold; infinite toughness meets every threshold.
bool meets(const ToughnessResult& result, Rational threshold);

}  // namespace tough
