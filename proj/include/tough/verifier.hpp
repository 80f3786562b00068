#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tough/graph.hpp"
#include "tough/spectral.hpp"
#include "tough/toughness.hpp"

namespace tough {

enum class Verdict { certified_tough, exceptional, inconclusive };
const char* to_string(Verdict v) noexcept;

struct CertifyOptions {
  double epsilon = 1e-9;
  bool cross_check = true;
  ToughnessOptions toughness;
  RadiusOptions radius;
};

struct CrossCheck {
  ToughnessResult toughness;
  bool one_over_t_tough = false;
};

struct CertificateReport {
  std::string graph6;
  std::size_t t = 0;
  std::size_t n = 0;
  double lambda1 = 0.0;
  double eta = 0.0;
  double epsilon = 0.0;
  Verdict verdict = Verdict::inconclusive;
  // Present when requested and n is within the exhaustive limit.
  std::optional<CrossCheck> cross_check;
};

// Applies the spectral sufficient condition to (g, t):
//   lambda1 <  eta - eps             -> inconclusive
//   lambda1 >= eta - eps, extremal   -> exceptional
//   lambda1 >= eta - eps, otherwise  -> certified tough
// Throws Errc::hypothesis for disconnected g or n < t + 2.
CertificateReport certify(const Graph& g, std::size_t t, const CertifyOptions& opts = {});

Verdict classify(double lambda1, double eta, bool extremal, double epsilon) noexcept;

nlohmann::json to_json(const CertificateReport& report);
nlohmann::json to_json(const ToughnessResult& result);

// 12 significant digits, so reports diff cleanly across runs.
double round_sig(double x);

// ---------------------------------------------------------------------------
// Labeled enumeration

inline constexpr std::size_t kMaxEnumerationOrder = 8;

// Number of edge masks on n vertices, 2^(n(n-1)/2).
std::uint64_t mask_count(std::size_t n);

using GraphVisitor = std::function<void(std::uint64_t mask, const Graph& g)>;

// Visits every connected labeled graph whose edge mask lies in [first, last),
// in increasing mask order. Throws Errc::size for n > 8.
void for_each_connected(std::size_t n, std::uint64_t first, std::uint64_t last,
                        const GraphVisitor& visit);
void for_each_connected(std::size_t n, const GraphVisitor& visit);

// Edge masks of every relabelling of g, sorted and deduplicated. Brute force
// over all n! permutations; n <= 8.
std::vector<std::uint64_t> labelings(const Graph& g);

// ---------------------------------------------------------------------------
// Verification suites

struct VerificationSummary {
  std::string suite;
  nlohmann::json scope = nlohmann::json::object();
  std::size_t checked = 0;
  nlohmann::json stats = nlohmann::json::object();
  std::vector<nlohmann::json> failures;
  // Logged observations that are not failures.
  std::vector<nlohmann::json> notes;
  double seconds = 0.0;

  bool passed() const noexcept { return failures.empty(); }
};

// One JSON object per failure or note, then a trailing summary object.
// Timing is left out unless asked for, keeping reports byte-identical.
void write_json_lines(std::ostream& out, const VerificationSummary& summary,
                      bool include_timing = false);

struct TheoremOptions {
  double eps_eq = 1e-9;
  double eps_strict = 1e-9;
  unsigned workers = 1;
  bool allow_order_8 = false;
  RadiusOptions radius;
};

// Exhaustive check over all connected labeled graphs of order n:
// non-tough non-extremal graphs must have lambda1 < eta - eps_strict, the
// extremal labelings must attain eta and be non-tough, and structural
// recognition must match the brute-force labeling orbit. Requires
// t + 2 <= n <= 7 (8 with allow_order_8).
VerificationSummary verify_theorem(std::size_t n, std::size_t t, const TheoremOptions& opts = {});

// All nonincreasing c-part compositions of n - s: lambda1 never exceeds the
// maximiser's, with equality exactly at the maximiser shape.
VerificationSummary verify_join_clique_maximizer(std::size_t n, std::size_t s, std::size_t c,
                                                 double eps = 1e-9);
// Every feasible (n, s, c) with n <= n_max, s <= s_max, c <= c_max.
VerificationSummary verify_join_clique_sweep(std::size_t n_max = 12, std::size_t s_max = 3,
                                             std::size_t c_max = 4, double eps = 1e-9);

struct IdentityGrid {
  std::size_t s_max = 6;
  std::size_t t_max = 5;
  std::size_t n_max = 40;
  std::size_t samples = 100;  // random x per grid point for the factorisation
  std::uint64_t seed = 20240517;
  double eps_eq = 1e-9;
  double eps_strict = 1e-9;
};

// The threshold proof's numeric chain for every (s, t, n) in the grid with
// n >= ts + s + 1.
VerificationSummary verify_proof_identities(const IdentityGrid& grid = {});

// Three-block partition of K_s v (K_{n-ts-s} u ts K_1): equitable, quotient
// matches the closed form, its eigenvalues sit in the full spectrum and its
// radius matches lambda1.
VerificationSummary verify_quotient_spectrum(std::size_t s_max = 4, std::size_t t_max = 4,
                                             std::size_t n_max = 24, double eps = 1e-8);

// lambda1(K_s v (ts+1) K_1) against the closed form and the two-block
// quotient polynomial.
VerificationSummary verify_closed_form_radius(std::size_t s_max = 6, std::size_t t_max = 6,
                                              double eps = 1e-9);

// Random connected graphs against random proper connected subgraphs:
// lambda1(G) - lambda1(H) > margin.
VerificationSummary verify_subgraph_monotonicity(std::size_t pairs = 1000, std::size_t n_max = 12,
                                                 std::uint64_t seed = 7, double margin = 1e-10);

// Random non-1/t-tough graphs G with witness S: lambda1(G) <= lambda1(G1) <=
// lambda1(G2), G1 the join-of-cliques supergraph on the witness and G2 its
// maximiser, each equality only when the graphs coincide.
VerificationSummary verify_spanning_chain(std::size_t samples = 300, std::size_t n_max = 10,
                                          std::size_t t_max = 3, std::uint64_t seed = 11,
                                          double eps = 1e-9);

}  // namespace tough
