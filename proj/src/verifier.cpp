#include "tough/verifier.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <thread>

#include "tough/error.hpp"
#include "tough/graph6.hpp"
#include "tough/thresholds.hpp"

namespace tough {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

json incident(const std::string& type, const std::string& suite, const std::string& check) {
  return json{{"type", type}, {"suite", suite}, {"check", check}};
}

json failure(const std::string& suite, const std::string& check) {
  return incident("failure", suite, check);
}

}  // namespace

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::certified_tough: return "certified-tough";
    case Verdict::exceptional: return "exceptional";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

double round_sig(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

// ---------------------------------------------------------------------------
// Certification

Verdict classify(double lambda1, double eta_value, bool extremal, double epsilon) noexcept {
  if (lambda1 < eta_value - epsilon) return Verdict::inconclusive;
  return extremal ? Verdict::exceptional : Verdict::certified_tough;
}

CertificateReport certify(const Graph& g, std::size_t t, const CertifyOptions& opts) {
  const std::size_t n = g.order();
  if (t < 1) throw Error(Errc::hypothesis, "t must be a positive integer");
  if (n < t + 2) {
    throw Error(Errc::hypothesis, "order " + std::to_string(n) + " is below t+2=" + std::to_string(t + 2));
  }
  if (!is_connected(g)) throw Error(Errc::hypothesis, "graph is not connected");

  CertificateReport report;
  report.graph6 = to_graph6(g);
  report.t = t;
  report.n = n;
  report.epsilon = opts.epsilon;
  report.lambda1 = spectral_radius(g, opts.radius);
  report.eta = eta(t, n).eta;
  report.verdict = classify(report.lambda1, report.eta, is_extremal(g, t), opts.epsilon);
  if (opts.cross_check && n <= opts.toughness.exhaustive_limit) {
    CrossCheck cc;
    cc.toughness = toughness_exact(g, opts.toughness);
    cc.one_over_t_tough = meets(cc.toughness, Rational(1, static_cast<std::int64_t>(t)));
    report.cross_check = std::move(cc);
  }
  return report;
}

json to_json(const ToughnessResult& result) {
  if (result.infinite) return json{{"kind", "infinite"}};
  return json{{"kind", "finite"},
              {"value", result.value.str()},
              {"cut_size", result.cut_size},
              {"components", result.components},
              {"witness", result.witness.members()}};
}

json to_json(const CertificateReport& report) {
  json j{{"graph", report.graph6},
         {"t", report.t},
         {"n", report.n},
         {"lambda1", round_sig(report.lambda1)},
         {"eta", round_sig(report.eta)},
         {"verdict", to_string(report.verdict)},
         {"epsilon", report.epsilon}};
  if (report.cross_check) {
    j["cross_check"] = json{{"toughness", to_json(report.cross_check->toughness)},
                            {"one_over_t_tough", report.cross_check->one_over_t_tough}};
  } else {
    j["cross_check"] = nullptr;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t mask_count(std::size_t n) {
  if (n > kMaxEnumerationOrder) throw Error(Errc::size, "enumeration supports n <= 8");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

namespace {

bool mask_connected(std::size_t n, std::uint64_t mask) {
  std::array<std::uint64_t, kMaxEnumerationOrder> rows{};
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if (mask & (std::uint64_t{1} << k)) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    const int u = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const std::uint64_t fresh = rows[static_cast<std::size_t>(u)] & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen == all;
}

}  // namespace

void for_each_connected(std::size_t n, std::uint64_t first, std::uint64_t last,
                        const GraphVisitor& visit) {
  if (n < 1) throw Error(Errc::invalid_order, "order must be >= 1");
  last = std::min(last, mask_count(n));
  for (std::uint64_t mask = first; mask < last; ++mask) {
    if (mask_connected(n, mask)) visit(mask, from_edge_mask(n, mask));
  }
}

void for_each_connected(std::size_t n, const GraphVisitor& visit) {
  for_each_connected(n, 0, mask_count(n), visit);
}

std::vector<std::uint64_t> labelings(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxEnumerationOrder) throw Error(Errc::size, "labelings supports n <= 8");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto edges = g.edges();
  std::vector<std::uint64_t> out;
  do {
    std::uint64_t mask = 0;
    for (auto [u, v] : edges) {
      std::size_t a = perm[u], b = perm[v];
      if (a > b) std::swap(a, b);
      mask |= std::uint64_t{1} << (b * (b - 1) / 2 + a);
    }
    out.push_back(mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Reports

void write_json_lines(std::ostream& out, const VerificationSummary& summary, bool include_timing) {
  for (const auto& f : summary.failures) out << f.dump() << '\n';
  for (const auto& note : summary.notes) out << note.dump() << '\n';
  json tail{{"type", "summary"},
            {"suite", summary.suite},
            {"scope", summary.scope},
            {"checked", summary.checked},
            {"stats", summary.stats},
            {"failures", summary.failures.size()},
            {"notes", summary.notes.size()},
            {"passed", summary.passed()}};
  if (include_timing) tail["seconds"] = summary.seconds;
  out << tail.dump() << '\n';
}

// ---------------------------------------------------------------------------
// Theorem sweep

namespace {

struct TheoremChunk {
  std::size_t graphs = 0;
  std::size_t not_tough = 0;
  std::size_t exceptional = 0;
  std::size_t certified = 0;
  std::size_t inconclusive = 0;
  // Smallest eta - lambda1 over non-tough, non-extremal graphs.
  double min_gap = INFINITY;
  std::vector<json> failures;
  std::vector<json> notes;
};

void run_theorem_chunk(std::size_t n, std::size_t t, double eta_value,
                       const std::vector<std::uint64_t>& orbit, const TheoremOptions& opts,
                       std::uint64_t first, std::uint64_t last, TheoremChunk& out) {
  for_each_connected(n, first, last, [&](std::uint64_t mask, const Graph& g) {
    ++out.graphs;
    const bool tough = is_one_over_t_tough(g, t).tough;
    const bool extremal = is_extremal(g, t);
    const bool in_orbit = std::binary_search(orbit.begin(), orbit.end(), mask);
    const double lambda1 = spectral_radius(g, opts.radius);
    const Verdict verdict = classify(lambda1, eta_value, extremal, opts.eps_eq);

    if (!tough) ++out.not_tough;
    switch (verdict) {
      case Verdict::exceptional: ++out.exceptional; break;
      case Verdict::certified_tough: ++out.certified; break;
      case Verdict::inconclusive: ++out.inconclusive; break;
    }

    auto record = [&](json j) {
      j["graph"] = to_graph6(g);
      j["mask"] = mask;
      j["n"] = n;
      j["t"] = t;
      j["lambda1"] = round_sig(lambda1);
      j["eta"] = round_sig(eta_value);
      return j;
    };

    if (extremal != in_orbit) {
      out.failures.push_back(record(failure("theorem", "extremal_recognition")));
    }
    if (extremal) {
      if (tough) out.failures.push_back(record(failure("theorem", "exceptional_is_tough")));
      if (std::abs(lambda1 - eta_value) > opts.eps_eq) {
        out.failures.push_back(record(failure("theorem", "extremal_sharpness")));
      }
      if (verdict != Verdict::exceptional) {
        out.failures.push_back(record(failure("theorem", "exceptional_verdict")));
      }
    } else if (!tough) {
      out.min_gap = std::min(out.min_gap, eta_value - lambda1);
      if (lambda1 > eta_value + opts.eps_eq) {
        out.failures.push_back(record(failure("theorem", "counterexample")));
      } else if (lambda1 >= eta_value - opts.eps_strict) {
        out.failures.push_back(record(failure("theorem", "tolerance_incident")));
      }
    } else if (std::abs(lambda1 - eta_value) <= opts.eps_eq) {
      out.notes.push_back(record(incident("note", "theorem", "tough_at_threshold")));
    }
  });
}

}  // namespace

VerificationSummary verify_theorem(std::size_t n, std::size_t t, const TheoremOptions& opts) {
  const auto start = Clock::now();
  if (t < 1) throw Error(Errc::domain, "t must be >= 1");
  if (n < t + 2) throw Error(Errc::domain, "verify_theorem needs n >= t + 2");
  const std::size_t ceiling = opts.allow_order_8 ? 8 : 7;
  if (n > ceiling) {
    throw Error(Errc::size, "verify_theorem order " + std::to_string(n) + " above ceiling " +
                                std::to_string(ceiling) + (opts.allow_order_8 ? "" : " (order 8 needs an explicit opt-in)"));
  }

  const double eta_value = eta(t, n).eta;
  const auto orbit = labelings(build_extremal(t, n));
  const std::uint64_t total = mask_count(n);
  const unsigned workers = std::max(1u, opts.workers);

  std::vector<TheoremChunk> chunks(workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t first = total * w / workers;
    const std::uint64_t last = total * (w + 1) / workers;
    if (workers == 1) {
      run_theorem_chunk(n, t, eta_value, orbit, opts, first, last, chunks[w]);
    } else {
      threads.emplace_back([&, w, first, last] {
        run_theorem_chunk(n, t, eta_value, orbit, opts, first, last, chunks[w]);
      });
    }
  }
  for (auto& th : threads) th.join();

  VerificationSummary summary;
  summary.suite = "theorem";
  summary.scope = json{{"n", n}, {"t", t}, {"eps_eq", opts.eps_eq}, {"eps_strict", opts.eps_strict}};
  TheoremChunk total_chunk;
  for (auto& c : chunks) {
    total_chunk.graphs += c.graphs;
    total_chunk.not_tough += c.not_tough;
    total_chunk.exceptional += c.exceptional;
    total_chunk.certified += c.certified;
    total_chunk.inconclusive += c.inconclusive;
    total_chunk.min_gap = std::min(total_chunk.min_gap, c.min_gap);
    for (auto& f : c.failures) summary.failures.push_back(std::move(f));
    for (auto& note : c.notes) summary.notes.push_back(std::move(note));
  }
  if (total_chunk.exceptional != orbit.size()) {
    json f = failure("theorem", "exceptional_count");
    f["expected"] = orbit.size();
    f["found"] = total_chunk.exceptional;
    summary.failures.push_back(f);
  }
  summary.checked = total_chunk.graphs;
  summary.stats = json{{"eta", round_sig(eta_value)},
                       {"connected_graphs", total_chunk.graphs},
                       {"not_tough", total_chunk.not_tough},
                       {"extremal_labelings", orbit.size()},
                       {"exceptional", total_chunk.exceptional},
                       {"certified_tough", total_chunk.certified},
                       {"inconclusive", total_chunk.inconclusive}};
  if (std::isfinite(total_chunk.min_gap)) {
    summary.stats["min_gap_non_tough"] = round_sig(total_chunk.min_gap);
  } else {
    summary.stats["min_gap_non_tough"] = nullptr;
  }
  summary.seconds = seconds_since(start);
  return summary;
}

// ---------------------------------------------------------------------------
// Join-of-cliques maximiser

namespace {

// Nonincreasing compositions of total into exactly parts positive terms.
void compositions(std::size_t total, std::size_t parts, std::size_t cap,
                  std::vector<std::size_t>& prefix,
                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (parts == 0) {
    if (total == 0) visit(prefix);
    return;
  }
  if (total < parts) return;
  const std::size_t hi = std::min(cap, total - (parts - 1));
  for (std::size_t x = hi; x >= 1; --x) {
    if (x * parts < total) break;
    prefix.push_back(x);
    compositions(total - x, parts - 1, x, prefix, visit);
    prefix.pop_back();
  }
}

// Sum of |a_i x^i|: the rounding scale of evaluating p at x.
double magnitude(const Cubic& p, double x) {
  double s = 0.0, power = 1.0;
  const auto& c = p.coefficients();
  for (std::size_t i = 4; i-- > 0;) {
    s += std::abs(c[i]) * power;
    power *= std::abs(x);
  }
  return s;
}

json spec_json(const JoinCliqueSpec& spec) { return json{{"s", spec.s}, {"parts", spec.parts}}; }

void join_clique_case(std::size_t n, std::size_t s, std::size_t c, double eps,
                      VerificationSummary& summary, std::size_t& equalities) {
  const JoinCliqueSpec best = maximizer_spec(n, s, c);
  const double best_radius = spectral_radius(build_join_cliques(best));
  std::vector<std::size_t> prefix;
  compositions(n - s, c, n - s, prefix, [&](const std::vector<std::size_t>& parts) {
    ++summary.checked;
    const JoinCliqueSpec spec{s, parts};
    const double radius = spectral_radius(build_join_cliques(spec));
    const bool shape = spec == best;
    const bool equal = std::abs(radius - best_radius) <= eps;
    if (equal) ++equalities;
    auto record = [&](const std::string& check) {
      json f = failure("join_clique_maximizer", check);
      f["n"] = n;
      f["spec"] = spec_json(spec);
      f["lambda1"] = round_sig(radius);
      f["maximizer_lambda1"] = round_sig(best_radius);
      summary.failures.push_back(f);
    };
    if (radius > best_radius + eps) record("inequality");
    if (equal != shape) record("equality_shape");
  });
}

}  // namespace

VerificationSummary verify_join_clique_maximizer(std::size_t n, std::size_t s, std::size_t c,
                                                 double eps) {
  const auto start = Clock::now();
  if (s < 1 || c < 1 || n < s + c) throw Error(Errc::domain, "need s, c >= 1 and n >= s + c");
  VerificationSummary summary;
  summary.suite = "join_clique_maximizer";
  summary.scope = json{{"n", n}, {"s", s}, {"c", c}, {"eps", eps}};
  std::size_t equalities = 0;
  join_clique_case(n, s, c, eps, summary, equalities);
  summary.stats = json{{"compositions", summary.checked}, {"equalities", equalities},
                       {"maximizer", spec_json(maximizer_spec(n, s, c))}};
  summary.seconds = seconds_since(start);
  return summary;
}

VerificationSummary verify_join_clique_sweep(std::size_t n_max, std::size_t s_max,
                                             std::size_t c_max, double eps) {
  const auto start = Clock::now();
  VerificationSummary summary;
  summary.suite = "join_clique_maximizer";
  summary.scope = json{{"n_max", n_max}, {"s_max", s_max}, {"c_max", c_max}, {"eps", eps}};
  std::size_t equalities = 0, cases = 0;
  for (std::size_t n = 2; n <= n_max; ++n)
    for (std::size_t s = 1; s <= s_max; ++s)
      for (std::size_t c = 1; c <= c_max; ++c) {
        if (n < s + c) continue;
        ++cases;
        join_clique_case(n, s, c, eps, summary, equalities);
      }
  // Exactly one equality (the maximiser itself) per case.
  if (equalities != cases) {
    json f = failure("join_clique_maximizer", "equality_count");
    f["expected"] = cases;
    f["found"] = equalities;
    summary.failures.push_back(f);
  }
  summary.stats = json{{"cases", cases}, {"compositions", summary.checked}, {"equalities", equalities}};
  summary.seconds = seconds_since(start);
  return summary;
}

// ---------------------------------------------------------------------------
// Proof identities

VerificationSummary verify_proof_identities(const IdentityGrid& grid) {
  const auto start = Clock::now();
  VerificationSummary summary;
  summary.suite = "proof_identities";
  summary.scope = json{{"s_max", grid.s_max}, {"t_max", grid.t_max}, {"n_max", grid.n_max},
                       {"samples", grid.samples}, {"seed", grid.seed},
                       {"eps_eq", grid.eps_eq}, {"eps_strict", grid.eps_strict}};
  std::mt19937_64 rng(grid.seed);
  std::size_t points = 0, factor_checks = 0, strict_cases = 0, equal_cases = 0;
  double min_margin = INFINITY;

  for (std::size_t s = 1; s <= grid.s_max; ++s) {
    for (std::size_t t = 1; t <= grid.t_max; ++t) {
      for (std::size_t n = t * s + s + 1; n <= grid.n_max; ++n) {
        ++points;
        const double sd = static_cast<double>(s), td = static_cast<double>(t);
        const Cubic big_phi = phi(t, n);
        const Cubic b1 = phi_b1(s, t, n);
        const double eta_value = eta(t, n).eta;
        const double eta1 = largest_real_root(b1).root;
        const double eta2 = eta2_closed_form(s, t);
        const double lambda_g2 = spectral_radius(build_join_cliques(g2_spec(s, t, n)));

        auto record = [&](const std::string& check, json extra = json::object()) {
          json f = failure("proof_identities", check);
          f["s"] = s;
          f["t"] = t;
          f["n"] = n;
          f["eta1"] = round_sig(eta1);
          f["eta"] = round_sig(eta_value);
          f.update(extra);
          summary.failures.push_back(f);
        };

        // Quotient root is the graph's radius.
        if (std::abs(eta1 - lambda_g2) > grid.eps_eq) {
          record("eta1_is_lambda1", {{"lambda1", round_sig(lambda_g2)}});
        }
        // G2 contains K_s v (ts+1) K_1.
        if (eta1 < eta2 - grid.eps_eq) record("eta1_above_eta2", {{"eta2", round_sig(eta2)}});

        // phi - phi_b1 = (s-1) h1, at eta1 and at random points.
        std::uniform_real_distribution<double> xs(-static_cast<double>(n), static_cast<double>(n));
        for (std::size_t k = 0; k <= grid.samples; ++k) {
          const double x = k == 0 ? eta1 : xs(rng);
          const double lhs = big_phi(x) - b1(x);
          const double rhs = (sd - 1.0) * h1(s, t, n, x);
          const double scale = std::max(1.0, magnitude(big_phi, x) + magnitude(b1, x));
          ++factor_checks;
          if (std::abs(lhs - rhs) > 1e-13 * scale) {
            record("factorisation", {{"x", x}, {"lhs", lhs}, {"rhs", rhs}});
          }
        }

        if (s == 1) {
          ++equal_cases;
          if (!(big_phi == b1)) record("s1_same_polynomial");
          if (std::abs(eta1 - eta_value) > grid.eps_eq) record("s1_equality");
          continue;
        }

        ++strict_cases;
        const double value_at_eta1 = big_phi(eta1);
        if (!(value_at_eta1 < 0.0)) record("phi_negative", {{"phi_eta1", value_at_eta1}});
        if (!(eta1 < eta_value - grid.eps_strict)) record("eta1_below_eta");
        min_margin = std::min(min_margin, eta_value - eta1);

        // h1 <= f1 once n >= ts+s+1, and f1 decreases past s/2.
        const double h = h1(s, t, n, eta1);
        const double f_eta1 = f1(s, t, eta1);
        const double f_scale = std::max(1.0, std::abs(f_eta1));
        if (h > f_eta1 + 1e-12 * f_scale) record("h1_below_f1", {{"h1", h}, {"f1", f_eta1}});
        if (!(eta2 >= sd / 2.0)) record("eta2_past_axis");
        const double f_eta2 = f1(s, t, eta2);
        if (f_eta1 > f_eta2 + 1e-12 * f_scale) record("f1_monotone", {{"f1_eta1", f_eta1}, {"f1_eta2", f_eta2}});
        const double root_term = std::sqrt((4.0 * td + 1.0) * sd * sd + 2.0 * sd + 1.0);
        const double f_eta2_closed = td / 2.0 * (-2.0 * td * sd * sd + root_term - sd + 2.0 * td + 1.0);
        if (std::abs(f_eta2 - f_eta2_closed) > 1e-12 * std::max(1.0, std::abs(f_eta2))) {
          record("f1_at_eta2", {{"f1_eta2", f_eta2}, {"closed", f_eta2_closed}});
        }

        // Integer steps of the bound chain, exactly.
        const long long si = static_cast<long long>(s), ti = static_cast<long long>(t);
        const long long radicand = (4 * ti + 1) * si * si + 2 * si + 1;
        if (radicand - (ti + 2) * (ti + 2) * si * si != -(ti * ti + 3) * si * si + 2 * si + 1 ||
            radicand >= (ti + 2) * (ti + 2) * si * si) {
          record("radicand_bound");
        }
        if (!(ti + 1 < 8 * ti)) record("axis_ratio");  // (t+1)/(4t) < 2
        const long long bracket = -2 * ti * si * si + (ti + 1) * si + 2 * ti + 1;
        if (bracket > -4 * ti + 3 || -4 * ti + 3 >= 0) record("quadratic_bound", {{"bracket", bracket}});
        if (!(f_eta1 < 0.0)) record("f1_negative", {{"f1_eta1", f_eta1}});
      }
    }
  }
  summary.checked = points;
  summary.stats = json{{"grid_points", points}, {"factorisation_checks", factor_checks},
                       {"s1_cases", equal_cases}, {"strict_cases", strict_cases}};
  summary.stats["min_margin_eta_minus_eta1"] = std::isfinite(min_margin) ? json(round_sig(min_margin)) : json(nullptr);
  summary.seconds = seconds_since(start);
  return summary;
}

// ---------------------------------------------------------------------------
// Quotient spectra

VerificationSummary verify_quotient_spectrum(std::size_t s_max, std::size_t t_max,
                                             std::size_t n_max, double eps) {
  const auto start = Clock::now();
  VerificationSummary summary;
  summary.suite = "quotient_spectrum";
  summary.scope = json{{"s_max", s_max}, {"t_max", t_max}, {"n_max", n_max}, {"eps", eps}};
  double worst = 0.0;
  for (std::size_t s = 1; s <= s_max; ++s) {
    for (std::size_t t = 1; t <= t_max; ++t) {
      for (std::size_t n = t * s + s + 1; n <= n_max; ++n) {
        ++summary.checked;
        const std::size_t clique = n - t * s - s;
        const Graph g = build_join_cliques(g2_spec(s, t, n));
        std::vector<std::vector<std::size_t>> blocks(3);
        for (std::size_t v = 0; v < n; ++v) blocks[v < s ? 0 : (v < s + clique ? 1 : 2)].push_back(v);
        const Partition p(n, blocks);
        const SymMatrix a = adjacency(g);

        auto record = [&](const std::string& check, json extra = json::object()) {
          json f = failure("quotient_spectrum", check);
          f["s"] = s;
          f["t"] = t;
          f["n"] = n;
          f.update(extra);
          summary.failures.push_back(f);
        };

        if (!is_equitable(a, p)) {
          record("equitable");
          continue;
        }
        const QuotientMatrix q = quotient_matrix(a, p);
        const double sd = static_cast<double>(s), cd = static_cast<double>(clique),
                     ts = static_cast<double>(t * s);
        const std::array<double, 9> expected{sd - 1, cd, ts, sd, cd - 1, 0, sd, 0, 0};
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 3; ++j)
            if (q(i, j) != expected[i * 3 + j]) record("quotient_entries");

        const auto qvals = quotient_eigenvalues(q);
        const Spectrum spec = full_spectrum(a);
        for (double mu : qvals) {
          double nearest = INFINITY;
          for (double lam : spec.values) nearest = std::min(nearest, std::abs(lam - mu));
          if (nearest > eps) record("eigenvalue_embedding", {{"mu", mu}, {"distance", nearest}});
        }
        const double lambda1 = spectral_radius(g);
        const double gap = std::abs(qvals.front() - lambda1);
        worst = std::max(worst, gap);
        if (gap > eps) record("radius", {{"lambda1", lambda1}, {"quotient_lambda1", qvals.front()}});
        const double eta1 = largest_real_root(phi_b1(s, t, n)).root;
        if (std::abs(eta1 - lambda1) > eps) record("characteristic_root", {{"eta1", eta1}});
      }
    }
  }
  summary.stats = json{{"families", summary.checked}, {"max_radius_gap", worst}};
  summary.seconds = seconds_since(start);
  return summary;
}

VerificationSummary verify_closed_form_radius(std::size_t s_max, std::size_t t_max, double eps) {
  const auto start = Clock::now();
  VerificationSummary summary;
  summary.suite = "closed_form_radius";
  summary.scope = json{{"s_max", s_max}, {"t_max", t_max}, {"eps", eps}};
  double worst = 0.0;
  for (std::size_t s = 1; s <= s_max; ++s) {
    for (std::size_t t = 1; t <= t_max; ++t) {
      ++summary.checked;
      const double closed = eta2_closed_form(s, t);
      const JoinCliqueSpec spec{s, std::vector<std::size_t>(t * s + 1, 1)};
      const Graph g = build_join_cliques(spec);
      const double lambda1 = spectral_radius(g);
      const double quad_root = largest_real_root(phi_b2(s, t)).root;
      std::vector<std::vector<std::size_t>> blocks(2);
      for (std::size_t v = 0; v < g.order(); ++v) blocks[v < s ? 0 : 1].push_back(v);
      const double quotient = quotient_radius_check(g, Partition(g.order(), blocks)).quotient;
      const double gap = std::max({std::abs(closed - lambda1), std::abs(quad_root - closed),
                                   std::abs(quotient - closed)});
      worst = std::max(worst, std::abs(closed - lambda1));
      if (gap > eps) {
        json f = failure("closed_form_radius", "mismatch");
        f.update(json{{"s", s}, {"t", t}, {"closed", closed}, {"lambda1", lambda1},
                      {"quadratic_root", quad_root}, {"quotient", quotient}});
        summary.failures.push_back(f);
      }
      const double residual = closed * closed - (s - 1.0) * closed - static_cast<double>(s) * (t * s + 1.0);
      if (std::abs(residual) > 1e-12 * std::max(1.0, closed * closed)) {
        json f = failure("closed_form_radius", "quadratic_residual");
        f.update(json{{"s", s}, {"t", t}, {"residual", residual}});
        summary.failures.push_back(f);
      }
    }
  }
  summary.stats = json{{"pairs", summary.checked}, {"max_gap", worst}};
  summary.seconds = seconds_since(start);
  return summary;
}

// ---------------------------------------------------------------------------
// Random suites

namespace {

Graph random_connected(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  Graph g(n);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    g.add_edge(order[i], order[pick(rng)]);
  }
  const double density = unit(rng);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (unit(rng) < density) g.add_edge(u, v);
  return g;
}

}  // namespace

VerificationSummary verify_subgraph_monotonicity(std::size_t pairs, std::size_t n_max,
                                                 std::uint64_t seed, double margin) {
  const auto start = Clock::now();
  if (n_max < 2) throw Error(Errc::domain, "subgraph suite needs n_max >= 2");
  VerificationSummary summary;
  summary.suite = "subgraph_monotonicity";
  summary.scope = json{{"pairs", pairs}, {"n_max", n_max}, {"seed", seed}, {"margin", margin}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> order(2, n_max);
  double min_gap = INFINITY;
  std::size_t vertex_deletions = 0;

  while (summary.checked < pairs) {
    const Graph g = random_connected(rng, order(rng));
    const std::size_t n = g.order();
    // Keep a random nonempty vertex subset, then drop random edges.
    VertexSet keep = VertexSet::full(n);
    if (unit(rng) < 0.5) {
      const double drop = unit(rng) * 0.5;
      for (std::size_t v = 0; v < n; ++v)
        if (keep.size() > 1 && unit(rng) < drop) keep.erase(v);
    }
    Graph h = induced_subgraph(g, keep);
    const double edge_drop = unit(rng) * 0.5;
    for (auto [u, v] : h.edges())
      if (unit(rng) < edge_drop) h.remove_edge(u, v);
    const bool proper = h.order() < n || h.edge_count() < g.edge_count();
    if (!proper || !is_connected(h)) continue;
    if (h.order() < n) ++vertex_deletions;

    ++summary.checked;
    const double gap = spectral_radius(g) - spectral_radius(h);
    min_gap = std::min(min_gap, gap);
    if (!(gap > margin)) {
      json f = failure("subgraph_monotonicity", "strict_increase");
      f.update(json{{"graph", to_graph6(g)}, {"subgraph", to_graph6(h)}, {"gap", gap}});
      summary.failures.push_back(f);
    }
  }
  summary.stats = json{{"pairs", summary.checked}, {"with_vertex_deletion", vertex_deletions},
                       {"min_gap", std::isfinite(min_gap) ? json(round_sig(min_gap)) : json(nullptr)}};
  summary.seconds = seconds_since(start);
  return summary;
}

VerificationSummary verify_spanning_chain(std::size_t samples, std::size_t n_max,
                                          std::size_t t_max, std::uint64_t seed, double eps) {
  const auto start = Clock::now();
  if (n_max < 3 || t_max < 1) throw Error(Errc::domain, "spanning chain needs n_max >= 3, t_max >= 1");
  VerificationSummary summary;
  summary.suite = "spanning_chain";
  summary.scope = json{{"samples", samples}, {"n_max", n_max}, {"t_max", t_max}, {"seed", seed}, {"eps", eps}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> order(3, n_max);
  std::uniform_int_distribution<std::size_t> pick_t(1, t_max);
  std::size_t attempts = 0, equal_first = 0, equal_second = 0;

  while (summary.checked < samples) {
    if (++attempts > samples * 1000) throw Error(Errc::domain, "could not sample enough non-tough graphs");
    const Graph g = random_connected(rng, order(rng));
    const std::size_t t = pick_t(rng);
    const std::size_t n = g.order();
    if (n < t + 2) continue;
    const ToughCheck check = is_one_over_t_tough(g, t);
    if (check.tough) continue;
    ++summary.checked;

    const VertexSet& cut = *check.witness;
    const std::size_t s = cut.size();
    // Component sizes of g - S, merged down to ts + 1 parts.
    std::vector<std::size_t> label(n, n);
    std::vector<std::size_t> sizes;
    for (std::size_t v = 0; v < n; ++v) {
      if (cut.contains(v) || label[v] != n) continue;
      const std::size_t id = sizes.size();
      sizes.push_back(0);
      std::vector<std::size_t> stack{v};
      label[v] = id;
      while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        ++sizes[id];
        for (std::size_t w : g.neighbors(u))
          if (!cut.contains(w) && label[w] == n) {
            label[w] = id;
            stack.push_back(w);
          }
      }
    }
    // Merge components (by id) so there are exactly ts + 1 groups.
    const std::size_t target = t * s + 1;
    std::vector<std::size_t> group(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) group[i] = std::min(i, target - 1);
    std::vector<std::size_t> parts(target, 0);
    for (std::size_t i = 0; i < sizes.size(); ++i) parts[group[i]] += sizes[i];
    std::sort(parts.begin(), parts.end(), std::greater<>());

    // G1 on g's own labels: S universal, each group a clique.
    Graph g1 = g;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) {
        const bool hub = cut.contains(u) || cut.contains(v);
        if (hub || group[label[u]] == group[label[v]]) g1.add_edge(u, v);
      }
    const JoinCliqueSpec spec{s, parts};
    const Graph built = build_join_cliques(spec);

    const double lam_g = spectral_radius(g);
    const double lam_g1 = spectral_radius(g1);
    const double lam_built = spectral_radius(built);
    const double lam_g2 = spectral_radius(build_join_cliques(g2_spec(s, t, n)));

    auto record = [&](const std::string& check_name) {
      json f = failure("spanning_chain", check_name);
      f.update(json{{"graph", to_graph6(g)}, {"t", t}, {"witness", cut.members()},
                    {"parts", parts}, {"lambda_g", lam_g}, {"lambda_g1", lam_g1},
                    {"lambda_g2", lam_g2}});
      summary.failures.push_back(f);
    };
    if (g1.edge_count() != built.edge_count() || std::abs(lam_g1 - lam_built) > eps) record("g1_shape");
    if (g.edge_count() == g1.edge_count()) {
      ++equal_first;
      if (std::abs(lam_g - lam_g1) > eps) record("first_equality");
    } else if (!(lam_g < lam_g1 - eps)) {
      record("first_strict");
    }
    if (spec == g2_spec(s, t, n)) {
      ++equal_second;
      if (std::abs(lam_g1 - lam_g2) > eps) record("second_equality");
    } else if (!(lam_g1 < lam_g2 - eps)) {
      record("second_strict");
    }
  }
  summary.stats = json{{"samples", summary.checked}, {"attempts", attempts},
                       {"g_equals_g1", equal_first}, {"g1_is_maximizer", equal_second}};
  summary.seconds = seconds_since(start);
  return summary;
}

}  // namespace tough
