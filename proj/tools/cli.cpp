#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tough/error.hpp"
#include "tough/graph.hpp"
#include "tough/graph6.hpp"
#include "tough/spectral.hpp"
#include "tough/thresholds.hpp"
#include "tough/toughness.hpp"
#include "tough/verifier.hpp"

namespace tough::cli {

namespace {

using nlohmann::json;

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct GraphSource {
  std::string graph6;
  std::string file;
};

void add_graph_source(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("graph", src.graph6, "graph6 string, or - to read lines from stdin");
  cmd->add_option("--file", src.file, "file with one graph6 string per line");
}

std::vector<Graph> load_graphs(const GraphSource& src, std::istream& in) {
  const bool positional = !src.graph6.empty();
  const bool file = !src.file.empty();
  if (positional == file) {
    throw CLI::ValidationError("graph", "give exactly one of a graph6 argument or --file");
  }
  if (file) {
    std::ifstream f(src.file);
    if (!f) throw CLI::ValidationError("--file", "cannot open " + src.file);
    return read_graph6_stream(f);
  }
  if (src.graph6 == "-") return read_graph6_stream(in);
  return {parse_graph6(src.graph6)};
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"plain", "json"}));
}

json toughness_json(const ToughnessResult& r) { return to_json(r); }

std::string toughness_plain(const ToughnessResult& r) {
  if (r.infinite) return "infinite";
  std::string s = r.value.str() + " witness";
  for (std::size_t v : r.witness.members()) s += " " + std::to_string(v);
  return s;
}

int report_summaries(const std::vector<VerificationSummary>& summaries, const std::string& output,
                     bool timing, std::ostream& out) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!output.empty() && output != "-") {
    file.open(output);
    if (!file) throw CLI::ValidationError("--output", "cannot open " + output);
    sink = &file;
  }
  bool ok = true;
  for (const auto& s : summaries) {
    write_json_lines(*sink, s, timing);
    ok = ok && s.passed();
  }
  return ok ? kOk : kVerificationFailed;
}

int map_error(const Error& e, std::ostream& err) {
  err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
  switch (e.code()) {
    case Errc::parse: return kBadGraph6;
    case Errc::hypothesis:
    case Errc::domain:
    case Errc::invalid_input:
    case Errc::invalid_order: return kHypothesis;
    default: return kOtherError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral radius thresholds for 1/t-toughness"};
  app.name("spectough");
  app.require_subcommand(1);

  std::size_t t = 0, n = 0;
  std::string format = "plain";
  GraphSource source;

  auto* threshold = app.add_subcommand("threshold", "print eta(t,n) and the cubic coefficients");
  threshold->add_option("--t", t, "t >= 1")->required();
  threshold->add_option("--n", n, "order n >= t+2")->required();
  add_format(threshold, format);

  auto* extremal = app.add_subcommand("extremal", "print K1 v (K_{n-t-1} u tK1) with lambda1 and toughness");
  extremal->add_option("--t", t, "t >= 1")->required();
  extremal->add_option("--n", n, "order n >= t+2")->required();
  add_format(extremal, format);

  double tol = 1e-12;
  auto* radius = app.add_subcommand("spectral-radius", "print lambda1 of a graph");
  add_graph_source(radius, source);
  radius->add_option("--tol", tol, "relative residual tolerance")->check(CLI::PositiveNumber);
  add_format(radius, format);

  std::size_t limit = 20;
  auto* toughness = app.add_subcommand("toughness", "print exact toughness and a witness cut");
  add_graph_source(toughness, source);
  toughness->add_option("--limit", limit, "largest order for exhaustive search");
  add_format(toughness, format);

  double eps = 1e-9;
  bool no_cross_check = false;
  auto* certify_cmd = app.add_subcommand("certify", "apply the spectral toughness certificate");
  certify_cmd->add_option("--t", t, "t >= 1")->required();
  add_graph_source(certify_cmd, source);
  certify_cmd->add_option("--eps", eps, "comparison tolerance")->check(CLI::PositiveNumber);
  certify_cmd->add_flag("--no-cross-check", no_cross_check, "skip the exhaustive toughness check");
  certify_cmd->add_option("--limit", limit, "largest order for the exhaustive cross-check");
  std::string certify_format = "json";
  add_format(certify_cmd, certify_format);

  std::size_t n_max = 0, t_max = 0;
  unsigned workers = 1;
  std::string output;
  bool timing = false, order8 = false;
  double eps_eq = 1e-9, eps_strict = 1e-9;
  auto* vt = app.add_subcommand("verify-theorem", "exhaustive check over connected labeled graphs");
  vt->add_option("--t", t, "t >= 1 (first t with --t-max)")->required();
  vt->add_option("--n", n, "order (first order with --n-max)")->required();
  vt->add_option("--n-max", n_max, "last order of the sweep");
  vt->add_option("--t-max", t_max, "last t of the sweep");
  vt->add_option("--workers", workers, "worker threads")->check(CLI::Range(1u, 256u));
  vt->add_option("--eps-eq", eps_eq)->check(CLI::PositiveNumber);
  vt->add_option("--eps-strict", eps_strict)->check(CLI::PositiveNumber);
  vt->add_flag("--allow-order-8", order8, "permit the order-8 sweep (2^28 masks)");
  vt->add_option("--output", output, "JSON-lines report path (default stdout)");
  vt->add_flag("--timing", timing, "include wall time in summaries");

  std::string suite = "all";
  IdentityGrid grid;
  std::size_t pairs = 1000, samples = 300;
  std::uint64_t seed = 7;
  auto* vl = app.add_subcommand("verify-lemmas", "spectral lemma and proof-identity suites");
  vl->add_option("--suite", suite)->check(CLI::IsMember(
      {"all", "subgraph", "quotient", "closed-form", "join-cliques", "identities", "spanning"}));
  vl->add_option("--s-max", grid.s_max, "identity grid: largest s");
  vl->add_option("--t-max", grid.t_max, "identity grid: largest t");
  vl->add_option("--n-max", grid.n_max, "identity grid: largest n");
  vl->add_option("--pairs", pairs, "random pairs for the subgraph suite");
  vl->add_option("--samples", samples, "random graphs for the spanning-chain suite");
  vl->add_option("--seed", seed, "seed for the random suites");
  vl->add_option("--output", output, "JSON-lines report path (default stdout)");
  vl->add_flag("--timing", timing, "include wall time in summaries");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("spectough");
  for (const auto& a : args) argv_storage.push_back(a);
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*threshold) {
      const ThresholdResult r = eta(t, n);
      const Cubic cubic = phi(t, n);
      const auto& c = cubic.coefficients();
      if (format == "json") {
        out << json{{"t", t}, {"n", n}, {"eta", round_sig(r.eta)},
                    {"coefficients", {c[0], c[1], c[2], c[3]}},
                    {"bracket", {round_sig(r.bracket.lo), round_sig(r.bracket.hi)}}}
                   .dump()
            << '\n';
      } else {
        out << "eta " << fmt12(r.eta) << '\n'
            << "coefficients " << fmt12(c[0]) << ' ' << fmt12(c[1]) << ' ' << fmt12(c[2]) << ' '
            << fmt12(c[3]) << '\n';
      }
      return kOk;
    }

    if (*extremal) {
      const Graph g = build_extremal(t, n);
      const double lambda1 = spectral_radius(g);
      const ThresholdResult r = eta(t, n);
      const ToughnessOptions topts;
      std::optional<ToughnessResult> tr;
      if (n <= topts.exhaustive_limit) tr = toughness_exact(g, topts);
      if (format == "json") {
        out << json{{"t", t}, {"n", n}, {"graph", to_graph6(g)}, {"lambda1", round_sig(lambda1)},
                    {"eta", round_sig(r.eta)},
                    {"toughness", tr ? toughness_json(*tr) : json(nullptr)}}
                   .dump()
            << '\n';
      } else {
        out << "graph6 " << to_graph6(g) << '\n'
            << "lambda1 " << fmt12(lambda1) << '\n'
            << "toughness " << (tr ? toughness_plain(*tr) : std::string("skipped (order above limit)"))
            << '\n';
      }
      return kOk;
    }

    if (*radius) {
      RadiusOptions ro;
      ro.tolerance = tol;
      for (const Graph& g : load_graphs(source, in)) {
        const double lambda1 = spectral_radius(g, ro);
        if (format == "json") {
          out << json{{"graph", to_graph6(g)}, {"lambda1", round_sig(lambda1)}}.dump() << '\n';
        } else {
          out << fmt12(lambda1) << '\n';
        }
      }
      return kOk;
    }

    if (*toughness) {
      ToughnessOptions topts;
      topts.exhaustive_limit = limit;
      for (const Graph& g : load_graphs(source, in)) {
        const ToughnessResult r = toughness_exact(g, topts);
        if (format == "json") {
          out << json{{"graph", to_graph6(g)}, {"toughness", toughness_json(r)}}.dump() << '\n';
        } else {
          out << toughness_plain(r) << '\n';
        }
      }
      return kOk;
    }

    if (*certify_cmd) {
      CertifyOptions copts;
      copts.epsilon = eps;
      copts.cross_check = !no_cross_check;
      copts.toughness.exhaustive_limit = limit;
      int code = kOk;
      for (const Graph& g : load_graphs(source, in)) {
        CertificateReport r;
        try {
          r = certify(g, t, copts);
        } catch (const Error& e) {
          if (e.code() == Errc::hypothesis || e.code() == Errc::invalid_input) {
            throw Error(Errc::hypothesis, to_graph6(g) + ": " + e.what());
          }
          throw;
        }
        // A verdict the exact check contradicts is a verification failure.
        if (r.cross_check && r.verdict != Verdict::inconclusive &&
            r.cross_check->one_over_t_tough != (r.verdict == Verdict::certified_tough)) {
          code = kVerificationFailed;
        }
        if (certify_format == "json") {
          out << to_json(r).dump() << '\n';
        } else {
          out << r.graph6 << ' ' << to_string(r.verdict) << " lambda1 " << fmt12(r.lambda1) << " eta "
              << fmt12(r.eta) << '\n';
        }
      }
      return code;
    }

    if (*vt) {
      TheoremOptions topts;
      topts.workers = workers;
      topts.eps_eq = eps_eq;
      topts.eps_strict = eps_strict;
      topts.allow_order_8 = order8;
      const std::size_t last_n = n_max ? n_max : n;
      const std::size_t last_t = t_max ? t_max : t;
      std::vector<VerificationSummary> summaries;
      for (std::size_t order = n; order <= last_n; ++order) {
        for (std::size_t tt = t; tt <= last_t; ++tt) {
          // Sweeps skip infeasible pairs; a single explicit pair must be valid.
          if (order < tt + 2 && (last_n != n || last_t != t)) continue;
          summaries.push_back(verify_theorem(order, tt, topts));
        }
      }
      return report_summaries(summaries, output, timing, out);
    }

    if (*vl) {
      std::vector<VerificationSummary> summaries;
      const bool all = suite == "all";
      if (all || suite == "subgraph") summaries.push_back(verify_subgraph_monotonicity(pairs, 12, seed));
      if (all || suite == "quotient") summaries.push_back(verify_quotient_spectrum());
      if (all || suite == "closed-form") summaries.push_back(verify_closed_form_radius());
      if (all || suite == "join-cliques") summaries.push_back(verify_join_clique_sweep());
      if (all || suite == "identities") summaries.push_back(verify_proof_identities(grid));
      if (all || suite == "spanning") summaries.push_back(verify_spanning_chain(samples, 10, 3, seed));
      return report_summaries(summaries, output, timing, out);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kOtherError;
  } catch (const Error& e) {
    return map_error(e, err);
  }
  return kOk;
}

}  // namespace tough::cli
