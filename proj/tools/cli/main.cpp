// signrmt: census, crossing statistics, spectral simulation, theory and
// acceptance checks from the command line.
//
// Exit codes: 0 success, 1 a comparison or check failed, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "signrmt/census.hpp"
#include "signrmt/crossing_stats.hpp"
#include "signrmt/errors.hpp"
#include "signrmt/json_io.hpp"
#include "signrmt/spectra.hpp"
#include "signrmt/theory.hpp"
#include "signrmt/verify.hpp"

namespace {

using namespace signrmt;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

int cap_from_env() {
  if (const char* env = std::getenv("SIGNRMT_ENUM_CAP")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) return cap;
    } catch (const std::exception&) {
    }
    throw InvalidArgument("SIGNRMT_ENUM_CAP must be a positive integer");
  }
  return kDefaultEnumerationCap;
}

struct Common {
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::string format = "table";
  std::string out;
};

void add_common(CLI::App* cmd, Common& c, const std::vector<std::string>& formats) {
  cmd->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  cmd->add_option("--workers", c.workers, "Worker threads (0 = all cores)")->capture_default_str();
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "Write output to this file instead of stdout");
}

// stdout unless --out was given.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw InvalidArgument("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string yes_no(bool v) { return v ? "true" : "false"; }

// census ------------------------------------------------------------------

struct CensusArgs {
  Common common;
  int k = 0;
};

int run_census(const CensusArgs& a) {
  const int cap = cap_from_env();
  const auto census = crossing_census(a.k, cap, a.common.workers);
  bool all_match = true;

  struct Row {
    int m;
    std::string count;
    std::string closed;
    bool match;
  };
  std::vector<Row> rows;
  BigInt sum = 0;
  for (int m = 0; m <= a.k; ++m) {
    sum += census.cr(m);
    Row row{m, to_string(census.cr(m)), "", true};
    if (m <= 5) {
      const BigInt closed = closed_form_cr(a.k, m);
      row.closed = to_string(closed);
      row.match = closed == census.cr(m);
    }
    all_match = all_match && row.match;
    rows.push_back(row);
  }
  const bool sum_match = sum == census.pairing_count;
  all_match = all_match && sum_match;

  struct PartRow {
    int m, i;
    std::string count;
    std::string formula;
    bool match;
  };
  std::vector<PartRow> parts;
  for (int m = 2; m <= a.k; ++m) {
    for (int i = 1; i <= 2; ++i) {
      const BigInt f = partition_formula(a.k, m, i);
      const BigInt c = census.partition(m, i);
      parts.push_back({m, i, to_string(c), to_string(f), f == c});
      all_match = all_match && f == c;
    }
  }

  Sink sink(a.common.out);
  auto& out = sink.stream();
  if (a.common.format == "json") {
    Json j = to_json(census);
    Json cmp = Json::array();
    for (const auto& r : rows) {
      cmp.push_back({{"m", r.m},
                     {"count", r.count},
                     {"closed_form", r.closed.empty() ? Json(nullptr) : Json(r.closed)},
                     {"match", r.match}});
    }
    j["closed_form"] = std::move(cmp);
    Json pj = Json::array();
    for (const auto& p : parts) {
      pj.push_back({{"m", p.m}, {"i", p.i}, {"count", p.count}, {"formula", p.formula},
                    {"match", p.match}});
    }
    j["partition_formula"] = std::move(pj);
    j["sum_matches_double_factorial"] = sum_match;
    j["all_match"] = all_match;
    out << j.dump(2) << '\n';
  } else if (a.common.format == "csv") {
    out << "m,count,closed_form,match\n";
    for (const auto& r : rows) out << r.m << ',' << r.count << ',' << r.closed << ',' << yes_no(r.match) << '\n';
  } else {
    out << "k = " << a.k << ", pairings = " << to_string(census.pairing_count)
        << ", sum matches: " << yes_no(sum_match) << "\n\n";
    out << std::left << std::setw(4) << "m" << std::setw(24) << "Cr(2k,2m)" << std::setw(24)
        << "closed form" << "match\n";
    for (const auto& r : rows) {
      out << std::setw(4) << r.m << std::setw(24) << r.count << std::setw(24)
          << (r.closed.empty() ? "-" : r.closed) << yes_no(r.match) << '\n';
    }
    if (!parts.empty()) {
      out << '\n' << std::setw(4) << "m" << std::setw(4) << "i" << std::setw(24) << "P(2k,2m,i)"
          << std::setw(24) << "formula" << "match\n";
      for (const auto& p : parts) {
        out << std::setw(4) << p.m << std::setw(4) << p.i << std::setw(24) << p.count
            << std::setw(24) << p.formula << yes_no(p.match) << '\n';
      }
    }
  }
  return all_match ? kExitOk : kExitFailed;
}

// crossing-stats ----------------------------------------------------------

struct CrossingArgs {
  Common common;
  int k_min = 2;
  int k_max = 10;
  std::uint64_t trials = 100000;
  int enum_max = 7;
};

int run_crossing(const CrossingArgs& a) {
  if (a.k_min < 2 || a.k_max < a.k_min) throw InvalidArgument("need 2 <= k-min <= k-max");
  const int cap = cap_from_env();
  struct Row {
    CrossingStatsReport exact;
    std::optional<CrossingStatsReport> mc;
    std::optional<bool> enumerated_match;
    double hyper_rel = 0.0;
  };
  std::vector<Row> rows;
  bool ok = true;
  for (int k = a.k_min; k <= a.k_max; ++k) {
    Row row;
    row.exact = exact_crossing_report(k, true);
    const double exact = to_double(*row.exact.mean_exact);
    row.hyper_rel = std::abs(row.exact.mean_hypergeometric - exact) / exact;
    ok = ok && row.hyper_rel <= 1e-9;
    if (k <= std::min(a.enum_max, cap)) {
      const auto m = crossing_moments_enumerated(k, cap, a.common.workers);
      row.enumerated_match = m.mean == *row.exact.mean_exact && m.variance == *row.exact.variance_exact;
      ok = ok && *row.enumerated_match;
    }
    if (a.trials > 0) {
      row.mc = monte_carlo_crossing(k, a.trials, derive_seed(a.common.seed, static_cast<std::uint64_t>(k)),
                                    a.common.workers);
    }
    rows.push_back(std::move(row));
  }

  Sink sink(a.common.out);
  auto& out = sink.stream();
  if (a.common.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j;
      j["k"] = r.exact.k;
      j["exact"] = to_json(r.exact);
      j["hypergeometric_rel_error"] = r.hyper_rel;
      j["enumerated_match"] = r.enumerated_match ? Json(*r.enumerated_match) : Json(nullptr);
      j["monte_carlo"] = r.mc ? to_json(*r.mc) : Json(nullptr);
      arr.push_back(std::move(j));
    }
    out << Json{{"rows", arr}, {"all_match", ok}}.dump(2) << '\n';
    return ok ? kExitOk : kExitFailed;
  }
  const bool csv = a.common.format == "csv";
  const char sep = csv ? ',' : ' ';
  out << std::setprecision(10);
  if (csv) {
    out << "k,mean_exact,mean_float,mean_hypergeometric,mean_asymptotic,mean_deviation,"
           "variance_exact,enumerated_match,mc_mean,mc_variance,mc_stderr,mc_mean_deviation,"
           "trials,seed\n";
  } else {
    out << std::left << std::setw(5) << "k" << std::setw(16) << "mean" << std::setw(16)
        << "asymptotic" << std::setw(14) << "variance" << std::setw(10) << "enum" << std::setw(14)
        << "mc_mean" << std::setw(14) << "mc_var" << "mc_stderr\n";
  }
  for (const auto& r : rows) {
    const auto& e = r.exact;
    const std::string enum_flag = r.enumerated_match ? yes_no(*r.enumerated_match) : "-";
    if (csv) {
      out << e.k << sep << to_string(*e.mean_exact) << sep << e.mean_float << sep
          << e.mean_hypergeometric << sep << e.mean_asymptotic << sep
          << e.mean_float - e.mean_asymptotic << sep << e.variance << sep << enum_flag << sep;
      if (r.mc) {
        out << r.mc->mean_float << sep << r.mc->variance << sep << r.mc->std_error << sep
            << r.mc->mean_float - e.mean_float << sep << r.mc->trials << sep << r.mc->seed;
      } else {
        out << sep << sep << sep << sep << sep;
      }
      out << '\n';
    } else {
      out << std::setw(5) << e.k << std::setw(16) << e.mean_float << std::setw(16)
          << e.mean_asymptotic << std::setw(14) << e.variance << std::setw(10) << enum_flag;
      if (r.mc) {
        out << std::setw(14) << r.mc->mean_float << std::setw(14) << r.mc->variance
            << r.mc->std_error;
      }
      out << '\n';
    }
  }
  return ok ? kExitOk : kExitFailed;
}

// simulate ----------------------------------------------------------------

struct SpecArgs {
  std::string kind = "palindromic";
  std::size_t dimension = 1024;
  int n = 0;
  double p = 1.0;
  std::string base = "gaussian";
};

void add_spec(CLI::App* cmd, SpecArgs& s) {
  cmd->add_option("--kind", s.kind, "full | toeplitz | palindromic | highly-palindromic")
      ->check(CLI::IsMember({"full", "toeplitz", "palindromic", "highly-palindromic"}))
      ->capture_default_str();
  cmd->add_option("--N", s.dimension, "Matrix dimension")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--n", s.n, "Palindromicity degree (highly-palindromic)")->capture_default_str();
  cmd->add_option("--p", s.p, "Prob(sign = +1)")->check(CLI::Range(0.5, 1.0))->capture_default_str();
  cmd->add_option("--base", s.base, "gaussian | rademacher | uniform")
      ->check(CLI::IsMember({"gaussian", "rademacher", "uniform"}))
      ->capture_default_str();
}

EnsembleSpec make_spec(const SpecArgs& s, std::uint64_t seed) {
  EnsembleSpec spec;
  spec.kind = parse_ensemble_kind(s.kind);
  spec.dimension = s.dimension;
  spec.palindromicity = s.n;
  spec.p = s.p;
  spec.base = parse_base_distribution(s.base);
  spec.seed = seed;
  spec.validate();
  return spec;
}

struct SimulateArgs {
  Common common;
  SpecArgs spec;
  std::size_t samples = 100;
  int k_max = 8;
  int bins = 100;
  double lo = -4.0;
  double hi = 4.0;
  std::string histogram_out;
  std::uint64_t mc_samples = 200000;
  bool no_theory = false;
};

int run_simulate(const SimulateArgs& a) {
  const EnsembleSpec spec = make_spec(a.spec, a.common.seed);
  std::optional<HistogramSpec> hist;
  if (a.bins > 0) hist = HistogramSpec{a.bins, a.lo, a.hi};
  auto result = simulate(spec, a.samples, a.k_max, hist, a.common.workers);
  if (!a.no_theory) {
    PredictionOptions opts;
    opts.mc_samples = a.mc_samples;
    opts.seed = derive_seed(a.common.seed, 0x7e0);
    opts.workers = a.common.workers;
    opts.cap = cap_from_env();
    attach_theory(result.moments, opts);
  }
  Sink sink(a.common.out);
  auto& out = sink.stream();
  if (a.common.format == "json") {
    Json j;
    j["moments"] = to_json(result.moments);
    j["histogram"] = result.histogram ? to_json(*result.histogram) : Json(nullptr);
    out << j.dump(2) << '\n';
  } else if (a.common.format == "csv") {
    write_csv(out, result.moments);
  } else {
    const auto& r = result.moments;
    out << to_json(spec).dump() << ", samples " << r.samples << '\n';
    out << std::left << std::setw(4) << "k" << std::setw(16) << "mean" << std::setw(14)
        << "std_error" << std::setw(16) << "theory" << "theory_ci\n";
    for (std::size_t k = 0; k < r.mean.size(); ++k) {
      out << std::setw(4) << k << std::setw(16) << r.mean[k] << std::setw(14) << r.std_error[k];
      if (r.theory[k]) {
        out << std::setw(16) << *r.theory[k];
      } else {
        out << std::setw(16) << (a.no_theory ? "-" : "unsupported");
      }
      if (r.theory_ci[k]) out << *r.theory_ci[k];
      out << '\n';
    }
  }
  if (result.histogram && !a.histogram_out.empty()) {
    Sink hs(a.histogram_out);
    write_csv(hs.stream(), *result.histogram);
  }
  return kExitOk;
}

// theory ------------------------------------------------------------------

struct TheoryArgs {
  Common common;
  SpecArgs spec;
  int k = 2;
  std::uint64_t mc_samples = 200000;
  std::size_t brute_force_n = 0;
};

int run_theory(const TheoryArgs& a) {
  if (a.k < 0) throw InvalidArgument("k must be nonnegative");
  SpecArgs s = a.spec;
  if (s.kind != "highly-palindromic") s.n = 0;
  s.dimension = 1u << std::max(0, s.n);
  const EnsembleSpec spec = make_spec(s, a.common.seed);
  PredictionOptions opts;
  opts.mc_samples = a.mc_samples;
  opts.seed = a.common.seed;
  opts.workers = a.common.workers;
  opts.cap = cap_from_env();
  const auto pred = predict_moment(spec.kind, spec.palindromicity, 2 * a.k, spec.p, opts);
  std::optional<double> finite;
  if (a.brute_force_n > 0) {
    finite = brute_force_finite_moment(a.brute_force_n, 2 * a.k, spec.kind, spec.p, spec.base,
                                       spec.palindromicity, a.common.workers);
  }
  Sink sink(a.common.out);
  auto& out = sink.stream();
  if (a.common.format == "json") {
    Json j = to_json(pred);
    if (finite) j["finite_N"] = {{"N", a.brute_force_n}, {"value", *finite}};
    out << j.dump(2) << '\n';
  } else {
    out << std::setprecision(10) << "M_" << 2 * a.k << "(p=" << spec.p << ") " << to_string(spec.kind);
    if (!pred.supported) {
      out << ": unsupported (" << pred.note << ")\n";
    } else {
      out << " = " << pred.value;
      if (pred.ci) out << " +- " << *pred.ci << " (99%)";
      out << " [" << pred.method << "]\n";
    }
    if (finite) out << "finite N=" << a.brute_force_n << ": " << *finite << '\n';
  }
  return kExitOk;
}

// verify ------------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string suite = "all";
  bool quick = false;
};

int run_verify(const VerifyArgs& a) {
  verify::SuiteOptions opts;
  opts.quick = a.quick;
  opts.workers = a.common.workers;
  opts.seed = a.common.seed;
  opts.cap = cap_from_env();
  const bool json = a.common.format == "json";
  Sink sink(a.common.out);
  auto& out = sink.stream();
  const auto results = verify::run_suite(a.suite, opts, [&](const verify::CheckResult& r) {
    if (!json) out << verify::format_line(r) << std::endl;
  });
  if (json) out << verify::summary_json(a.suite, results).dump(2) << '\n';
  return verify::all_passed(results) ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossing combinatorics and signed structured random matrices"};
  app.require_subcommand(1);

  CensusArgs census;
  auto* c = app.add_subcommand("census", "Exact crossing census with closed-form comparison");
  c->add_option("--k", census.k, "Half the number of vertices")->required()->check(CLI::PositiveNumber);
  add_common(c, census.common, {"table", "json", "csv"});

  CrossingArgs crossing;
  auto* x = app.add_subcommand("crossing-stats", "Mean and variance of crossing vertices");
  x->add_option("--k", crossing.k_min, "Single k (sets k-min and k-max)")
      ->each([&](const std::string& v) { crossing.k_max = std::stoi(v); });
  x->add_option("--k-min", crossing.k_min, "Smallest k")->capture_default_str();
  x->add_option("--k-max", crossing.k_max, "Largest k")->capture_default_str();
  x->add_option("--trials", crossing.trials, "Monte Carlo matchings per k (0 disables)")->capture_default_str();
  x->add_option("--enum-max", crossing.enum_max, "Largest k checked by full enumeration")->capture_default_str();
  add_common(x, crossing.common, {"table", "json", "csv"});

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Rescaled spectral moments and histogram");
  add_spec(s, sim.spec);
  s->add_option("--samples", sim.samples, "Independent matrices")->check(CLI::PositiveNumber)->capture_default_str();
  s->add_option("--k-max", sim.k_max, "Largest moment order")->check(CLI::NonNegativeNumber)->capture_default_str();
  s->add_option("--bins", sim.bins, "Histogram bins (0 disables)")->check(CLI::NonNegativeNumber)->capture_default_str();
  s->add_option("--lo", sim.lo, "Histogram lower edge")->capture_default_str();
  s->add_option("--hi", sim.hi, "Histogram upper edge")->capture_default_str();
  s->add_option("--histogram-out", sim.histogram_out, "Write the histogram CSV here");
  s->add_option("--mc-samples", sim.mc_samples, "Samples per Toeplitz volume")->capture_default_str();
  s->add_flag("--no-theory", sim.no_theory, "Skip the theory columns");
  add_common(s, sim.common, {"table", "json", "csv"});

  TheoryArgs theory;
  auto* t = app.add_subcommand("theory", "Predicted signed moment M_2k(p)");
  add_spec(t, theory.spec);
  t->add_option("--k", theory.k, "Half the moment order")->capture_default_str();
  t->add_option("--mc-samples", theory.mc_samples, "Samples per Toeplitz volume")->capture_default_str();
  t->add_option("--brute-force-N", theory.brute_force_n, "Also compute the exact finite-N moment");
  add_common(t, theory.common, {"table", "json"});

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run acceptance checks");
  v->add_option("suite", ver.suite, "combinatorics | crossing-stats | spectra | theory | all")
      ->capture_default_str();
  v->add_flag("--quick", ver.quick, "Skip the large simulations");
  add_common(v, ver.common, {"table", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c->parsed()) return run_census(census);
    if (x->parsed()) return run_crossing(crossing);
    if (s->parsed()) return run_simulate(sim);
    if (t->parsed()) return run_theory(theory);
    if (v->parsed()) return run_verify(ver);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
