#include "signrmt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "signrmt/census.hpp"
#include "signrmt/crossing_stats.hpp"
#include "signrmt/errors.hpp"
#include "signrmt/hypergeometric.hpp"
#include "signrmt/rng.hpp"
#include "signrmt/spectra.hpp"
#include "signrmt/theory.hpp"

namespace signrmt::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v, int precision = 6) {
  std::ostringstream out;
  out << std::setprecision(precision) << v;
  return out.str();
}

// Collects failures; the first few end up in the detail line.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) messages_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string detail(const std::string& summary) const {
    std::string out = std::to_string(checks_ - failures_) + "/" + std::to_string(checks_) +
                      " checks; " + summary;
    for (const auto& m : messages_) out += "; FAILED " + m;
    return out;
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::vector<std::string> messages_;
};

bool within(double value, double target, double se, double z = 5.0) {
  return std::abs(value - target) <= z * se;
}

std::string moment_text(const MomentReport& r, int k) {
  const auto i = static_cast<std::size_t>(k);
  return "M" + std::to_string(k) + "=" + fmt(r.mean[i], 5) + "+-" + fmt(r.std_error[i], 2);
}

EnsembleSpec palindromic_spec(double p, std::uint64_t seed) {
  EnsembleSpec spec;
  spec.kind = EnsembleKind::PalindromicToeplitz;
  spec.dimension = 1024;
  spec.p = p;
  spec.seed = seed;
  return spec;
}

// 1. Census totals and closed forms.
CheckResult census_exactness(const SuiteOptions& o) {
  CheckResult r{1, "census exactness", false, false, "", 0.0};
  const auto start = Clock::now();
  Tally t;
  for (int k = 1; k <= 7; ++k) {
    const auto census = crossing_census(k, o.cap, o.workers);
    BigInt sum = 0;
    for (const auto& c : census.totals) sum += c;
    t.expect(sum == double_factorial(2 * k - 1), "sum at k=" + std::to_string(k));
    for (int m = 0; m <= std::min(k, 5); ++m) {
      t.expect(census.cr(m) == closed_form_cr(k, m),
               "Cr(" + std::to_string(2 * k) + "," + std::to_string(2 * m) + ")");
    }
  }
  const BigInt expected[] = {1, 4, 31, 288};
  for (int m = 2; m <= 5; ++m) {
    const auto census = crossing_census(m, o.cap, o.workers);
    t.expect(census.cr(m) == expected[m - 2], "fully crossing m=" + std::to_string(m));
  }
  const double through7 = seconds_since(start);
  t.expect(through7 < 60.0, "runtime through k=7 " + fmt(through7) + " s");
  std::string summary = "k=1..7 in " + fmt(through7, 3) + " s";
  if (!o.quick && o.cap >= 9) {
    const auto k9_start = Clock::now();
    const auto census = crossing_census(9, o.cap, o.workers);
    BigInt sum = 0;
    for (const auto& c : census.totals) sum += c;
    bool forms = true;
    for (int m = 0; m <= 5; ++m) forms = forms && census.cr(m) == closed_form_cr(9, m);
    const double k9 = seconds_since(k9_start);
    t.expect(sum == double_factorial(17) && forms, "k=9 census");
    t.expect(k9 < 1800.0, "k=9 runtime");
    summary += ", k=9 in " + fmt(k9, 3) + " s";
  }
  r.passed = t.ok();
  r.detail = t.detail(summary);
  r.seconds = seconds_since(start);
  return r;
}

// 2. Non-crossing non-dividing placements.
CheckResult placement_count(const SuiteOptions& o) {
  CheckResult r{2, "non-crossing non-dividing placements", false, false, "", 0.0};
  const auto start = Clock::now();
  Tally t;
  int cases = 0;
  for (int k = 1; k <= 6; ++k) {
    for (int v = 1; v <= k; ++v) {
      const Pairing partial = crossing_partial(v);
      const BigInt brute = nc_nd_placement_bruteforce(k, partial, o.cap);
      t.expect(brute == binomial(2 * k, k - v) && brute == nc_nd_placement_count(k, partial),
               "k=" + std::to_string(k) + " v=" + std::to_string(v));
      ++cases;
    }
  }
  r.passed = t.ok();
  r.detail = t.detail(std::to_string(cases) + " (k, v) cases match binom(2k, k-v)");
  r.seconds = seconds_since(start);
  return r;
}

// 3. Catalan self-convolution.
CheckResult catalan_identity(const SuiteOptions&) {
  CheckResult r{3, "catalan convolution identity", false, false, "", 0.0};
  const auto start = Clock::now();
  Tally t;
  for (int n = 1; n <= 12; ++n) {
    for (int rr = 1; rr <= n; ++rr) {
      const auto sides = catalan_convolution(n, rr);
      t.expect(Rational(sides.lhs) == sides.rhs,
               "n=" + std::to_string(n) + " r=" + std::to_string(rr));
    }
  }
  r.passed = t.ok();
  r.detail = t.detail("all n <= 12, 1 <= r <= n");
  r.seconds = seconds_since(start);
  return r;
}

// 4. Mean of Y_2k.
CheckResult mean_crossing(const SuiteOptions& o) {
  CheckResult r{4, "mean crossing", false, false, "", 0.0};
  const auto start = Clock::now();
  Tally t;
  t.expect(mean_crossing_exact(2) == Rational(4, 3), "k=2 mean 4/3");
  t.expect(mean_crossing_exact(3) == Rational(16, 5), "k=3 mean 16/5");
  for (int k = 2; k <= 7; ++k) {
    t.expect(crossing_moments_enumerated(k, o.cap, o.workers).mean == mean_crossing_exact(k),
             "enumerated mean k=" + std::to_string(k));
  }
  double worst_rel = 0.0;
  for (int k = 2; k <= 50; ++k) {
    const double exact = to_double(mean_crossing_exact(k));
    const double rel = std::abs(mean_crossing_hypergeometric(k) - exact) / exact;
    worst_rel = std::max(worst_rel, rel);
    t.expect(rel <= 1e-9, "hypergeometric k=" + std::to_string(k) + " rel " + fmt(rel));
  }
  for (int k = 3; k <= 50; ++k) {
    const auto terms = mean_crossing_sum_terms(k);
    if (terms.empty()) continue;
    const Rational edge(1, 2 * k - 3);
    t.expect(terms.front() == edge && terms.back() == edge,
             "first and last sum terms k=" + std::to_string(k));
  }
  double worst = 0.0;
  double previous = std::numeric_limits<double>::infinity();
  bool monotone = true;
  for (int k = 10; k <= 60; ++k) {
    const double residual =
        double(k) * k * std::abs(to_double(mean_crossing_exact(k)) - mean_crossing_asymptotic(k));
    worst = std::max(worst, residual);
    monotone = monotone && residual <= previous;
    previous = residual;
  }
  t.expect(monotone, "k^2 residual not non-increasing over k=10..60");
  t.expect(std::isfinite(worst), "residual finite");
  r.passed = t.ok();
  r.detail = t.detail("max hypergeometric rel err " + fmt(worst_rel, 3) +
                      ", k^2 residual <= " + fmt(worst, 4) + " and non-increasing");
  r.seconds = seconds_since(start);
  return r;
}

// 5. Variance of Y_2k and p_a.
CheckResult variance(const SuiteOptions& o) {
  CheckResult r{5, "variance", false, false, "", 0.0};
  const auto start = Clock::now();
  Tally t;
  t.expect(crossing_moments_enumerated(2, o.cap, o.workers).variance == Rational(32, 9),
           "k=2 variance 32/9");
  t.expect(crossing_moments_enumerated(3, o.cap, o.workers).variance == Rational(144, 25),
           "k=3 variance 144/25");
  for (int k = 2; k <= 7; ++k) {
    t.expect(crossing_moments_enumerated(k, o.cap, o.workers).variance == variance_exact(k),
             "enumerated vs formula variance k=" + std::to_string(k));
  }
  for (int k = 2; k <= 60; ++k) {
    t.expect(chord_crossing_pa(k) == Rational(1, 3), "p_a at k=" + std::to_string(k));
  }
  std::string summary = "exact variance k<=7 agrees; p_a=1/3 for k=2..60";
  const int ks[] = {50, 100, 200};
  for (int i = 0; i < 3; ++i) {
    const auto k_start = Clock::now();
    const auto mc = monte_carlo_crossing(ks[i], 100000, derive_seed(o.seed, 500 + i), o.workers);
    const double secs = seconds_since(k_start);
    t.expect(mc.variance >= 3.4 && mc.variance <= 4.6,
             "MC variance k=" + std::to_string(ks[i]) + " = " + fmt(mc.variance));
    t.expect(secs < 120.0, "MC runtime k=" + std::to_string(ks[i]));
    summary += "; k=" + std::to_string(ks[i]) + " var " + fmt(mc.variance, 4);
  }
  r.passed = t.ok();
  r.detail = t.detail(summary);
  r.seconds = seconds_since(start);
  return r;
}

// 6. Eigenvalue trace identity.
CheckResult trace_identity(const SuiteOptions& o) {
  CheckResult r{6, "trace identity", false, false, "", 0.0};
  const auto start = Clock::now();
  Tally t;
  double worst = 0.0;
  const EnsembleKind kinds[] = {EnsembleKind::FullSymmetric, EnsembleKind::Toeplitz,
                                EnsembleKind::PalindromicToeplitz, EnsembleKind::HighlyPalindromic};
  const double ps[] = {1.0, 0.75, 0.5, 0.9};
  std::uint64_t stream = 600;
  for (auto kind : kinds) {
    for (int s = 0; s < 20; ++s) {
      EnsembleSpec spec;
      spec.kind = kind;
      spec.dimension = 64;
      spec.palindromicity = kind == EnsembleKind::HighlyPalindromic ? 1 : 0;
      spec.p = ps[s % 4];
      spec.seed = derive_seed(o.seed, stream++);
      const SymmetricMatrix a = simulation_sample(spec, 0);
      const auto traces = trace_powers(a, 8);
      const Spectrum spectrum = eigenvalues(a);
      for (int k = 2; k <= 8; k += 2) {
        std::vector<double> powers;
        for (double lambda : spectrum.eigenvalues) powers.push_back(std::pow(lambda, k));
        const double sum = pairwise_sum(powers);
        const double rel = std::abs(sum - traces[static_cast<std::size_t>(k)]) /
                           std::abs(traces[static_cast<std::size_t>(k)]);
        worst = std::max(worst, rel);
        t.expect(rel <= 1e-8, std::string(to_string(kind)) + " k=" + std::to_string(k));
      }
    }
  }
  r.passed = t.ok();
  r.detail = t.detail("80 matrices N=64, worst rel err " + fmt(worst, 3));
  r.seconds = seconds_since(start);
  return r;
}

// 7. Semicircle and Gaussian endpoints.
CheckResult endpoint_spectra(const SuiteOptions& o) {
  CheckResult r{7, "endpoint spectra", false, false, "", 0.0};
  if (o.quick) {
    r.skipped = true;
    r.passed = true;
    r.detail = "skipped in quick mode";
    return r;
  }
  const auto start = Clock::now();
  Tally t;
  std::string summary;
  struct Endpoint {
    double p;
    double m4;
    double m6;
  };
  const Endpoint endpoints[] = {{0.5, 2.0, 5.0}, {1.0, 3.0, 15.0}};
  std::uint64_t stream = 700;
  for (const auto& e : endpoints) {
    const auto rep = ensemble_moments(palindromic_spec(e.p, derive_seed(o.seed, stream++)), 100, 6,
                                      o.workers);
    const std::string tag = "p=" + fmt(e.p, 2);
    t.expect(within(rep.mean[4], e.m4, rep.std_error[4]), tag + " " + moment_text(rep, 4));
    t.expect(within(rep.mean[6], e.m6, rep.std_error[6]), tag + " " + moment_text(rep, 6));
    for (int k : {1, 3, 5}) {
      t.expect(within(rep.mean[static_cast<std::size_t>(k)], 0.0,
                      rep.std_error[static_cast<std::size_t>(k)]),
               tag + " " + moment_text(rep, k));
    }
    summary += (summary.empty() ? "" : "; ") + tag + " " + moment_text(rep, 4) + " " +
               moment_text(rep, 6);
  }
  const double secs = seconds_since(start);
  t.expect(secs < 600.0, "runtime " + fmt(secs) + " s");
  r.passed = t.ok();
  r.detail = t.detail(summary);
  r.seconds = secs;
  return r;
}

// 8. Interpolation at p = 3/4.
CheckResult interpolation(const SuiteOptions& o) {
  CheckResult r{8, "interpolation at p=0.75", false, false, "", 0.0};
  const auto start = Clock::now();
  Tally t;
  const double target = signed_moment_palindromic(2, 0.75).value;
  t.expect(signed_moment_palindromic_exact(2, Rational(3, 4)) == Rational(33, 16),
           "M4(3/4) = 33/16");
  double previous_gap = std::numeric_limits<double>::infinity();
  std::string trend;
  for (std::size_t n : {4, 8, 16}) {
    const double v = brute_force_finite_moment(n, 4, EnsembleKind::PalindromicToeplitz, 0.75,
                                               BaseDistribution::StandardGaussian, 0, o.workers);
    const double gap = std::abs(v - target);
    t.expect(gap < previous_gap, "finite-N trend at N=" + std::to_string(n));
    previous_gap = gap;
    trend += (trend.empty() ? "" : ",") + fmt(v, 6);
  }
  std::string summary = "target " + fmt(target) + ", finite-N oracle N=4,8,16: " + trend;
  if (o.quick) {
    summary += "; simulation skipped in quick mode";
  } else {
    const auto rep =
        ensemble_moments(palindromic_spec(0.75, derive_seed(o.seed, 800)), 100, 4, o.workers);
    t.expect(within(rep.mean[4], target, rep.std_error[4]), moment_text(rep, 4));
    summary += "; N=1024 " + moment_text(rep, 4);
  }
  r.passed = t.ok();
  r.detail = t.detail(summary);
  r.seconds = seconds_since(start);
  return r;
}

// 9. Toeplitz crossing volume.
CheckResult toeplitz_volume(const SuiteOptions& o) {
  CheckResult r{9, "toeplitz x(c)", false, false, "", 0.0};
  const auto start = Clock::now();
  Tally t;
  const double grid = crossing_volume_grid(2000);
  const auto crossing = Pairing::from_edges(2, {{0, 2}, {1, 3}});
  const auto x = toeplitz_x(crossing, 1000000, derive_seed(o.seed, 900), o.workers);
  t.expect(std::abs(x.estimate - grid) <= x.ci_half_width,
           "x=" + fmt(x.estimate) + " vs grid " + fmt(grid));
  std::string summary = "grid " + fmt(grid, 7) + ", MC " + fmt(x.estimate, 5) + "+-" +
                        fmt(x.ci_half_width, 2);
  const auto pred = signed_moment_toeplitz(2, 1.0, 1000000, derive_seed(o.seed, 901), o.workers);
  summary += "; predicted M4 " + fmt(pred.value, 5) + "+-" + fmt(pred.ci.value_or(0.0), 2);
  if (o.quick) {
    summary += "; simulation skipped in quick mode";
  } else {
    EnsembleSpec spec;
    spec.kind = EnsembleKind::Toeplitz;
    spec.dimension = 1024;
    spec.p = 1.0;
    spec.seed = derive_seed(o.seed, 902);
    const auto rep = ensemble_moments(spec, 100, 4, o.workers);
    const double band = pred.ci.value_or(0.0) + 5.0 * rep.std_error[4];
    t.expect(std::abs(rep.mean[4] - pred.value) <= band, "simulated " + moment_text(rep, 4));
    summary += ", simulated " + moment_text(rep, 4);
  }
  r.passed = t.ok();
  r.detail = t.detail(summary);
  r.seconds = seconds_since(start);
  return r;
}

// 10. Unbounded-support lower bound.
CheckResult unbounded_proxy(const SuiteOptions& o) {
  CheckResult r{10, "unbounded-support proxy", false, false, "", 0.0};
  const auto start = Clock::now();
  Tally t;
  const Rational ps[] = {Rational(3, 5), Rational(3, 4), Rational(9, 10)};
  for (int k = 1; k <= 7; ++k) {
    for (const auto& p : ps) {
      const Rational moment = signed_moment_palindromic_exact(k, p, o.cap);
      const Rational bound = signed_weight(p, 2 * k) * Rational(double_factorial(2 * k - 1));
      t.expect(moment >= bound, "k=" + std::to_string(k) + " p=" + to_string(p));
    }
  }
  r.passed = t.ok();
  r.detail = t.detail("k=1..7, p in {3/5, 3/4, 9/10}, exact arithmetic");
  r.seconds = seconds_since(start);
  return r;
}

using Criterion = CheckResult (*)(const SuiteOptions&);

struct Suite {
  std::string_view name;
  std::vector<Criterion> criteria;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> table = {
      {"combinatorics", {census_exactness, placement_count, catalan_identity}},
      {"crossing-stats", {mean_crossing, variance}},
      {"spectra", {trace_identity, endpoint_spectra}},
      {"theory", {interpolation, toeplitz_volume, unbounded_proxy}},
  };
  return table;
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = {"combinatorics", "crossing-stats",
                                                      "spectra", "theory", "all"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, const SuiteOptions& options,
                                   const std::function<void(const CheckResult&)>& on_result) {
  std::vector<Criterion> selected;
  for (const auto& s : suites()) {
    if (suite == "all" || suite == s.name) {
      selected.insert(selected.end(), s.criteria.begin(), s.criteria.end());
    }
  }
  if (selected.empty()) throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
  std::vector<CheckResult> results;
  for (auto criterion : selected) {
    results.push_back(criterion(options));
    if (on_result) on_result(results.back());
  }
  return results;
}

std::string format_line(const CheckResult& r) {
  const char* tag = r.skipped ? "[SKIP]" : r.passed ? "[PASS]" : "[FAIL]";
  return std::string(tag) + " " + std::to_string(r.criterion) + " " + r.title + ": " + r.detail +
         " (" + fmt(r.seconds, 3) + " s)";
}

Json summary_json(std::string_view suite, const std::vector<CheckResult>& results) {
  Json j;
  j["suite"] = std::string(suite);
  j["passed"] = all_passed(results);
  Json rows = Json::array();
  for (const auto& r : results) {
    rows.push_back({{"criterion", r.criterion},
                    {"title", r.title},
                    {"status", r.skipped ? "skip" : r.passed ? "pass" : "fail"},
                    {"detail", r.detail},
                    {"seconds", r.seconds}});
  }
  j["results"] = std::move(rows);
  return j;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed || r.skipped; });
}

std::vector<double> trace_powers(const SymmetricMatrix& a, int max_power) {
  const std::size_t n = a.size();
  std::vector<double> traces(static_cast<std::size_t>(max_power) + 1, 0.0);
  traces[0] = static_cast<double>(n);
  std::vector<double> power(n * n, 0.0), next(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) power[i * n + i] = 1.0;
  for (int k = 1; k <= max_power; ++k) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        const double left = power[i * n + l];
        for (std::size_t j = 0; j < n; ++j) next[i * n + j] += left * a(l, j);
      }
    }
    power.swap(next);
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += power[i * n + i];
    traces[static_cast<std::size_t>(k)] = trace;
  }
  return traces;
}

double crossing_volume_grid(int cells_per_axis) {
  // Indices visited: u, u - y1, u - y1 - y2, u - y2.
  const double h = 2.0 / cells_per_axis;
  std::vector<double> rows(static_cast<std::size_t>(cells_per_axis));
  for (int a = 0; a < cells_per_axis; ++a) {
    const double y1 = -1.0 + (a + 0.5) * h;
    double row = 0.0;
    for (int b = 0; b < cells_per_axis; ++b) {
      const double y2 = -1.0 + (b + 0.5) * h;
      const double lo = std::max({0.0, y1, y2, y1 + y2});
      const double hi = std::min({1.0, 1.0 + y1, 1.0 + y2, 1.0 + y1 + y2});
      row += std::max(0.0, hi - lo);
    }
    rows[static_cast<std::size_t>(a)] = row;
  }
  return pairwise_sum(rows) * h * h;
}

Pairing crossing_partial(int v) {
  if (v == 1) return Pairing::from_partners({1, 0});
  std::vector<int> partner(static_cast<std::size_t>(2 * v));
  for (int i = 0; i < v; ++i) {
    partner[static_cast<std::size_t>(i)] = i + v;
    partner[static_cast<std::size_t>(i + v)] = i;
  }
  return Pairing::from_partners(std::move(partner));
}

}  // namespace signrmt::verify
