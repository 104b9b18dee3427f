#include "signrmt/json_io.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "signrmt/errors.hpp"

namespace signrmt {

namespace {

// NaN and infinities have no JSON spelling.
Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

template <typename T>
Json optional_number(const std::optional<T>& v) {
  return v ? number_or_null(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const CrossingCensus& census) {
  Json j;
  j["k"] = census.k;
  Json totals = Json::object();
  for (std::size_t m = 0; m < census.totals.size(); ++m) {
    totals[std::to_string(m)] = to_string(census.totals[m]);
  }
  j["totals"] = std::move(totals);
  Json parts = Json::object();
  for (const auto& [key, count] : census.partitions) {
    parts[std::to_string(key.first)][std::to_string(key.second)] = to_string(count);
  }
  j["partitions"] = std::move(parts);
  j["double_factorial"] = to_string(census.pairing_count);
  return j;
}

Json to_json(const CrossingStatsReport& r) {
  Json j;
  j["k"] = r.k;
  j["method"] = std::string(to_string(r.method));
  j["mean_exact"] = r.mean_exact ? Json(to_string(*r.mean_exact)) : Json(nullptr);
  j["mean_float"] = number_or_null(r.mean_float);
  j["mean_hypergeometric"] = number_or_null(r.mean_hypergeometric);
  j["mean_asymptotic"] = number_or_null(r.mean_asymptotic);
  j["variance_exact"] = r.variance_exact ? Json(to_string(*r.variance_exact)) : Json(nullptr);
  j["variance"] = number_or_null(r.variance);
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["stderr"] = number_or_null(r.std_error);
  return j;
}

Json to_json(const EnsembleSpec& spec) {
  Json j;
  j["kind"] = std::string(to_string(spec.kind));
  j["N"] = spec.dimension;
  j["n"] = spec.palindromicity;
  j["p"] = spec.p;
  j["base"] = std::string(to_string(spec.base));
  j["seed"] = spec.seed;
  return j;
}

EnsembleSpec spec_from_json(const Json& j) {
  try {
    EnsembleSpec spec;
    spec.kind = parse_ensemble_kind(j.at("kind").get<std::string>());
    spec.dimension = j.at("N").get<std::size_t>();
    spec.palindromicity = j.value("n", 0);
    spec.p = j.value("p", 1.0);
    spec.base = parse_base_distribution(j.value("base", std::string("gaussian")));
    spec.seed = j.value("seed", std::uint64_t{0});
    spec.validate();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad ensemble spec: ") + e.what());
  }
}

Json to_json(const MomentReport& r) {
  Json j;
  j["spec"] = to_json(r.spec);
  j["samples"] = r.samples;
  j["k_max"] = r.k_max;
  j["scale"] = {{"c", r.scale.c}, {"r", r.scale.r}};
  j["theory_method"] = r.theory_method;
  Json rows = Json::array();
  for (std::size_t k = 0; k < r.mean.size(); ++k) {
    Json row;
    row["k"] = k;
    row["mean"] = number_or_null(r.mean[k]);
    row["std_error"] = number_or_null(r.std_error[k]);
    row["theory"] = k < r.theory.size() ? optional_number(r.theory[k]) : Json(nullptr);
    row["theory_ci"] = k < r.theory_ci.size() ? optional_number(r.theory_ci[k]) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  j["moments"] = std::move(rows);
  return j;
}

Json to_json(const Histogram& h) {
  Json j;
  j["bins"] = h.spec.bins;
  j["range"] = {h.spec.lo, h.spec.hi};
  j["edges"] = h.edges;
  j["counts"] = h.counts;
  j["density"] = h.density;
  j["below"] = h.below;
  j["above"] = h.above;
  j["in_range"] = h.in_range;
  return j;
}

Json to_json(const SignedMomentPrediction& pred) {
  Json j;
  j["k"] = pred.k;
  j["order"] = pred.order;
  j["p"] = pred.p;
  j["supported"] = pred.supported;
  j["value"] = pred.supported ? number_or_null(pred.value) : Json(nullptr);
  j["ci"] = optional_number(pred.ci);
  j["method"] = pred.method;
  if (!pred.note.empty()) j["note"] = pred.note;
  Json terms = Json::array();
  for (const auto& t : pred.decomposition) {
    Json row;
    row[pred.method == "census" ? "m" : "config_id"] = t.label;
    row["crossing_vertices"] = t.crossing_vertices;
    row["count"] = t.count;
    row["weight"] = t.weight;
    row["x"] = t.x;
    row["x_method"] = std::string(to_string(t.x_method));
    row["x_ci"] = optional_number(t.x_ci);
    row["contribution"] = t.contribution;
    terms.push_back(std::move(row));
  }
  j["decomposition"] = std::move(terms);
  return j;
}

namespace {

void write_optional(std::ostream& out, const std::optional<double>& v) {
  if (v) out << *v;
}

}  // namespace

void write_csv(std::ostream& out, const MomentReport& r) {
  const auto old_precision = out.precision(12);
  out << "k,mean,std_error,theory,theory_ci\n";
  for (std::size_t k = 0; k < r.mean.size(); ++k) {
    out << k << ',' << r.mean[k] << ',' << r.std_error[k] << ',';
    if (k < r.theory.size()) write_optional(out, r.theory[k]);
    out << ',';
    if (k < r.theory_ci.size()) write_optional(out, r.theory_ci[k]);
    out << '\n';
  }
  out.precision(old_precision);
}

void write_csv(std::ostream& out, const Histogram& h) {
  const auto old_precision = out.precision(12);
  out << "lo,hi,count,density\n";
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    out << h.edges[b] << ',' << h.edges[b + 1] << ',' << h.counts[b] << ',' << h.density[b]
        << '\n';
  }
  out.precision(old_precision);
}

}  // namespace signrmt
