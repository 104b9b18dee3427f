#pragma once

#include <iosfwd>

#include <nlohmann/json.hpp>

#include "signrmt/census.hpp"
#include "signrmt/crossing_stats.hpp"
#include "signrmt/ensembles.hpp"
#include "signrmt/spectra.hpp"
#include "signrmt/theory.hpp"

namespace signrmt {

// Report serialization. Big integers and exact rationals are written as
// decimal strings; keys keep insertion order.

using Json = nlohmann::ordered_json;

/// {k, totals: {m: count}, partitions: {m: {i: count}}, double_factorial}
Json to_json(const CrossingCensus& census);

/// {k, method, mean_exact, mean_float, mean_hypergeometric, mean_asymptotic,
///  variance_exact, variance, trials, seed, stderr}
Json to_json(const CrossingStatsReport& report);

Json to_json(const EnsembleSpec& spec);
EnsembleSpec spec_from_json(const Json& j);

Json to_json(const MomentReport& report);
Json to_json(const Histogram& histogram);

/// {k, order, p, supported, value, ci, method, note, decomposition}
Json to_json(const SignedMomentPrediction& prediction);

/// Header: k,mean,std_error,theory,theory_ci
void write_csv(std::ostream& out, const MomentReport& report);

/// Header: lo,hi,count,density
void write_csv(std::ostream& out, const Histogram& histogram);

}  // namespace signrmt
