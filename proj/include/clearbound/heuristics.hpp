#pragma once

#include <optional>
#include <span>
#include <vector>

#include "clearbound/errors.hpp"

namespace clearbound {

// Which lower bound produced a CostBound value.
enum class BoundKind { OneEndpoint, TwoEndpoint, SingleSample, MultiSample, EndpointChain };

const char* to_string(BoundKind kind) noexcept;

// A non-negative lower bound on path cost, tagged with its origin.
struct CostBound {
  double value = 0.0;
  BoundKind kind = BoundKind::OneEndpoint;
};

// Arc-length position t with known clearance d at the associated state.
// Sequences must be strictly increasing in t.
struct ClearanceSample {
  double t = 0.0;
  double d = 0.0;
};

// Arc-length knowledge about a path: the exact length when the path is
// concrete, and a lower bound (e.g. Euclidean endpoint distance) otherwise.
struct ArcLengthInfo {
  std::optional<double> exact_l;
  double lower_bound_lhat = 0.0;

  static ArcLengthInfo exact(double l);
  static ArcLengthInfo lower_bound(double lhat);
};

// Permissive computes the formulas as written; Strict additionally rejects
// sample sequences no real path could produce (|d_i - d_j| > |t_i - t_j|).
enum class SampleCheck { Permissive, Strict };

// Upper bound on the clearance anywhere on a path, from one known sample:
// d1 + |t1 - t|.
double clearance_cone(double d1, double t1, double t);

// Solution-cost bound from the clearance of one end state and a lower bound
// lhat on arc length: ln((d1 + lhat) / d1). Serves both endpoints.
CostBound bound_one_endpoint(double d1, double lhat);

// Solution-cost bound from the clearance of both end states:
// ln((d1 + d2 + lhat)^2 / (4 d1 d2)).
CostBound bound_two_endpoint(double d1, double d2, double lhat);

// Path-cost bound from one known clearance at arc position t1 on a path of
// exact length l: ln((d1 + t1)/d1) + ln((d1 + l - t1)/d1).
CostBound bound_single_sample(double d1, double t1, double l);

// Path-cost bound from n >= 1 known clearances: a leading one-endpoint term,
// a two-endpoint term per consecutive sample pair, and a trailing
// one-endpoint term.
CostBound bound_multi_sample(std::span<const ClearanceSample> samples, double l,
                             SampleCheck check = SampleCheck::Permissive);

// Path-cost bound when the first sample sits at t = 0 and the last at t = l:
// the sum of two-endpoint terms over consecutive segments.
CostBound bound_endpoint_chain(std::span<const ClearanceSample> samples, double l,
                               SampleCheck check = SampleCheck::Permissive);

}  // namespace clearbound
