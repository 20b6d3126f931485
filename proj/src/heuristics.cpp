#include "clearbound/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace clearbound {

namespace {

void require_clearance(double d, const char* name) {
  // +infinity is a legal clearance (empty invalid set); NaN and d <= 0 are not.
  if (!(d > 0.0)) {
    std::ostringstream msg;
    msg << name << " must be a positive clearance, got " << d;
    throw InputError(msg.str());
  }
}

void require_length(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0) {
    std::ostringstream msg;
    msg << name << " must be finite and non-negative, got " << value;
    throw InputError(msg.str());
  }
}

// ln((d + len) / d); the d -> infinity limit is 0.
double one_endpoint_term(double d, double len) {
  if (std::isinf(d)) return 0.0;
  return std::log1p(len / d);
}

// ln((d1 + d2 + len)^2 / (4 d1 d2)); >= 0 by AM-GM, clamped against rounding.
// Terms touching an infinite clearance contribute 0 (their limit).
double two_endpoint_term(double d1, double d2, double len) {
  if (std::isinf(d1) || std::isinf(d2)) return 0.0;
  const double s = d1 + d2 + len;
  const double num = s * s;
  const double den = 4.0 * d1 * d2;
  double value;
  if (std::isfinite(num) && std::isfinite(den) && den > 0.0) {
    value = std::log(num / den);
  } else {
    value = 2.0 * std::log(s) - std::log(4.0) - std::log(d1) - std::log(d2);
  }
  return std::max(value, 0.0);
}

double clamp_position(double t, double l, const char* name) {
  const double slack = 1e-12 * std::max(1.0, l);
  if (!(t >= -slack) || !(t <= l + slack)) {
    std::ostringstream msg;
    msg << name << " = " << t << " outside [0, " << l << "]";
    throw InputError(msg.str());
  }
  return std::clamp(t, 0.0, l);
}

// A real path cannot carry samples whose clearances change faster than arc
// length (the cone bound). Checking adjacent pairs covers all pairs because
// the positions are sorted.
void check_consistency(std::span<const ClearanceSample> samples) {
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const double dt = samples[i + 1].t - samples[i].t;
    const double da = samples[i].d;
    const double db = samples[i + 1].d;
    if (std::isinf(da) && std::isinf(db)) continue;
    const double dd = std::abs(db - da);
    if (!(dd <= dt * (1.0 + 1e-12) + 1e-12)) {
      std::ostringstream msg;
      msg << "samples " << i << " and " << i + 1 << " violate |d_i - d_j| <= |t_i - t_j|: "
          << "|" << db << " - " << da << "| > " << dt;
      throw InputError(msg.str());
    }
  }
}

std::vector<ClearanceSample> validated_samples(std::span<const ClearanceSample> samples,
                                               double l, SampleCheck check) {
  if (samples.empty()) {
    throw InputError("samples: at least one sample required");
  }
  std::vector<ClearanceSample> out;
  out.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    require_clearance(samples[i].d, "sample clearance");
    std::ostringstream name;
    name << "sample " << i << " position";
    const double t = clamp_position(samples[i].t, l, name.str().c_str());
    if (!out.empty() && !(t > out.back().t)) {
      std::ostringstream msg;
      msg << "samples: positions must be strictly increasing, violated at index " << i;
      throw InputError(msg.str());
    }
    out.push_back({t, samples[i].d});
  }
  if (check == SampleCheck::Strict) {
    check_consistency(out);
  }
  return out;
}

}  // namespace

const char* to_string(BoundKind kind) noexcept {
  switch (kind) {
    case BoundKind::OneEndpoint: return "one-endpoint";
    case BoundKind::TwoEndpoint: return "two-endpoint";
    case BoundKind::SingleSample: return "single-sample";
    case BoundKind::MultiSample: return "multi-sample";
    case BoundKind::EndpointChain: return "endpoint-chain";
  }
  return "unknown";
}

ArcLengthInfo ArcLengthInfo::exact(double l) {
  require_length(l, "arc length");
  return ArcLengthInfo{l, l};
}

ArcLengthInfo ArcLengthInfo::lower_bound(double lhat) {
  require_length(lhat, "arc length lower bound");
  return ArcLengthInfo{std::nullopt, lhat};
}

double clearance_cone(double d1, double t1, double t) {
  require_clearance(d1, "d1");
  if (!std::isfinite(t1) || !std::isfinite(t)) {
    throw InputError("clearance_cone: positions must be finite");
  }
  return d1 + std::abs(t1 - t);
}

CostBound bound_one_endpoint(double d1, double lhat) {
  require_clearance(d1, "d1");
  require_length(lhat, "lhat");
  return {one_endpoint_term(d1, lhat), BoundKind::OneEndpoint};
}

CostBound bound_two_endpoint(double d1, double d2, double lhat) {
  require_clearance(d1, "d1");
  require_clearance(d2, "d2");
  require_length(lhat, "lhat");
  return {two_endpoint_term(d1, d2, lhat), BoundKind::TwoEndpoint};
}

CostBound bound_single_sample(double d1, double t1, double l) {
  require_clearance(d1, "d1");
  require_length(l, "l");
  const double t = clamp_position(t1, l, "t1");
  return {one_endpoint_term(d1, t) + one_endpoint_term(d1, l - t), BoundKind::SingleSample};
}

CostBound bound_multi_sample(std::span<const ClearanceSample> samples, double l,
                             SampleCheck check) {
  require_length(l, "l");
  const auto s = validated_samples(samples, l, check);
  double value = one_endpoint_term(s.front().d, s.front().t);
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    value += two_endpoint_term(s[i].d, s[i + 1].d, s[i + 1].t - s[i].t);
  }
  value += one_endpoint_term(s.back().d, l - s.back().t);
  return {value, BoundKind::MultiSample};
}

CostBound bound_endpoint_chain(std::span<const ClearanceSample> samples, double l,
                               SampleCheck check) {
  require_length(l, "l");
  if (samples.size() < 2) {
    throw InputError("chain: at least two samples required");
  }
  const double slack = 1e-12 * std::max(1.0, l);
  if (std::abs(samples.front().t) > slack) {
    throw InputError("chain: first sample must sit at t = 0");
  }
  if (std::abs(samples.back().t - l) > slack) {
    throw InputError("chain: last sample must sit at t = l");
  }
  const auto s = validated_samples(samples, l, check);
  double value = 0.0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    value += two_endpoint_term(s[i].d, s[i + 1].d, s[i + 1].t - s[i].t);
  }
  return {value, BoundKind::EndpointChain};
}

}  // namespace clearbound
