#include "skoro/core_types.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace skoro {

bool is_skoro(NormKind norm) {
  return norm == NormKind::L1Skoro || norm == NormKind::L2Skoro ||
         norm == NormKind::LinfSkoro;
}

NormKind base_norm(NormKind norm) {
  switch (norm) {
    case NormKind::L1Skoro: return NormKind::L1;
    case NormKind::L2Skoro: return NormKind::L2;
    case NormKind::LinfSkoro: return NormKind::Linf;
    default: return norm;
  }
}

NormKind skoro_norm(NormKind base) {
  switch (base) {
    case NormKind::L1: return NormKind::L1Skoro;
    case NormKind::L2: return NormKind::L2Skoro;
    case NormKind::Linf: return NormKind::LinfSkoro;
    default: return base;
  }
}

const char* norm_name(NormKind norm) {
  switch (norm) {
    case NormKind::L1: return "l1";
    case NormKind::L2: return "l2";
    case NormKind::Linf: return "linf";
    case NormKind::L1Skoro: return "l1-skoro";
    case NormKind::L2Skoro: return "l2-skoro";
    case NormKind::LinfSkoro: return "linf-skoro";
  }
  return "?";
}

NormKind parse_norm(const std::string& name) {
  std::string s;
  s.reserve(name.size());
  for (char c : name) s.push_back(static_cast<char>(std::tolower(c)));
  if (s == "l1") return NormKind::L1;
  if (s == "l2") return NormKind::L2;
  if (s == "linf" || s == "loo" || s == "lmax") return NormKind::Linf;
  if (s == "l1-skoro" || s == "l1skoro") return NormKind::L1Skoro;
  if (s == "l2-skoro" || s == "l2skoro") return NormKind::L2Skoro;
  if (s == "linf-skoro" || s == "linfskoro") return NormKind::LinfSkoro;
  throw Error(ErrorCode::BadInput, "unknown norm: " + name);
}

SampledTrace validate_trace(const std::vector<std::pair<double, std::vector<double>>>& raw) {
  if (raw.size() < 2)
    throw Error(ErrorCode::TooFewSamples, "trace needs at least 2 samples");
  const std::size_t n = raw.front().second.size();
  if (n == 0)
    throw Error(ErrorCode::DimensionMismatch, "samples need at least one coordinate");
  SampledTrace trace;
  trace.samples.reserve(raw.size());
  double prev_t = 0.0;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const auto& [t, coords] = raw[k];
    if (!std::isfinite(t))
      throw Error(ErrorCode::NonFiniteValue, "non-finite timestamp at sample " + std::to_string(k));
    if (k > 0 && t <= prev_t)
      throw Error(ErrorCode::NonIncreasingTime,
                  "timestamps must be strictly increasing at sample " + std::to_string(k));
    prev_t = t;
    if (coords.size() != n)
      throw Error(ErrorCode::DimensionMismatch,
                  "sample " + std::to_string(k) + " has dimension " +
                      std::to_string(coords.size()) + ", expected " + std::to_string(n));
    for (double v : coords)
      if (!std::isfinite(v))
        throw Error(ErrorCode::NonFiniteValue, "non-finite value at sample " + std::to_string(k));
    trace.samples.push_back({t, Point(coords)});
  }
  return trace;
}

PolygonalCurve interpolate(const SampledTrace& trace) {
  PolygonalCurve curve;
  curve.vertices.reserve(trace.size());
  for (const auto& s : trace.samples) curve.vertices.push_back(s.value);
  return curve;
}

PolygonalCurve lift_trace(const SampledTrace& trace) {
  PolygonalCurve curve;
  curve.vertices.reserve(trace.size());
  for (const auto& s : trace.samples) {
    Point p = s.value;
    p.coords.push_back(s.t);
    curve.vertices.push_back(std::move(p));
  }
  return curve;
}

Point curve_point(const PolygonalCurve& curve, double rho) {
  const double m = static_cast<double>(curve.segments());
  if (!(rho >= 0.0 && rho <= m))
    throw Error(ErrorCode::OutOfDomain, "curve parameter " + std::to_string(rho) +
                                            " outside [0," + std::to_string(m) + "]");
  std::size_t i = static_cast<std::size_t>(rho);
  if (i >= curve.segments()) i = curve.segments() - 1;  // rho == m
  const double lam = rho - static_cast<double>(i);
  const Point& a = curve.vertices[i];
  const Point& b = curve.vertices[i + 1];
  Point out;
  out.coords.resize(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k)
    out.coords[k] = a[k] + lam * (b[k] - a[k]);
  return out;
}

namespace {

double accumulate_norm(NormKind base, const double* v, std::size_t n) {
  switch (base) {
    case NormKind::L1: {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += std::abs(v[k]);
      return s;
    }
    case NormKind::L2: {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += v[k] * v[k];
      return std::sqrt(s);
    }
    default: {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s = std::max(s, std::abs(v[k]));
      return s;
    }
  }
}

}  // namespace

double norm_eval(NormKind norm, const Point& v) {
  const std::size_t n = v.dim();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "empty vector");
  if (!is_skoro(norm)) return accumulate_norm(norm, v.coords.data(), n);
  if (n < 2)
    throw Error(ErrorCode::DimensionMismatch, "skoro norm needs value + time coordinates");
  const double value_part = accumulate_norm(base_norm(norm), v.coords.data(), n - 1);
  return std::max(value_part, std::abs(v.coords[n - 1]));
}

double norm_eval_affine(NormKind norm, const std::vector<double>& c,
                        const std::vector<double>& r, double x) {
  Point p;
  p.coords.resize(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) p.coords[k] = c[k] + x * r[k];
  return norm_eval(norm, p);
}

}  // namespace skoro
