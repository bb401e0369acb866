#ifndef SKORO_CORE_TYPES_HPP
#define SKORO_CORE_TYPES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace skoro {

constexpr double kDefaultTol = 1e-9;

enum class ErrorCode {
  NonIncreasingTime,
  DimensionMismatch,
  NonFiniteValue,
  TooFewSamples,
  OutOfDomain,
  NegativeDelta,
  EmptyDomain,
  NoWitness,
  DegenerateTimeSegment,
  BadInput,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Point {
  std::vector<double> coords;

  Point() = default;
  explicit Point(std::vector<double> c) : coords(std::move(c)) {}
  Point(std::initializer_list<double> c) : coords(c) {}

  std::size_t dim() const { return coords.size(); }
  double operator[](std::size_t k) const { return coords[k]; }
  double& operator[](std::size_t k) { return coords[k]; }
  bool operator==(const Point& o) const { return coords == o.coords; }
};

struct Sample {
  double t = 0.0;
  Point value;
};

// Time-stamped samples with strictly increasing timestamps and uniform
// value dimension. Construct through validate_trace.
struct SampledTrace {
  std::vector<Sample> samples;

  std::size_t dim() const { return samples.empty() ? 0 : samples.front().value.dim(); }
  std::size_t size() const { return samples.size(); }
};

// Curve on [0, m] affine on each unit parameter interval;
// vertex k sits at parameter k.
struct PolygonalCurve {
  std::vector<Point> vertices;

  std::size_t dim() const { return vertices.empty() ? 0 : vertices.front().dim(); }
  std::size_t segments() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  const Point& vertex(std::size_t k) const { return vertices[k]; }
};

enum class NormKind { L1, L2, Linf, L1Skoro, L2Skoro, LinfSkoro };

bool is_skoro(NormKind norm);
NormKind base_norm(NormKind norm);   // L1Skoro -> L1 etc.; identity on base tags
NormKind skoro_norm(NormKind base);  // L1 -> L1Skoro etc.
const char* norm_name(NormKind norm);
NormKind parse_norm(const std::string& name);  // "l1" / "l2" / "linf" (+ "-skoro" suffix)

// Value with an optional symbolic "just above" marker. Total order:
// (a, exact) < (a, plus) < (b, exact) for a < b. Raising is idempotent;
// no other arithmetic exists on the marker.
struct EpsValue {
  double base = 0.0;
  bool plus = false;

  static EpsValue exact(double v) { return {v, false}; }
  static EpsValue just_above(double v) { return {v, true}; }
  EpsValue raised() const { return {base, true}; }

  bool operator==(const EpsValue& o) const { return base == o.base && plus == o.plus; }
  bool operator<(const EpsValue& o) const {
    if (base != o.base) return base < o.base;
    return !plus && o.plus;
  }
  bool operator<=(const EpsValue& o) const { return *this == o || *this < o; }
  bool operator>(const EpsValue& o) const { return o < *this; }
  bool operator>=(const EpsValue& o) const { return o <= *this; }
};

inline EpsValue eps_max(const EpsValue& a, const EpsValue& b) { return a < b ? b : a; }
inline EpsValue eps_min(const EpsValue& a, const EpsValue& b) { return a < b ? a : b; }

// Closed interval; empty encoded as lo > hi.
struct Interval {
  double lo = 1.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double l, double h) : lo(l), hi(h) {}
  static Interval empty_interval() { return Interval(); }

  bool empty() const { return lo > hi; }
  bool contains(double x) const { return !empty() && lo <= x && x <= hi; }
  Interval intersect(const Interval& o) const {
    if (empty() || o.empty()) return empty_interval();
    Interval r(lo > o.lo ? lo : o.lo, hi < o.hi ? hi : o.hi);
    return r.empty() ? empty_interval() : r;
  }
};

SampledTrace validate_trace(const std::vector<std::pair<double, std::vector<double>>>& raw);

// Curve over the trace values; timestamps are dropped (see lift_trace).
PolygonalCurve interpolate(const SampledTrace& trace);

// Curve in R^{n+1}: value coordinates followed by the timestamp. Segment k
// maps affinely onto curve parameter [k, k+1]; the reparameterization is
// strictly increasing, so Frechet distances are unchanged.
PolygonalCurve lift_trace(const SampledTrace& trace);

Point curve_point(const PolygonalCurve& curve, double rho);

double norm_eval(NormKind norm, const Point& v);

// Norm of c + x*r without materializing the point.
double norm_eval_affine(NormKind norm, const std::vector<double>& c,
                        const std::vector<double>& r, double x);

}  // namespace skoro

#endif
