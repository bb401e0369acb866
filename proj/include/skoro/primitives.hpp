#ifndef SKORO_PRIMITIVES_HPP
#define SKORO_PRIMITIVES_HPP

#include <vector>

#include "skoro/core_types.hpp"

namespace skoro {

// One absolute-value term lambda -> |a + b*lambda|.
struct AbsTerm {
  double a = 0.0;
  double b = 0.0;
};

// value(lambda) = max over groups of (sum of its terms). Convex piecewise
// linear on R; every epigraph LP from the point/segment and two-ball
// primitives reduces to one of these with lambda as the sole variable.
struct PLObjective {
  std::vector<std::vector<AbsTerm>> groups;

  double value(double lambda) const;
};

struct PLMinimum {
  double lambda = 0.0;  // smallest minimizer over the domain
  double value = 0.0;
};

PLMinimum pl_convex_minimize(const PLObjective& obj, const Interval& domain);

struct PointSegmentDistance {
  double delta = 0.0;
  double lambda = 0.0;  // smallest minimizer in [0,1]
};

// min over lambda in [0,1] of ||z - s + lambda*(z' - z)|| for the given norm.
// For skoro norms the last coordinate is the time coordinate.
PointSegmentDistance dist_point_segment(const Point& s, const Point& z, const Point& zp,
                                        NormKind norm);

// Least delta >= 0 such that some point of line(z,z') lies in both
// ball(s1, delta) and ball(s2, delta); equivalently
// min over lambda of max of the two point distances.
double min_delta_two_balls_segment(const Point& s1, const Point& s2, const Point& z,
                                   const Point& zp, NormKind norm);

// 1-D instance on the time axis: least delta such that some
// t in [min(tz,tzp), max(tz,tzp)] is within delta of both ts1 and ts2.
// Requires tz != tzp.
double delta_dagger(double ts1, double ts2, double tz, double tzp);

}  // namespace skoro

#endif
