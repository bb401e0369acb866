#ifndef SKORO_ORACLE_HPP
#define SKORO_ORACLE_HPP

#include "skoro/core_types.hpp"
#include "skoro/reach_dp.hpp"

namespace skoro {

// Subdivisions per curve parameter unit for the brute-force references.
struct GridSpec {
  int k = 100;
};

struct OracleBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// Discrete Frechet min-max DP over the sampled grid. The discrete value is
// an upper bound on the continuous one; the lower bound subtracts the
// curves' maximum per-unit slopes times the grid pitch.
OracleBounds oracle_frechet(const PolygonalCurve& f, const PolygonalCurve& g, NormKind norm,
                            GridSpec grid, WindowSpec window = WindowSpec::unbounded());

// Min over k+1 uniform lambda samples of the point-to-segment distance.
double oracle_point_segment(const Point& s, const Point& z, const Point& zp, NormKind norm,
                            int k);

// Min over the lambda grid of the max of the two point distances.
double oracle_min_delta_segment(const Point& s1, const Point& s2, const Point& z,
                                const Point& zp, NormKind norm, int k);

}  // namespace skoro

#endif
