#ifndef SKORO_FREESPACE_HPP
#define SKORO_FREESPACE_HPP

#include "skoro/core_types.hpp"

namespace skoro {

struct Cell {
  long i = 0;  // segment index into f
  long j = 0;  // segment index into g
};

// Edges of a cell counted anticlockwise from the bottom.
enum class EdgeId { bottom = 0, right = 1, top = 2, left = 3 };

// Free sub-segment of one cell edge in absolute diagram coordinates: the
// f-parameter range for bottom/top edges, the g-parameter range for
// left/right edges. Convexity of the cell free space makes it an interval.
struct EdgeInterval {
  EdgeId edge = EdgeId::bottom;
  Interval span;
};

// The set {x on edge : ||f(rho_f) - g(rho_g)|| <= delta}, computed exactly
// per norm; comparisons against delta carry the absolute tolerance `tol`.
EdgeInterval free_edge_interval(const PolygonalCurve& f, const PolygonalCurve& g, Cell cell,
                                EdgeId edge, double delta, NormKind norm,
                                double tol = kDefaultTol);

}  // namespace skoro

#endif
