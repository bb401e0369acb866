#include "skoro/freespace.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace skoro {

namespace {

// Feasible set of |c + r*x| <= d over x in [0,1] for one coordinate.
Interval coord_interval(double c, double r, double d) {
  if (r == 0.0) return std::abs(c) <= d ? Interval(0.0, 1.0) : Interval::empty_interval();
  double a = (-d - c) / r;
  double b = (d - c) / r;
  if (a > b) std::swap(a, b);
  return Interval(a, b).intersect(Interval(0.0, 1.0));
}

Interval linf_interval(const std::vector<double>& c, const std::vector<double>& r,
                       std::size_t n, double d) {
  Interval out(0.0, 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    out = out.intersect(coord_interval(c[k], r[k], d));
    if (out.empty()) return Interval::empty_interval();
  }
  return out;
}

// Feasible set of the convex piecewise-linear sum of absolute values: one
// left-to-right scan over the breakpoint pieces, solving the linear
// equation piece(x) = d on the entering and leaving pieces.
Interval l1_interval(const std::vector<double>& c, const std::vector<double>& r,
                     std::size_t n, double d) {
  std::vector<double> xs;
  xs.push_back(0.0);
  xs.push_back(1.0);
  for (std::size_t k = 0; k < n; ++k)
    if (r[k] != 0.0) {
      const double x = -c[k] / r[k];
      if (x > 0.0 && x < 1.0) xs.push_back(x);
    }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<double> vals(xs.size());
  for (std::size_t p = 0; p < xs.size(); ++p) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += std::abs(c[k] + r[k] * xs[p]);
    vals[p] = s;
  }

  std::size_t first = xs.size(), last = xs.size();
  for (std::size_t p = 0; p < xs.size(); ++p)
    if (vals[p] <= d) {
      if (first == xs.size()) first = p;
      last = p;
    }
  if (first == xs.size()) return Interval::empty_interval();

  double lo = xs[first];
  if (first > 0 && vals[first - 1] > d)  // crossing inside the entering piece
    lo = xs[first - 1] + (vals[first - 1] - d) / (vals[first - 1] - vals[first]) *
                             (xs[first] - xs[first - 1]);
  double hi = xs[last];
  if (last + 1 < xs.size() && vals[last + 1] > d)
    hi = xs[last] + (d - vals[last]) / (vals[last + 1] - vals[last]) *
                        (xs[last + 1] - xs[last]);
  return Interval(lo, hi);
}

Interval l2_interval(const std::vector<double>& c, const std::vector<double>& r,
                     std::size_t n, double d, double tol) {
  double A = 0.0, B = 0.0, C = -d * d;
  for (std::size_t k = 0; k < n; ++k) {
    A += r[k] * r[k];
    B += 2.0 * c[k] * r[k];
    C += c[k] * c[k];
  }
  if (A == 0.0)  // constant difference along the edge
    return C <= 0.0 ? Interval(0.0, 1.0) : Interval::empty_interval();
  const double disc = B * B - 4.0 * A * C;
  const double disc_scale = std::max({1.0, B * B, std::abs(4.0 * A * C)});
  if (disc < -tol * disc_scale) return Interval::empty_interval();
  if (disc <= 0.0) {  // tangent up to rounding: a single point
    const double x = -B / (2.0 * A);
    return (x >= 0.0 && x <= 1.0) ? Interval(x, x) : Interval::empty_interval();
  }
  const double sq = std::sqrt(disc);
  return Interval((-B - sq) / (2.0 * A), (-B + sq) / (2.0 * A)).intersect(Interval(0.0, 1.0));
}

Interval local_feasible(const std::vector<double>& c, const std::vector<double>& r,
                        NormKind norm, double d, double tol) {
  const std::size_t n = c.size();
  if (!is_skoro(norm)) {
    switch (norm) {
      case NormKind::L1: return l1_interval(c, r, n, d);
      case NormKind::L2: return l2_interval(c, r, n, d, tol);
      default: return linf_interval(c, r, n, d);
    }
  }
  // Base norm on the value coordinates intersected with the time band.
  const std::size_t nv = n - 1;
  Interval time_part = coord_interval(c[nv], r[nv], d);
  if (time_part.empty()) return Interval::empty_interval();
  Interval value_part;
  switch (base_norm(norm)) {
    case NormKind::L1: value_part = l1_interval(c, r, nv, d); break;
    case NormKind::L2: value_part = l2_interval(c, r, nv, d, tol); break;
    default: value_part = linf_interval(c, r, nv, d); break;
  }
  return value_part.intersect(time_part);
}

}  // namespace

EdgeInterval free_edge_interval(const PolygonalCurve& f, const PolygonalCurve& g, Cell cell,
                                EdgeId edge, double delta, NormKind norm, double tol) {
  if (delta < 0.0) throw Error(ErrorCode::NegativeDelta, "delta must be >= 0");
  if (f.dim() != g.dim())
    throw Error(ErrorCode::DimensionMismatch, "curves must share one dimension");
  if (is_skoro(norm) && f.dim() < 2)
    throw Error(ErrorCode::DimensionMismatch, "skoro norm needs value + time coordinates");
  if (cell.i < 0 || cell.j < 0 || cell.i >= static_cast<long>(f.segments()) ||
      cell.j >= static_cast<long>(g.segments()))
    throw Error(ErrorCode::OutOfDomain, "cell outside the free-space diagram");

  const std::size_t n = f.dim();
  const Point* fa = &f.vertices[cell.i];
  const Point* fb = &f.vertices[cell.i + 1];
  const Point* ga = &g.vertices[cell.j];
  const Point* gb = &g.vertices[cell.j + 1];

  // Difference along the edge as c + x*r with local x in [0,1].
  std::vector<double> c(n), r(n);
  const bool horizontal = (edge == EdgeId::bottom || edge == EdgeId::top);
  for (std::size_t k = 0; k < n; ++k) {
    switch (edge) {
      case EdgeId::bottom:
        c[k] = (*fa)[k] - (*ga)[k];
        r[k] = (*fb)[k] - (*fa)[k];
        break;
      case EdgeId::top:
        c[k] = (*fa)[k] - (*gb)[k];
        r[k] = (*fb)[k] - (*fa)[k];
        break;
      case EdgeId::left:
        c[k] = (*fa)[k] - (*ga)[k];
        r[k] = (*ga)[k] - (*gb)[k];
        break;
      case EdgeId::right:
        c[k] = (*fb)[k] - (*ga)[k];
        r[k] = (*ga)[k] - (*gb)[k];
        break;
    }
  }

  const Interval local = local_feasible(c, r, norm, delta + tol, tol);
  EdgeInterval out;
  out.edge = edge;
  if (local.empty()) return out;
  const double origin = horizontal ? static_cast<double>(cell.i) : static_cast<double>(cell.j);
  out.span = Interval(origin + local.lo, origin + local.hi);
  return out;
}

}  // namespace skoro
