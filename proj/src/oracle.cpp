#include "skoro/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace skoro {

namespace {

// Samples of a curve at pitch 1/k per parameter unit, flattened row-major.
struct Sampled {
  std::size_t count = 0;
  std::size_t dim = 0;
  std::vector<double> data;

  const double* at(std::size_t idx) const { return data.data() + idx * dim; }
};

Sampled sample_curve(const PolygonalCurve& c, int k) {
  Sampled s;
  s.dim = c.dim();
  s.count = c.segments() * static_cast<std::size_t>(k) + 1;
  s.data.resize(s.count * s.dim);
  for (std::size_t idx = 0; idx < s.count; ++idx) {
    const std::size_t seg = std::min(idx / static_cast<std::size_t>(k), c.segments() - 1);
    const double lam =
        (static_cast<double>(idx) - static_cast<double>(seg) * k) / k;
    const Point& a = c.vertices[seg];
    const Point& b = c.vertices[seg + 1];
    for (std::size_t d = 0; d < s.dim; ++d)
      s.data[idx * s.dim + d] = a[d] + lam * (b[d] - a[d]);
  }
  return s;
}

double point_dist(const double* a, const double* b, std::size_t dim, NormKind norm) {
  Point d;
  d.coords.resize(dim);
  for (std::size_t k = 0; k < dim; ++k) d.coords[k] = a[k] - b[k];
  return norm_eval(norm, d);
}

double max_segment_slope(const PolygonalCurve& c, NormKind norm) {
  double m = 0.0;
  for (std::size_t i = 0; i < c.segments(); ++i) {
    Point d;
    d.coords.resize(c.dim());
    for (std::size_t k = 0; k < c.dim(); ++k)
      d.coords[k] = c.vertices[i + 1][k] - c.vertices[i][k];
    m = std::max(m, norm_eval(norm, d));
  }
  return m;
}

}  // namespace

OracleBounds oracle_frechet(const PolygonalCurve& f, const PolygonalCurve& g, NormKind norm,
                            GridSpec grid, WindowSpec window) {
  if (f.dim() != g.dim())
    throw Error(ErrorCode::DimensionMismatch, "curves must share one dimension");
  if (grid.k < 2) throw Error(ErrorCode::BadInput, "grid needs k >= 2");

  const Sampled a = sample_curve(f, grid.k);
  const Sampled b = sample_curve(g, grid.k);
  const double inf = std::numeric_limits<double>::infinity();

  // Discrete Frechet min-max recurrence with monotone right/up/diagonal
  // steps, rolling rows. Window restriction in curve parameters maps to
  // |i - j| <= W*k in sample indices.
  const long band = window.w ? *window.w * grid.k : std::numeric_limits<long>::max() / 4;
  std::vector<double> prev(b.count, inf), cur(b.count, inf);
  for (std::size_t i = 0; i < a.count; ++i) {
    std::fill(cur.begin(), cur.end(), inf);
    const long jlo = std::max<long>(0, static_cast<long>(i) - band);
    const long jhi = std::min<long>(b.count - 1, static_cast<long>(i) + band);
    for (long j = jlo; j <= jhi; ++j) {
      double best;
      if (i == 0 && j == 0)
        best = 0.0;
      else {
        best = inf;
        if (j > 0) best = std::min(best, cur[j - 1]);
        if (i > 0) best = std::min(best, prev[j]);
        if (i > 0 && j > 0) best = std::min(best, prev[j - 1]);
        if (best == inf) continue;
      }
      cur[j] = std::max(best, point_dist(a.at(i), b.at(j), a.dim, norm));
    }
    std::swap(prev, cur);
  }

  OracleBounds out;
  out.upper = prev[b.count - 1];
  const double pitch = 1.0 / grid.k;
  const double slope_sum = max_segment_slope(f, norm) + max_segment_slope(g, norm);
  out.lower = std::max(0.0, out.upper - slope_sum * pitch);
  return out;
}

double oracle_point_segment(const Point& s, const Point& z, const Point& zp, NormKind norm,
                            int k) {
  if (k < 2) throw Error(ErrorCode::BadInput, "grid needs k >= 2");
  Point d;
  d.coords.resize(s.dim());
  double best = std::numeric_limits<double>::infinity();
  for (int step = 0; step <= k; ++step) {
    const double lam = static_cast<double>(step) / k;
    for (std::size_t c = 0; c < s.dim(); ++c)
      d.coords[c] = z[c] - s[c] + lam * (zp[c] - z[c]);
    best = std::min(best, norm_eval(norm, d));
  }
  return best;
}

double oracle_min_delta_segment(const Point& s1, const Point& s2, const Point& z,
                                const Point& zp, NormKind norm, int k) {
  if (k < 2) throw Error(ErrorCode::BadInput, "grid needs k >= 2");
  Point d1, d2;
  d1.coords.resize(z.dim());
  d2.coords.resize(z.dim());
  double best = std::numeric_limits<double>::infinity();
  for (int step = 0; step <= k; ++step) {
    const double lam = static_cast<double>(step) / k;
    for (std::size_t c = 0; c < z.dim(); ++c) {
      const double p = z[c] + lam * (zp[c] - z[c]);
      d1.coords[c] = p - s1[c];
      d2.coords[c] = p - s2[c];
    }
    best = std::min(best, std::max(norm_eval(norm, d1), norm_eval(norm, d2)));
  }
  return best;
}

}  // namespace skoro
