#include "skoro/value_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "skoro/primitives.hpp"

namespace skoro {

namespace {

void check_pair(const PolygonalCurve& f, const PolygonalCurve& g, NormKind norm) {
  if (f.dim() != g.dim())
    throw Error(ErrorCode::DimensionMismatch, "curves must share one dimension");
  if (is_skoro(norm) && f.dim() < 2)
    throw Error(ErrorCode::DimensionMismatch, "skoro norm needs value + time coordinates");
  if (f.segments() < 1 || g.segments() < 1)
    throw Error(ErrorCode::BadInput, "curves need at least one segment");
}

double vertex_dist(const PolygonalCurve& f, const PolygonalCurve& g, std::size_t i,
                   std::size_t j, NormKind norm) {
  Point d;
  d.coords.resize(f.dim());
  for (std::size_t k = 0; k < f.dim(); ++k)
    d.coords[k] = f.vertex(i)[k] - g.vertex(j)[k];
  return norm_eval(norm, d);
}

}  // namespace

CriticalValueSet critical_values(const PolygonalCurve& f, const PolygonalCurve& g,
                                 NormKind norm, WindowSpec window, double tol) {
  check_pair(f, g, norm);
  const long mf = static_cast<long>(f.segments());
  const long mg = static_cast<long>(g.segments());
  const long W = window.w ? *window.w : std::numeric_limits<long>::max() / 4;

  std::vector<std::pair<double, CriticalKind>> raw;

  // Type 1: (0,0) and (m_f, m_g) entering the free space.
  raw.emplace_back(vertex_dist(f, g, 0, 0, norm), CriticalKind::endpoint);
  raw.emplace_back(vertex_dist(f, g, mf, mg, norm), CriticalKind::endpoint);

  // Type 2: a monotone curve entering one cell edge; the opening delta is a
  // vertex-to-segment distance. Every vertex of each curve gates an edge
  // line of the diagram, including the final one (paths may run along the
  // closing boundary), so v ranges over 0..m.
  for (long v = 0; v <= mf; ++v)
    for (long j = std::max(0L, v - W - 1); j < std::min(mg, v + W + 1); ++j)
      raw.emplace_back(
          dist_point_segment(f.vertex(v), g.vertex(j), g.vertex(j + 1), norm).delta,
          CriticalKind::entry);
  for (long w = 0; w <= mg; ++w)
    for (long i = std::max(0L, w - W - 1); i < std::min(mf, w + W + 1); ++i)
      raw.emplace_back(
          dist_point_segment(g.vertex(w), f.vertex(i), f.vertex(i + 1), norm).delta,
          CriticalKind::entry);

  // Type 3: a horizontal passage across row j opens when the reach lower
  // bound inherited from edge line v1 meets the free upper bound of edge
  // line v2. Pairwise openings suffice: the per-edge feasible sets are
  // intervals on one line, so they share a point as soon as every pair
  // does. Lower bounds only ever originate at lines v >= 1, upper bounds
  // run up to the closing line v = m_f; columns are symmetric.
  for (long v1 = 1; v1 <= mf; ++v1) {
    const long v2_hi = window.w ? std::min(mf, v1 + 2 * W + 2) : mf;
    for (long v2 = v1 + 1; v2 <= v2_hi; ++v2)
      for (long j = std::max(0L, v2 - W - 1); j <= std::min(mg - 1, v1 + W + 1); ++j)
        raw.emplace_back(min_delta_two_balls_segment(f.vertex(v1), f.vertex(v2), g.vertex(j),
                                                     g.vertex(j + 1), norm),
                         CriticalKind::hclamp);
  }
  for (long w1 = 1; w1 <= mg; ++w1) {
    const long w2_hi = window.w ? std::min(mg, w1 + 2 * W + 2) : mg;
    for (long w2 = w1 + 1; w2 <= w2_hi; ++w2)
      for (long i = std::max(0L, w2 - W - 1); i <= std::min(mf - 1, w1 + W + 1); ++i)
        raw.emplace_back(min_delta_two_balls_segment(g.vertex(w1), g.vertex(w2), f.vertex(i),
                                                     f.vertex(i + 1), norm),
                         CriticalKind::vclamp);
  }

  CriticalValueSet out;
  for (const auto& [v, kind] : raw)
    ++out.raw_counts[static_cast<std::size_t>(kind)];

  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // Merge values within tol, keeping the smallest representative.
  for (const auto& [v, kind] : raw) {
    if (!out.values.empty() && v - out.values.back() <= tol) continue;
    out.values.push_back(v);
    out.kinds.push_back(kind);
  }
  return out;
}

FrechetResult frechet_compute(const PolygonalCurve& f, const PolygonalCurve& g, NormKind norm,
                              WindowSpec window, double tol) {
  const CriticalValueSet cands = critical_values(f, g, norm, window, tol);
  FrechetResult res;
  res.critical_value_count = cands.size();

  // Least candidate accepted by the (cheaper) nonbijective decision.
  const auto accepted = [&](double delta) {
    return decide_frechet(f, g, delta, norm, Mode::nonbijective, window, tol);
  };
  if (cands.size() == 0 || !accepted(cands.values.back())) {
    res.value = std::numeric_limits<double>::infinity();
    return res;
  }
  std::size_t lo = 0, hi = cands.size() - 1;  // least accepted index in [lo, hi]
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (accepted(cands.values[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  res.value = cands.values[lo];
  res.achieved_bijective =
      decide_frechet(f, g, res.value, norm, Mode::bijective, window, tol);
  return res;
}

double frechet_distance(const PolygonalCurve& f, const PolygonalCurve& g, NormKind norm,
                        WindowSpec window, double tol) {
  return frechet_compute(f, g, norm, window, tol).value;
}

FrechetResult skorokhod_compute(const SampledTrace& x, const SampledTrace& y, NormKind base,
                                WindowSpec window, double tol) {
  if (is_skoro(base))
    throw Error(ErrorCode::BadInput, "skorokhod_distance expects a base norm tag");
  if (x.dim() != y.dim())
    throw Error(ErrorCode::DimensionMismatch, "traces must share one value dimension");
  return frechet_compute(lift_trace(x), lift_trace(y), skoro_norm(base), window, tol);
}

double skorokhod_distance(const SampledTrace& x, const SampledTrace& y, NormKind base,
                          WindowSpec window, double tol) {
  return skorokhod_compute(x, y, base, window, tol).value;
}

}  // namespace skoro
