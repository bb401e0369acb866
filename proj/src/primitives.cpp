#include "skoro/primitives.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace skoro {

namespace {

void check_dims(const Point& a, const Point& b, const Point& c, NormKind norm) {
  if (a.dim() != b.dim() || b.dim() != c.dim())
    throw Error(ErrorCode::DimensionMismatch, "points must share one dimension");
  if (is_skoro(norm) && a.dim() < 2)
    throw Error(ErrorCode::DimensionMismatch, "skoro norm needs value + time coordinates");
  if (a.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "empty points");
}

double dot_range(const Point& a, const Point& b, std::size_t n) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += a[k] * b[k];
  return s;
}

double l2_range(const Point& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += a[k] * a[k];
  return std::sqrt(s);
}

Point sub(const Point& a, const Point& b) {
  Point r;
  r.coords.resize(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) r.coords[k] = a[k] - b[k];
  return r;
}

double ternary_min(double lo, double hi, const auto& g) {
  for (int it = 0; it < 200; ++it) {
    const double a = lo + (hi - lo) / 3.0;
    const double b = hi - (hi - lo) / 3.0;
    if (g(a) <= g(b)) hi = b; else lo = a;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double PLObjective::value(double lambda) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& group : groups) {
    double s = 0.0;
    for (const AbsTerm& t : group) s += std::abs(t.a + t.b * lambda);
    best = std::max(best, s);
  }
  return best;
}

PLMinimum pl_convex_minimize(const PLObjective& obj, const Interval& domain) {
  if (domain.empty()) throw Error(ErrorCode::EmptyDomain, "empty minimization domain");
  if (obj.groups.empty()) throw Error(ErrorCode::BadInput, "objective needs at least one group");

  // Candidate minimizers: kinks of the terms, domain endpoints, and the
  // group-crossover points inside each linear piece.
  std::vector<double> kinks;
  kinks.push_back(domain.lo);
  kinks.push_back(domain.hi);
  for (const auto& group : obj.groups)
    for (const AbsTerm& t : group)
      if (t.b != 0.0) {
        const double x = -t.a / t.b;
        if (x > domain.lo && x < domain.hi) kinks.push_back(x);
      }
  std::sort(kinks.begin(), kinks.end());
  kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());

  std::vector<double> candidates = kinks;
  std::vector<std::pair<double, double>> lines(obj.groups.size());
  for (std::size_t p = 0; p + 1 < kinks.size(); ++p) {
    const double xl = kinks[p], xr = kinks[p + 1];
    const double xm = 0.5 * (xl + xr);
    for (std::size_t g = 0; g < obj.groups.size(); ++g) {
      double A = 0.0, B = 0.0;
      for (const AbsTerm& t : obj.groups[g]) {
        const double sign = (t.a + t.b * xm >= 0.0) ? 1.0 : -1.0;
        A += sign * t.a;
        B += sign * t.b;
      }
      lines[g] = {A, B};
    }
    for (std::size_t g = 0; g < lines.size(); ++g)
      for (std::size_t h = g + 1; h < lines.size(); ++h) {
        if (lines[g].second == lines[h].second) continue;
        const double xc =
            (lines[h].first - lines[g].first) / (lines[g].second - lines[h].second);
        if (xc > xl && xc < xr) candidates.push_back(xc);
      }
  }
  std::sort(candidates.begin(), candidates.end());

  PLMinimum best{candidates.front(), obj.value(candidates.front())};
  for (double x : candidates) {
    const double v = obj.value(x);
    if (v < best.value) best = {x, v};
  }
  return best;
}

namespace {

// --- L2 closed forms -------------------------------------------------------

struct L2Foot {
  double lambda_raw = 0.0;  // unclamped perpendicular foot
  double lambda = 0.0;      // clamped to [0,1]
  double dist = 0.0;        // distance at the clamped foot
};

L2Foot l2_foot(const Point& s, const Point& z, const Point& v, std::size_t n) {
  L2Foot f;
  const double vv = dot_range(v, v, n);
  if (vv == 0.0) {
    f.lambda_raw = 0.0;
    f.lambda = 0.0;
    f.dist = l2_range(sub(z, s), n);
    return f;
  }
  Point sz = sub(s, z);
  f.lambda_raw = dot_range(v, sz, n) / vv;
  f.lambda = std::clamp(f.lambda_raw, 0.0, 1.0);
  Point d = sub(z, s);
  for (std::size_t k = 0; k < n; ++k) d.coords[k] += f.lambda * v[k];
  f.dist = l2_range(d, n);
  return f;
}

double l2_dist_at(const Point& s, const Point& z, const Point& v, double lam, std::size_t n) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double d = z[k] - s[k] + lam * v[k];
    acc += d * d;
  }
  return std::sqrt(acc);
}

// Restricted to the first n coordinates (value part of skoro points).
double phi_l2(const Point& s1, const Point& s2, const Point& z, const Point& zp,
              std::size_t n) {
  const Point v = sub(zp, z);
  bool z_equal = true, s_equal = true;
  for (std::size_t k = 0; k < n; ++k) {
    if (z[k] != zp[k]) z_equal = false;
    if (s1[k] != s2[k]) s_equal = false;
  }
  // Single point: both balls must contain it.
  if (z_equal)
    return std::max(l2_range(sub(s1, z), n), l2_range(sub(s2, z), n));
  if (s_equal) return l2_foot(s1, z, v, n).dist;

  const L2Foot f1 = l2_foot(s1, z, v, n);
  const L2Foot f2 = l2_foot(s2, z, v, n);
  double best = std::numeric_limits<double>::infinity();
  // delta = dist(s_i, segment) already suffices when the other ball covers
  // that foot; the least such candidate wins.
  if (l2_dist_at(s2, z, v, f1.lambda, n) <= f1.dist) best = std::min(best, f1.dist);
  if (l2_dist_at(s1, z, v, f2.lambda, n) <= f2.dist) best = std::min(best, f2.dist);
  if (best < std::numeric_limits<double>::infinity()) return best;

  // Otherwise the optimum is the unique point equidistant to s1 and s2.
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double ds = s2[k] - s1[k];
    num += ds * (s2[k] + s1[k] - 2.0 * z[k]);
    den += ds * (zp[k] - z[k]);
  }
  den *= 2.0;
  if (den == 0.0) return std::max(f1.dist, f2.dist);
  const double lam = std::clamp(num / den, 0.0, 1.0);
  return std::max(l2_dist_at(s1, z, v, lam, n), l2_dist_at(s2, z, v, lam, n));
}

// --- L2-skoro point/segment ------------------------------------------------

double time_point_segment(double ts, double ta, double tb) {
  const double lo = std::min(ta, tb), hi = std::max(ta, tb);
  if (ts < lo) return lo - ts;
  if (ts > hi) return ts - hi;
  return 0.0;
}

// Distance under max(L2 on the first n coords, |.| on the last): the two
// feasibility boundaries are an increasing and a decreasing curve of delta,
// so the optimum sits at one of a handful of analytic spots.
double psi_l2_skoro(const Point& s_in, const Point& z_in, const Point& zp_in) {
  const std::size_t n = s_in.dim() - 1;
  Point s = s_in, z = z_in, zp = zp_in;
  const double ts = s[n];

  bool z_equal = true;
  for (std::size_t k = 0; k < n; ++k)
    if (z[k] != zp[k]) z_equal = false;
  const bool t_equal = (z[n] == zp[n]);

  if (z_equal && t_equal)
    return std::max(l2_range(sub(z, s), n), std::abs(z[n] - ts));
  if (z_equal)
    return std::max(l2_range(sub(z, s), n), time_point_segment(ts, z[n], zp[n]));
  if (t_equal) {
    const Point v = sub(zp, z);
    return std::max(l2_foot(s, z, v, n).dist, std::abs(ts - z[n]));
  }

  // General case; normalize so the time foot sits right of the value foot.
  Point v = sub(zp, z);
  double lambda_p = l2_foot(s, z, v, n).lambda;
  double lambda_ts = (ts - z[n]) / (zp[n] - z[n]);
  if (lambda_ts < lambda_p) {
    std::swap(z, zp);
    v = sub(zp, z);
    lambda_p = 1.0 - lambda_p;
    lambda_ts = 1.0 - lambda_ts;
  }
  const double dt = zp[n] - z[n];
  const double abs_dt = std::abs(dt);
  const double seg_dist = l2_foot(s, z, v, n).dist;

  // Where does the shrinking time band first meet the growing value band?
  // Past the far endpoint: the time constraint alone fixes delta. At or
  // before the foot: the segment distance already satisfies both. The foot
  // test must use the band width at seg_dist, not at the endpoint distance.
  const double alpha = lambda_ts - l2_range(sub(zp, s), n) / abs_dt;
  if (alpha > 1.0) return (lambda_ts - 1.0) * abs_dt;
  if (lambda_ts - seg_dist / abs_dt <= lambda_p) return seg_dist;

  // Value and time distances agree at the optimum: a quadratic in lambda.
  const double wt = z[n] - ts;
  double A = -dt * dt, B = -2.0 * wt * dt, C = -wt * wt;
  for (std::size_t k = 0; k < n; ++k) {
    const double wk = z[k] - s[k];
    A += v[k] * v[k];
    B += 2.0 * wk * v[k];
    C += wk * wk;
  }
  const auto eval = [&](double lam) {
    return std::max(l2_dist_at(s, z, v, lam, n), std::abs(wt + lam * dt));
  };
  const double span = std::abs(lambda_p) + std::abs(lambda_ts) + 1.0;
  const double slack = 1e-9 * span;
  std::vector<double> roots;
  if (std::abs(A) > 1e-14 * (std::abs(B) + std::abs(C) + 1.0)) {
    const double disc = B * B - 4.0 * A * C;
    if (disc >= 0.0) {
      const double sq = std::sqrt(disc);
      roots.push_back((-B - sq) / (2.0 * A));
      roots.push_back((-B + sq) / (2.0 * A));
    }
  } else if (B != 0.0) {
    roots.push_back(-C / B);
  }
  const double hi_cap = std::min(lambda_ts, 1.0);
  double best_lam = std::numeric_limits<double>::quiet_NaN();
  double best_gap = std::numeric_limits<double>::infinity();
  for (double r : roots) {
    if (r < lambda_p - slack || r > hi_cap + slack) continue;
    const double gap =
        std::abs(l2_dist_at(s, z, v, r, n) - std::abs(wt + r * dt));
    if (gap < best_gap || (gap == best_gap && r < best_lam)) {
      best_gap = gap;
      best_lam = r;
    }
  }
  if (std::isnan(best_lam))  // fp-degenerate coefficients; the objective stays convex
    best_lam = ternary_min(std::max(0.0, lambda_p), hi_cap, eval);
  return eval(std::clamp(best_lam, 0.0, 1.0));
}

// Groups for ||z - s + lambda v||-style constraints. L1 sums all coordinates
// in one group, Linf makes every coordinate its own group, and the skoro
// variants put the time coordinate in a singleton group of its own.
PLObjective abs_group_objective(std::initializer_list<const Point*> points, const Point& z,
                                const Point& v, std::size_t n, NormKind norm) {
  PLObjective obj;
  const bool split_time = (norm == NormKind::L1Skoro);
  const bool singletons = (norm == NormKind::Linf || norm == NormKind::LinfSkoro);
  const std::size_t nv = split_time ? n - 1 : n;
  for (const Point* s : points) {
    if (singletons) {
      for (std::size_t k = 0; k < nv; ++k)
        obj.groups.push_back({{z[k] - (*s)[k], v[k]}});
    } else {
      std::vector<AbsTerm> g;
      for (std::size_t k = 0; k < nv; ++k) g.push_back({z[k] - (*s)[k], v[k]});
      obj.groups.push_back(std::move(g));
    }
    if (split_time)
      obj.groups.push_back({{z[n - 1] - (*s)[n - 1], v[n - 1]}});
  }
  return obj;
}

}  // namespace

PointSegmentDistance dist_point_segment(const Point& s, const Point& z, const Point& zp,
                                        NormKind norm) {
  check_dims(s, z, zp, norm);
  const std::size_t n = s.dim();
  const Point v = sub(zp, z);

  switch (norm) {
    case NormKind::L2: {
      const L2Foot f = l2_foot(s, z, v, n);
      return {f.dist, f.lambda};
    }
    case NormKind::L1: {
      PLObjective obj = abs_group_objective({&s}, z, v, n, norm);
      const PLMinimum m = pl_convex_minimize(obj, Interval(0.0, 1.0));
      return {m.value, m.lambda};
    }
    case NormKind::Linf:
    case NormKind::LinfSkoro: {
      PLObjective obj = abs_group_objective({&s}, z, v, n, norm);
      const PLMinimum m = pl_convex_minimize(obj, Interval(0.0, 1.0));
      return {m.value, m.lambda};
    }
    case NormKind::L1Skoro: {
      PLObjective obj = abs_group_objective({&s}, z, v, n, norm);
      const PLMinimum m = pl_convex_minimize(obj, Interval(0.0, 1.0));
      return {m.value, m.lambda};
    }
    case NormKind::L2Skoro: {
      const double delta = psi_l2_skoro(s, z, zp);
      // Smallest feasible lambda at level delta: intersect the value and
      // time feasibility intervals.
      const std::size_t nv = n - 1;
      const double pad = delta + 1e-12 * (1.0 + delta);
      double lo = 0.0, hi = 1.0;
      {
        const double dt = v[nv];
        const double wt = z[nv] - s[nv];
        if (dt != 0.0) {
          const double a = (-pad - wt) / dt, b = (pad - wt) / dt;
          lo = std::max(lo, std::min(a, b));
          hi = std::min(hi, std::max(a, b));
        }
      }
      {
        double A = 0.0, B = 0.0, C = -pad * pad;
        for (std::size_t k = 0; k < nv; ++k) {
          const double wk = z[k] - s[k];
          A += v[k] * v[k];
          B += 2.0 * wk * v[k];
          C += wk * wk;
        }
        if (A > 0.0) {
          const double disc = B * B - 4.0 * A * C;
          if (disc >= 0.0) {
            const double sq = std::sqrt(disc);
            lo = std::max(lo, (-B - sq) / (2.0 * A));
            hi = std::min(hi, (-B + sq) / (2.0 * A));
          }
        }
      }
      const double lam = std::clamp(lo <= hi ? lo : 0.5 * (lo + hi), 0.0, 1.0);
      return {delta, lam};
    }
  }
  throw Error(ErrorCode::BadInput, "unhandled norm");
}

double min_delta_two_balls_segment(const Point& s1, const Point& s2, const Point& z,
                                   const Point& zp, NormKind norm) {
  check_dims(s1, s2, z, norm);
  check_dims(s1, s2, zp, norm);
  const std::size_t n = s1.dim();
  const Point v = sub(zp, z);

  switch (norm) {
    case NormKind::L1: {
      PLObjective obj = abs_group_objective({&s1, &s2}, z, v, n, norm);
      return pl_convex_minimize(obj, Interval(0.0, 1.0)).value;
    }
    case NormKind::Linf:
    case NormKind::LinfSkoro: {
      PLObjective obj = abs_group_objective({&s1, &s2}, z, v, n, norm);
      return pl_convex_minimize(obj, Interval(0.0, 1.0)).value;
    }
    case NormKind::L1Skoro: {
      PLObjective obj = abs_group_objective({&s1, &s2}, z, v, n, norm);
      return pl_convex_minimize(obj, Interval(0.0, 1.0)).value;
    }
    case NormKind::L2:
      return phi_l2(s1, s2, z, zp, n);
    case NormKind::L2Skoro: {
      const std::size_t nv = n - 1;
      if (s1 == s2) return dist_point_segment(s1, z, zp, NormKind::L2Skoro).delta;
      if (z == zp)
        return std::max({l2_range(sub(s1, z), nv), std::abs(s1[nv] - z[nv]),
                         l2_range(sub(s2, z), nv), std::abs(s2[nv] - z[nv])});
      bool z_equal = true;
      for (std::size_t k = 0; k < nv; ++k)
        if (z[k] != zp[k]) z_equal = false;
      const bool t_equal = (z[nv] == zp[nv]);
      if (z_equal)  // time segment only
        return std::max({l2_range(sub(s1, z), nv), l2_range(sub(s2, z), nv),
                         delta_dagger(s1[nv], s2[nv], z[nv], zp[nv])});
      if (t_equal)
        return std::max({std::abs(z[nv] - s1[nv]), std::abs(z[nv] - s2[nv]),
                         phi_l2(s1, s2, z, zp, nv)});
      // Helly with d = 1: the optimum over the four constraint families is
      // the max of the pairwise optima, including the two cross terms.
      auto with_time = [&](const Point& p, double t) {
        Point q = p;
        q.coords[nv] = t;
        return q;
      };
      const double d11 = dist_point_segment(s1, z, zp, NormKind::L2Skoro).delta;
      const double d22 = dist_point_segment(s2, z, zp, NormKind::L2Skoro).delta;
      const double d12 = dist_point_segment(with_time(s1, s2[nv]), z, zp, NormKind::L2Skoro).delta;
      const double d21 = dist_point_segment(with_time(s2, s1[nv]), z, zp, NormKind::L2Skoro).delta;
      const double dvv = phi_l2(s1, s2, z, zp, nv);
      const double dtt = delta_dagger(s1[nv], s2[nv], z[nv], zp[nv]);
      return std::max({d11, d22, d12, d21, dvv, dtt});
    }
  }
  throw Error(ErrorCode::BadInput, "unhandled norm");
}

double delta_dagger(double ts1, double ts2, double tz, double tzp) {
  if (tz == tzp)
    throw Error(ErrorCode::DegenerateTimeSegment, "time segment endpoints coincide");
  const double lo = std::min(ts1, ts2), hi = std::max(ts1, ts2);
  const double a = std::min(tz, tzp), b = std::max(tz, tzp);
  // Least delta with [lo-d, lo+d], [hi-d, hi+d] and [a, b] sharing a point.
  return std::max({0.5 * (hi - lo), hi - b, a - lo, 0.0});
}

}  // namespace skoro
