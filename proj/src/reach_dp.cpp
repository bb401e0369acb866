#include "skoro/reach_dp.hpp"

#include <algorithm>
#include <cmath>

namespace skoro {

namespace {

// Lower bound that an entry at coordinate `v` imposes on exit coordinates:
// strictly above it in bijective mode, weakly above otherwise.
EpsValue exit_bound(double v, Mode mode) {
  return mode == Mode::bijective ? EpsValue::just_above(v) : EpsValue::exact(v);
}

EdgeReach reach_on(const Interval& free_span, bool any_entry, const EpsValue& bound) {
  if (!any_entry || free_span.empty()) return EdgeReach::none();
  return EdgeReach::make(eps_max(EpsValue::exact(free_span.lo), bound),
                         EpsValue::exact(free_span.hi));
}

double norm_diff(const PolygonalCurve& f, const PolygonalCurve& g, std::size_t i,
                 std::size_t j, NormKind norm) {
  Point d;
  d.coords.resize(f.dim());
  for (std::size_t k = 0; k < f.dim(); ++k)
    d.coords[k] = f.vertex(i)[k] - g.vertex(j)[k];
  return norm_eval(norm, d);
}

void check_curves(const PolygonalCurve& f, const PolygonalCurve& g, double delta,
                  NormKind norm) {
  if (delta < 0.0) throw Error(ErrorCode::NegativeDelta, "delta must be >= 0");
  if (f.dim() != g.dim())
    throw Error(ErrorCode::DimensionMismatch, "curves must share one dimension");
  if (is_skoro(norm) && f.dim() < 2)
    throw Error(ErrorCode::DimensionMismatch, "skoro norm needs value + time coordinates");
  if (f.segments() < 1 || g.segments() < 1)
    throw Error(ErrorCode::BadInput, "curves need at least one segment");
}

}  // namespace

CellReach propagate_cell(const Cell& cell, const Interval& /*free_left*/,
                         const Interval& /*free_bottom*/, const Interval& free_right,
                         const Interval& free_top, const EdgeReach& left,
                         const EdgeReach& bottom, bool corner, Mode mode) {
  const double x_right = static_cast<double>(cell.i) + 1.0;
  const double y_top = static_cast<double>(cell.j) + 1.0;
  const bool strict = (mode == Mode::bijective);
  CellReach out;

  // Right edge: exits (i+1, y). A corner or bottom entry admits every free
  // exit above the cell floor; a left entry at height y0 admits exits above
  // y0. In bijective mode "above" is strict, applied uniformly to every
  // entry kind: a point at an entry's own height would need a horizontal
  // (non-strict) move, so single-point pinches there drop out.
  {
    bool any = false;
    EpsValue bound;
    auto add = [&](EpsValue b) {
      if (!any || b < bound) bound = b;
      any = true;
    };
    if (corner) add(exit_bound(static_cast<double>(cell.j), mode));
    if (bottom.present && (!strict || bottom.lo < EpsValue::exact(x_right)))
      add(exit_bound(static_cast<double>(cell.j), mode));
    if (left.present) add(exit_bound(left.lo.base, mode));
    out.right = reach_on(free_right, any, bound);
  }

  // Top edge, symmetric: exits (x, j+1).
  {
    bool any = false;
    EpsValue bound;
    auto add = [&](EpsValue b) {
      if (!any || b < bound) bound = b;
      any = true;
    };
    if (corner) add(exit_bound(static_cast<double>(cell.i), mode));
    if (left.present && (!strict || left.lo < EpsValue::exact(y_top)))
      add(exit_bound(static_cast<double>(cell.i), mode));
    if (bottom.present) add(exit_bound(bottom.lo.base, mode));
    out.top = reach_on(free_top, any, bound);
  }

  // Lattice point (i+1, j+1) is reachable iff some reach runs to the exact
  // shared endpoint of the right or top edge.
  out.corner_next = (out.right.present && out.right.hi == EpsValue::exact(y_top)) ||
                    (out.top.present && out.top.hi == EpsValue::exact(x_right));
  return out;
}

namespace {

struct Frontier {
  std::vector<EdgeReach> left;    // reach of the left edge of cell (i, j)
  std::vector<Interval> left_free;
  std::vector<char> corner;       // lattice point (i, j) reachable
};

// Runs the column sweep; when `table` is non-null, stores per-cell reaches
// for witness extraction.
struct CellRecord {
  EdgeReach right, top;
  char corner = 0;  // lattice (i, j)
};

bool run_dp(const PolygonalCurve& f, const PolygonalCurve& g, double delta, NormKind norm,
            Mode mode, WindowSpec window, double tol, std::vector<CellRecord>* table) {
  check_curves(f, g, delta, norm);
  const long mf = static_cast<long>(f.segments());
  const long mg = static_cast<long>(g.segments());

  // (0,0) and (m_f, m_g) must be free before any propagation.
  if (norm_diff(f, g, 0, 0, norm) > delta + tol) return false;
  if (norm_diff(f, g, mf, mg, norm) > delta + tol) return false;

  Frontier cur;
  cur.left.assign(mg, EdgeReach::none());
  cur.left_free.assign(mg, Interval::empty_interval());
  cur.corner.assign(mg + 1, 0);
  cur.corner[0] = 1;

  bool answer = false;
  for (long i = 0; i < mf; ++i) {
    Frontier next;
    next.left.assign(mg, EdgeReach::none());
    next.left_free.assign(mg, Interval::empty_interval());
    next.corner.assign(mg + 1, 0);

    const long jlo = window.w ? std::max(0L, i - *window.w) : 0;
    const long jhi = window.w ? std::min(mg - 1, i + *window.w) : mg - 1;
    EdgeReach bottom = EdgeReach::none();
    Interval bottom_free = Interval::empty_interval();
    for (long j = jlo; j <= jhi; ++j) {
      const Cell cell{i, j};
      const Interval free_right =
          free_edge_interval(f, g, cell, EdgeId::right, delta, norm, tol).span;
      const Interval free_top =
          free_edge_interval(f, g, cell, EdgeId::top, delta, norm, tol).span;
      const CellReach cr =
          propagate_cell(cell, cur.left_free[j], bottom_free, free_right, free_top,
                         cur.left[j], bottom, cur.corner[j] != 0, mode);
      if (table) {
        CellRecord& rec = (*table)[static_cast<std::size_t>(i) * mg + j];
        rec.right = cr.right;
        rec.top = cr.top;
        rec.corner = cur.corner[j];
      }
      next.left[j] = cr.right;
      next.left_free[j] = free_right;
      if (j + 1 <= mg) next.corner[j + 1] = cr.corner_next ? 1 : 0;
      bottom = cr.top;
      bottom_free = free_top;
      if (i == mf - 1 && j == mg - 1) answer = cr.corner_next;
    }
    cur = std::move(next);
  }
  return answer;
}

}  // namespace

bool decide_frechet(const PolygonalCurve& f, const PolygonalCurve& g, double delta,
                    NormKind norm, Mode mode, WindowSpec window, double tol) {
  return run_dp(f, g, delta, norm, mode, window, tol, nullptr);
}

namespace {

struct WitnessBuilder {
  const PolygonalCurve& f;
  const PolygonalCurve& g;
  const std::vector<CellRecord>& table;
  long mg;
  Mode mode;
  std::vector<std::pair<double, double>> rev;  // built backwards

  const CellRecord& at(long i, long j) const {
    return table[static_cast<std::size_t>(i) * mg + j];
  }
  EdgeReach bottom_reach(long i, long j) const {
    return j > 0 ? at(i, j - 1).top : EdgeReach::none();
  }
  EdgeReach left_reach(long i, long j) const {
    return i > 0 ? at(i - 1, j).right : EdgeReach::none();
  }

  // Entry coordinate realizing a reach lower endpoint; nudged up when the
  // endpoint is open or when strictness against `limit` demands it.
  double entry_coord(const EdgeReach& reach, double limit) const {
    double v = reach.lo.base;
    const double cap = std::min(reach.hi.base, limit);
    if (reach.lo.plus || (mode == Mode::bijective && v >= limit)) {
      const double step = std::min(1e-9, (cap - v) / 2.0);
      v = v + std::max(step, 0.0);
    }
    return v;
  }

  void from_corner(long i, long j) {
    if (i == 0 && j == 0) {
      rev.emplace_back(0.0, 0.0);
      return;
    }
    const CellRecord& rec = at(i - 1, j - 1);
    if (rec.right.present && rec.right.hi == EpsValue::exact(static_cast<double>(j)))
      from_right_edge(i - 1, j - 1, static_cast<double>(j));
    else
      from_top_edge(i - 1, j - 1, static_cast<double>(i));
  }

  void from_right_edge(long i, long j, double y) {
    rev.emplace_back(static_cast<double>(i) + 1.0, y);
    const bool strict = (mode == Mode::bijective);
    const CellRecord& rec = at(i, j);
    const EdgeReach bottom = bottom_reach(i, j);
    const EdgeReach left = left_reach(i, j);
    const double jb = static_cast<double>(j);
    if (rec.corner && (!strict || y > jb)) {
      rev.emplace_back(static_cast<double>(i), jb);
      from_corner(i, j);
      return;
    }
    if (bottom.present && (!strict || (y > jb && bottom.lo.base < static_cast<double>(i) + 1.0))) {
      const double x0 = entry_coord(bottom, static_cast<double>(i) + 1.0);
      rev.emplace_back(x0, jb);
      from_top_edge(i, j - 1, x0);
      return;
    }
    const double y0 = entry_coord(left, y);
    rev.emplace_back(static_cast<double>(i), y0);
    from_right_edge(i - 1, j, y0);
  }

  void from_top_edge(long i, long j, double x) {
    rev.emplace_back(x, static_cast<double>(j) + 1.0);
    const bool strict = (mode == Mode::bijective);
    const CellRecord& rec = at(i, j);
    const EdgeReach bottom = bottom_reach(i, j);
    const EdgeReach left = left_reach(i, j);
    const double ib = static_cast<double>(i);
    if (rec.corner && (!strict || x > ib)) {
      rev.emplace_back(ib, static_cast<double>(j));
      from_corner(i, j);
      return;
    }
    if (left.present && (!strict || (x > ib && left.lo.base < static_cast<double>(j) + 1.0))) {
      const double y0 = entry_coord(left, static_cast<double>(j) + 1.0);
      rev.emplace_back(ib, y0);
      from_right_edge(i - 1, j, y0);
      return;
    }
    const double x0 = entry_coord(bottom, x);
    rev.emplace_back(x0, static_cast<double>(j));
    from_top_edge(i, j - 1, x0);
  }
};

}  // namespace

std::vector<std::pair<double, double>> extract_witness(const PolygonalCurve& f,
                                                       const PolygonalCurve& g, double delta,
                                                       NormKind norm, Mode mode,
                                                       WindowSpec window, double tol) {
  const long mf = static_cast<long>(f.segments());
  const long mg = static_cast<long>(g.segments());
  std::vector<CellRecord> table(static_cast<std::size_t>(mf) * mg);
  if (!run_dp(f, g, delta, norm, mode, window, tol, &table))
    throw Error(ErrorCode::NoWitness, "no monotone curve exists at this delta");

  WitnessBuilder wb{f, g, table, mg, mode, {}};
  wb.from_corner(mf, mg);
  std::vector<std::pair<double, double>> path(wb.rev.rbegin(), wb.rev.rend());
  path.erase(std::unique(path.begin(), path.end()), path.end());
  return path;
}

}  // namespace skoro
