#ifndef SKORO_REACH_DP_HPP
#define SKORO_REACH_DP_HPP

#include <optional>
#include <utility>
#include <vector>

#include "skoro/core_types.hpp"
#include "skoro/freespace.hpp"

namespace skoro {

// bijective = strictly increasing reparameterizations; nonbijective =
// continuous non-decreasing ones. The Frechet VALUE is the same under both
// (the infimum may just not be achieved bijectively).
enum class Mode { bijective, nonbijective };

struct WindowSpec {
  // Cells with |i - j| > w are treated as entirely non-free.
  std::optional<long> w;

  static WindowSpec unbounded() { return {}; }
  static WindowSpec bounded(long width) {
    if (width < 1) throw Error(ErrorCode::BadInput, "window must be >= 1");
    WindowSpec s;
    s.w = width;
    return s;
  }
  bool inside(long i, long j) const { return !w || std::labs(i - j) <= *w; }
};

// Monotone-curve-reachable sub-portion of one cell edge, in absolute diagram
// coordinates of the edge's varying parameter. The plus tags implement the
// epsilon bookkeeping of the strictly-increasing mode; tags never appear in
// nonbijective mode.
struct EdgeReach {
  bool present = false;
  EpsValue lo;
  EpsValue hi;

  static EdgeReach none() { return {}; }
  static EdgeReach make(EpsValue lo, EpsValue hi) {
    if (hi < lo) return {};
    return {true, lo, hi};
  }
};

struct CellReach {
  EdgeReach right;
  EdgeReach top;
  // Whether the lattice point (i+1, j+1) is reachable exactly (the corner
  // set of the diagonally-next cell).
  bool corner_next = false;
};

// One step of the reachability recurrence on cell (i,j). Free intervals are
// the four edge spans at the same delta (empty Interval = no free points);
// `corner` says whether the lattice point (i,j) is itself reachable.
CellReach propagate_cell(const Cell& cell, const Interval& free_left,
                         const Interval& free_bottom, const Interval& free_right,
                         const Interval& free_top, const EdgeReach& left,
                         const EdgeReach& bottom, bool corner, Mode mode);

// Whether a monotone curve from (0,0) to (m_f, m_g) exists in the delta-free
// space, strictly increasing (bijective) or non-decreasing (nonbijective).
bool decide_frechet(const PolygonalCurve& f, const PolygonalCurve& g, double delta,
                    NormKind norm, Mode mode, WindowSpec window = WindowSpec::unbounded(),
                    double tol = kDefaultTol);

// Monotone path witnessing decide_frechet(...) == true, as (rho_f, rho_g)
// breakpoints from (0,0) to (m_f, m_g). Throws NoWitness when the decision
// is false.
std::vector<std::pair<double, double>> extract_witness(
    const PolygonalCurve& f, const PolygonalCurve& g, double delta, NormKind norm, Mode mode,
    WindowSpec window = WindowSpec::unbounded(), double tol = kDefaultTol);

}  // namespace skoro

#endif
