#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace modlat {

using PointId = std::size_t;

/// Partial linear space: a point set plus a family of lines (point sets of
/// size >= 2) where two distinct lines share at most one point.
///
/// Points and lines are stored sorted; line indices are stable under
/// split_point so that splittings can be replayed.
class Pls {
 public:
  /// Throws Error{TwoPointIntersection | LineTooSmall | UnknownPoint}.
  static Pls validate(std::vector<PointId> points, std::vector<std::vector<PointId>> lines);

  const std::vector<PointId>& points() const noexcept { return points_; }
  const std::vector<std::vector<PointId>>& lines() const noexcept { return lines_; }
  std::size_t incidence_count() const noexcept;
  bool has_point(PointId p) const noexcept;
  /// First id never used by an input point nor by an earlier splitting.
  PointId next_fresh() const noexcept { return next_fresh_; }

 private:
  friend Pls split_point(const Pls&, std::size_t, PointId);

  std::vector<PointId> points_;
  std::vector<std::vector<PointId>> lines_;
  PointId next_fresh_ = 0;
};

/// Closed walk l0 -p0- l1 -p1- ... l(k-1) -p(k-1)- l0 with distinct lines and
/// distinct junctions; junctions[i] lies on lines[i] and lines[(i+1) % k].
struct PlsCycle {
  std::vector<std::size_t> lines;
  std::vector<PointId> junctions;
};

/// Connected components of the collinearity graph, each sorted, ordered by
/// smallest point.
std::vector<std::vector<PointId>> components(const Pls& pls);

std::optional<PlsCycle> find_cycle(const Pls& pls);
bool is_acyclic(const Pls& pls);

/// Detach `line` from `point`, attaching it to a fresh point instead.
/// Throws Error{PointNotOnLine}.
Pls split_point(const Pls& pls, std::size_t line, PointId point);

/// Minimum number of splittings that make the space acyclic without changing
/// its number of components: the cyclomatic number E - V + c of the
/// point-line incidence graph.
std::size_t rstar(const Pls& pls);

struct Splitting {
  std::size_t line = 0;
  PointId point = 0;
};

/// Exactly rstar(pls) splittings, each on a cycle of the space it is applied to.
std::vector<Splitting> acyclifier(const Pls& pls);
Pls apply_splittings(const Pls& pls, std::span<const Splitting> splittings);

}  // namespace modlat
