#include "modlat/bol.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "modlat/error.hpp"

namespace modlat {

namespace {

void require_modular(const Lattice& lattice) {
  if (!lattice.modular()) throw Error(ErrorCode::NotModular, "lattice is not modular");
}

std::vector<PointId> ji_points(const Lattice& lattice) {
  std::vector<PointId> pts;
  for (const auto& ji : join_irreducibles(lattice)) pts.push_back(ji.elem);
  return pts;
}

BaseOfLines assemble(const Lattice& lattice, const std::vector<LineInterval>& intervals,
                     std::vector<std::vector<PointId>> lines) {
  BaseOfLines bol;
  bol.pls = Pls::validate(ji_points(lattice), std::move(lines));
  for (const auto& iv : intervals) {
    bol.tops.push_back(iv.top);
    bol.bottoms.push_back(iv.bottom);
  }
  bol.intervals = intervals;
  return bol;
}

}  // namespace

Elem smallest_choice(const LineInterval&, Elem, std::span<const Elem> candidates) {
  return *std::min_element(candidates.begin(), candidates.end());
}

std::vector<LineInterval> line_intervals(const Lattice& lattice) {
  require_modular(lattice);
  std::vector<LineInterval> out;
  for (Elem x = 0; x < lattice.size(); ++x) {
    const auto& lower = lattice.lower_covers(x);
    if (lower.size() < 3) continue;
    const Elem x0 = lattice.meet_all(lower);
    if (lattice.rank(x) - lattice.rank(x0) != 2) continue;
    bool ok = true;
    for (Elem y = 0; y < lattice.size() && ok; ++y) {
      if (lattice.lt(x0, y) && lattice.lt(y, x))
        ok = std::binary_search(lower.begin(), lower.end(), y);
    }
    if (ok) out.push_back({x0, x, lower});
  }
  return out;
}

std::vector<Elem> extract_line(const Lattice& lattice, const LineInterval& interval,
                               const Chooser& chooser) {
  std::vector<Elem> line;
  for (Elem atom : interval.atoms) {
    const auto candidates = ji_between(lattice, interval.bottom, atom);
    if (candidates.empty())
      throw Error(ErrorCode::EmptyChoice, "no join-irreducible in J(" + lattice.name(interval.bottom) +
                                              ", " + lattice.name(atom) + ")");
    const Elem p = chooser(interval, atom, candidates);
    if (!std::binary_search(candidates.begin(), candidates.end(), p) ||
        lattice.join(interval.bottom, p) != atom)
      throw Error(ErrorCode::ClaimViolated, "chooser returned " + lattice.name(p) +
                                                " outside J(" + lattice.name(interval.bottom) + ", " +
                                                lattice.name(atom) + ")");
    line.push_back(p);
  }
  std::sort(line.begin(), line.end());
  return line;
}

BaseOfLines canonical_bol(const Lattice& lattice) {
  const auto intervals = line_intervals(lattice);
  std::vector<std::vector<PointId>> lines;
  for (const auto& iv : intervals) lines.push_back(extract_line(lattice, iv));
  return assemble(lattice, intervals, std::move(lines));
}

std::size_t bol_count_upper_bound(const Lattice& lattice) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 1;
  for (const auto& iv : line_intervals(lattice)) {
    for (Elem atom : iv.atoms) {
      const std::size_t k = ji_between(lattice, iv.bottom, atom).size();
      if (k != 0 && total > kMax / k) return kMax;
      total *= k;
    }
  }
  return total;
}

BolFamily all_bols(const Lattice& lattice, std::size_t cap) {
  const auto intervals = line_intervals(lattice);

  // One odometer digit per (interval, atom) slot.
  struct Slot {
    std::size_t interval;
    std::vector<Elem> candidates;
  };
  std::vector<Slot> slots;
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    for (Elem atom : intervals[k].atoms) {
      auto cands = ji_between(lattice, intervals[k].bottom, atom);
      if (cands.empty())
        throw Error(ErrorCode::EmptyChoice, "no join-irreducible in J(" +
                                                lattice.name(intervals[k].bottom) + ", " +
                                                lattice.name(atom) + ")");
      slots.push_back({k, std::move(cands)});
    }
  }

  BolFamily family;
  std::set<std::vector<std::vector<PointId>>> seen;
  std::vector<std::size_t> digit(slots.size(), 0);
  while (true) {
    if (family.bols.size() == cap) {
      family.truncated = true;
      break;
    }
    std::vector<std::vector<PointId>> lines(intervals.size());
    for (std::size_t s = 0; s < slots.size(); ++s)
      lines[slots[s].interval].push_back(slots[s].candidates[digit[s]]);
    for (auto& l : lines) std::sort(l.begin(), l.end());
    if (seen.insert(lines).second) family.bols.push_back(assemble(lattice, intervals, lines));

    bool advanced = false;
    for (std::size_t s = slots.size(); s-- > 0;) {
      if (++digit[s] < slots[s].candidates.size()) {
        advanced = true;
        break;
      }
      digit[s] = 0;
    }
    if (!advanced) break;
  }
  return family;
}

JoinLines lines_from_joins(std::size_t point_count,
                           const std::function<std::size_t(std::size_t, std::size_t)>& join) {
  const std::size_t n = point_count;
  std::vector<std::size_t> table(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) table[p * n + q] = table[q * n + p] = join(p, q);

  JoinLines out;
  std::set<std::size_t> done;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const std::size_t x = table[p * n + q];
      if (done.count(x)) continue;
      std::vector<std::size_t> family{p, q};
      for (std::size_t r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        bool fits = true;
        for (std::size_t m : family)
          if (table[r * n + m] != x) {
            fits = false;
            break;
          }
        if (fits) family.push_back(r);
      }
      if (family.size() < 3) continue;
      done.insert(x);
      std::sort(family.begin(), family.end());
      out.lines.push_back(std::move(family));
      out.tops.push_back(x);
    }
  }
  return out;
}

std::vector<Elem> same_join_family(const Lattice& lattice, Elem p, Elem q) {
  const Elem x = lattice.join(p, q);
  std::vector<Elem> family{p, q};
  for (const auto& ji : join_irreducibles(lattice)) {
    const Elem r = ji.elem;
    if (r == p || r == q) continue;
    bool fits = true;
    for (Elem m : family)
      if (lattice.join(r, m) != x) {
        fits = false;
        break;
      }
    if (fits) family.push_back(r);
  }
  std::sort(family.begin(), family.end());
  return family;
}

BaseOfLines induced(const Lattice& lattice, const BaseOfLines& bol, Elem a) {
  std::vector<PointId> points;
  for (PointId p : bol.pls.points())
    if (lattice.leq(p, a)) points.push_back(p);
  BaseOfLines out;
  std::vector<std::vector<PointId>> lines;
  for (std::size_t k = 0; k < bol.line_count(); ++k) {
    if (!lattice.leq(bol.tops[k], a)) continue;
    lines.push_back(bol.pls.lines()[k]);
    out.tops.push_back(bol.tops[k]);
    out.bottoms.push_back(bol.bottoms[k]);
    out.intervals.push_back(bol.intervals[k]);
  }
  out.pls = Pls::validate(std::move(points), std::move(lines));
  return out;
}

Pls localize(const Lattice& lattice, const BaseOfLines& bol, Elem a, Elem b) {
  if (!lattice.is_cover(a, b))
    throw Error(ErrorCode::NotACovering,
                lattice.name(a) + " is not covered by " + lattice.name(b));
  std::vector<PointId> points;
  for (PointId p : bol.pls.points())
    if (lattice.leq(p, b) && !lattice.leq(p, a)) points.push_back(p);

  std::set<std::vector<PointId>> lines;
  for (std::size_t k = 0; k < bol.line_count(); ++k) {
    const Elem top = bol.tops[k];
    if (!lattice.leq(top, b) || lattice.leq(top, a)) continue;
    const auto& line = bol.pls.lines()[k];
    std::vector<PointId> kept;
    for (PointId p : line)
      if (!lattice.leq(p, a)) kept.push_back(p);
    if (kept.size() + 1 != line.size())
      throw Error(ErrorCode::ClaimViolated, "restriction of the line with top " + lattice.name(top) +
                                                " drops " + std::to_string(line.size() - kept.size()) +
                                                " points instead of one");
    lines.insert(std::move(kept));
  }
  return Pls::validate(std::move(points), {lines.begin(), lines.end()});
}

}  // namespace modlat
