#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "modlat/lattice.hpp"
#include "modlat/pls.hpp"

namespace modlat {

/// A length-two interval [bottom, top] isomorphic to M_n that contains every
/// lower cover of top. `atoms` are those lower covers, sorted.
struct LineInterval {
  Elem bottom = 0;
  Elem top = 0;
  std::vector<Elem> atoms;

  std::size_t n() const noexcept { return atoms.size(); }
};

/// Points are the join-irreducible elements (as element indices). Line k of
/// `pls` has line-top tops[k], bottom bottoms[k] and interval intervals[k].
struct BaseOfLines {
  Pls pls;
  std::vector<Elem> tops;
  std::vector<Elem> bottoms;
  std::vector<LineInterval> intervals;

  std::size_t line_count() const noexcept { return tops.size(); }
};

/// Picks one join-irreducible from `candidates` = J(interval.bottom, atom).
using Chooser = std::function<Elem(const LineInterval& interval, Elem atom,
                                   std::span<const Elem> candidates)>;

/// Smallest element index.
Elem smallest_choice(const LineInterval&, Elem, std::span<const Elem> candidates);

/// All line-intervals, ordered by top. Throws Error{NotModular}.
std::vector<LineInterval> line_intervals(const Lattice& lattice);

/// One join-irreducible per atom of the interval, sorted.
/// Throws Error{EmptyChoice} if some atom has no candidate.
std::vector<Elem> extract_line(const Lattice& lattice, const LineInterval& interval,
                               const Chooser& chooser = smallest_choice);

BaseOfLines canonical_bol(const Lattice& lattice);

struct BolFamily {
  std::vector<BaseOfLines> bols;
  bool truncated = false;  // more bases exist beyond the cap
};

/// Every base of lines, up to `cap` distinct ones.
BolFamily all_bols(const Lattice& lattice, std::size_t cap = 1000);
/// Number of bases of lines, i.e. the product of all per-atom choice counts.
std::size_t bol_count_upper_bound(const Lattice& lattice);

/// Lines recovered from a pairwise join oracle over points 0..n-1. The oracle
/// returns a handle for p + q; equal handles mean equal joins.
struct JoinLines {
  std::vector<std::vector<std::size_t>> lines;
  std::vector<std::size_t> tops;  // join handle of each line
};

JoinLines lines_from_joins(std::size_t point_count,
                           const std::function<std::size_t(std::size_t, std::size_t)>& join);

/// B(a): points J(a), lines whose top lies below a.
BaseOfLines induced(const Lattice& lattice, const BaseOfLines& bol, Elem a);

/// B(a, b) for a covering a < b: points J(a, b), lines restricted from those
/// with top <= b and top not <= a. Throws Error{NotACovering}.
Pls localize(const Lattice& lattice, const BaseOfLines& bol, Elem a, Elem b);

/// Maximal set of join-irreducibles whose pairwise joins all equal p + q,
/// grown greedily from the pair (p, q) in index order.
std::vector<Elem> same_join_family(const Lattice& lattice, Elem p, Elem q);

}  // namespace modlat
