#pragma once

// Brute-force reference implementations. None of these call into the code
// paths they are used to check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "modlat/algebra.hpp"
#include "modlat/error.hpp"
#include "modlat/lattice.hpp"
#include "modlat/pls.hpp"
#include "modlat/poset.hpp"
#include "modlat/wildcard.hpp"

namespace oracle {

using Lines = std::vector<std::vector<std::size_t>>;
using Mask = std::uint64_t;

inline bool bit(Mask m, std::size_t i) { return (m >> i) & 1U; }

inline modlat::Bitstring to_bits(Mask m, std::size_t n) {
  modlat::Bitstring b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = bit(m, i);
  return b;
}

inline Mask to_mask(const modlat::Bitstring& b) {
  Mask m = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) m |= Mask{1} << i;
  return m;
}

/// Every subset of the points that is down-closed and contains each line it
/// meets in two points.
inline std::set<Mask> closed_ideals(const modlat::Poset& poset, const Lines& lines) {
  const std::size_t n = poset.size();
  std::set<Mask> out;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    bool ok = true;
    for (std::size_t p = 0; p < n && ok; ++p)
      if (bit(x, p))
        for (std::size_t q = 0; q < n && ok; ++q)
          if (poset.leq(q, p) && !bit(x, q)) ok = false;
    for (const auto& l : lines) {
      if (!ok) break;
      std::size_t hit = 0;
      for (std::size_t p : l) hit += bit(x, p);
      if (hit >= 2 && hit < l.size()) ok = false;
    }
    if (ok) out.insert(x);
  }
  return out;
}

inline std::set<Mask> masks(const std::vector<modlat::Bitstring>& xs) {
  std::set<Mask> out;
  for (const auto& x : xs) out.insert(to_mask(x));
  return out;
}

/// Number of subgroups, by testing every subset containing 0 for closure
/// under addition.
inline std::size_t subgroup_count(const std::vector<unsigned>& factors) {
  std::size_t order = 1;
  for (unsigned f : factors) order *= f;
  auto add = [&](std::size_t x, std::size_t y) {
    std::size_t out = 0, scale = 1;
    for (std::size_t k = factors.size(); k-- > 0;) {
      const std::size_t a = x % factors[k], b = y % factors[k];
      out += ((a + b) % factors[k]) * scale;
      scale *= factors[k];
      x /= factors[k];
      y /= factors[k];
    }
    return out;
  };
  std::size_t count = 0;
  for (Mask s = 1; s < (Mask{1} << order); s += 2) {
    bool closed = true;
    for (std::size_t x = 0; x < order && closed; ++x)
      if (bit(s, x))
        for (std::size_t y = x; y < order && closed; ++y)
          if (bit(s, y) && !bit(s, add(x, y))) closed = false;
    count += closed;
  }
  return count;
}

/// Closure of a family of sets under pairwise union and intersection.
inline std::set<Mask> union_intersection_closure(const std::vector<Mask>& sets) {
  std::set<Mask> family(sets.begin(), sets.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Mask> now(family.begin(), family.end());
    for (Mask a : now)
      for (Mask b : now)
        grew |= family.insert(a | b).second | family.insert(a & b).second;
  }
  return family;
}

/// Members of a finite family (closed under meets) with exactly one lower
/// cover under inclusion.
inline std::set<Mask> join_irreducibles(const std::set<Mask>& family) {
  std::set<Mask> out;
  for (Mask x : family) {
    std::size_t lower = 0;
    for (Mask y : family) {
      if (y == x || (y & ~x)) continue;
      bool cover = true;
      for (Mask z : family)
        if (z != x && z != y && !(y & ~z) && !(z & ~x)) cover = false;
      lower += cover;
    }
    if (lower == 1) out.insert(x);
  }
  return out;
}

/// Incidence graph of a space as (line, point) edges over vertex ids: lines
/// first, then points in order.
struct Incidence {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline Incidence incidence(const modlat::Pls& pls) {
  Incidence g;
  std::map<modlat::PointId, std::size_t> slot;
  for (auto p : pls.points()) slot.emplace(p, pls.lines().size() + slot.size());
  g.vertices = pls.lines().size() + pls.points().size();
  for (std::size_t l = 0; l < pls.lines().size(); ++l)
    for (auto p : pls.lines()[l]) g.edges.push_back({l, slot.at(p)});
  return g;
}

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

/// Components and forest test of an incidence graph where the edges flagged
/// in `cut` are moved onto fresh point vertices.
struct Shape {
  std::size_t components = 0;
  bool forest = true;
};

inline Shape shape(const Incidence& g, const std::vector<bool>& cut) {
  Dsu dsu(g.vertices + g.edges.size());
  Shape s;
  std::size_t vertices = g.vertices;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [l, p] = g.edges[e];
    const std::size_t target = cut[e] ? vertices++ : p;
    if (!dsu.unite(l, target)) s.forest = false;
  }
  std::set<std::size_t> roots;
  for (std::size_t v = 0; v < vertices; ++v) roots.insert(dsu.find(v));
  s.components = roots.size();
  return s;
}

inline bool has_cycle(const modlat::Pls& pls) {
  const Incidence g = incidence(pls);
  return !shape(g, std::vector<bool>(g.edges.size(), false)).forest;
}

/// Smallest number of incidences whose cutting leaves a forest with the same
/// number of components, by trying all subsets of growing size.
inline std::size_t min_splittings(const modlat::Pls& pls, std::size_t limit) {
  const Incidence g = incidence(pls);
  const std::size_t m = g.edges.size();
  const std::size_t base = shape(g, std::vector<bool>(m, false)).components;
  for (std::size_t k = 0; k <= std::min(limit, m); ++k) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      const Shape s = shape(g, pick);
      if (s.forest && s.components == base) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return SIZE_MAX;
}

/// Random partial linear space: lines drawn as random point sets of size 2..4,
/// rejected when they share two points with an earlier line.
inline modlat::Pls random_pls(std::mt19937_64& rng, std::size_t max_points, std::size_t max_lines) {
  std::uniform_int_distribution<std::size_t> npts(3, max_points), nlines(0, max_lines),
      len(2, 4);
  const std::size_t n = npts(rng);
  const std::size_t want = nlines(rng);
  std::vector<modlat::PointId> points(n);
  std::iota(points.begin(), points.end(), 0);
  std::vector<std::vector<modlat::PointId>> lines;
  for (std::size_t attempt = 0; attempt < 50 && lines.size() < want; ++attempt) {
    std::vector<modlat::PointId> l = points;
    std::shuffle(l.begin(), l.end(), rng);
    l.resize(std::min(n, len(rng)));
    std::sort(l.begin(), l.end());
    bool ok = true;
    for (const auto& other : lines) {
      std::vector<modlat::PointId> common;
      std::set_intersection(l.begin(), l.end(), other.begin(), other.end(), std::back_inserter(common));
      if (common.size() >= 2) ok = false;
    }
    if (ok) lines.push_back(l);
  }
  return modlat::Pls::validate(points, lines);
}

/// Random lines over the points of a poset: 0..max_lines sets of size 3..4
/// that pairwise share at most one point.
inline Lines random_lines(std::mt19937_64& rng, std::size_t n, std::size_t max_lines) {
  Lines lines;
  if (n < 3) return lines;
  std::uniform_int_distribution<std::size_t> count(0, max_lines), len(3, std::min<std::size_t>(4, n));
  const std::size_t want = count(rng);
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t attempt = 0; attempt < 40 && lines.size() < want; ++attempt) {
    auto l = all;
    std::shuffle(l.begin(), l.end(), rng);
    l.resize(len(rng));
    std::sort(l.begin(), l.end());
    bool ok = true;
    for (const auto& other : lines) {
      std::vector<std::size_t> common;
      std::set_intersection(l.begin(), l.end(), other.begin(), other.end(), std::back_inserter(common));
      if (common.size() >= 2) ok = false;
    }
    if (ok) lines.push_back(l);
  }
  return lines;
}

/// Random row: cells visited in random order and made fixed, free, or the
/// start of a group of a random kind over the next few free cells.
inline modlat::Row random_row(std::mt19937_64& rng, std::size_t width) {
  using modlat::GroupKind;
  modlat::Row row(width);
  std::vector<std::size_t> order(width);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> pick(0, 9);
  std::uniform_int_distribution<std::size_t> gsize(2, 4);
  std::size_t k = 0;
  while (k < order.size()) {
    const int c = pick(rng);
    if (c <= 1) {
      row.fix(order[k++], c == 1);
    } else if (c <= 4) {
      ++k;
    } else {
      const std::size_t size = std::min(gsize(rng), order.size() - k);
      std::vector<std::size_t> cells(order.begin() + static_cast<std::ptrdiff_t>(k),
                                     order.begin() + static_cast<std::ptrdiff_t>(k + size));
      k += size;
      modlat::GroupSpec spec;
      spec.kind = static_cast<GroupKind>(c - 5);
      if (spec.kind == GroupKind::Imp) {
        if (cells.size() < 2) continue;
        const std::size_t split = 1 + rng() % (cells.size() - 1);
        spec.members.assign(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(split));
        spec.implied.assign(cells.begin() + static_cast<std::ptrdiff_t>(split), cells.end());
        std::sort(spec.members.begin(), spec.members.end());
        std::sort(spec.implied.begin(), spec.implied.end());
      } else {
        std::sort(cells.begin(), cells.end());
        spec.members = cells;
      }
      try {
        row.add_group(spec);
      } catch (const modlat::Error&) {
      }
    }
  }
  return row;
}

inline bool is_down_closed(const modlat::Poset& poset, Mask x) {
  for (std::size_t p = 0; p < poset.size(); ++p)
    if (bit(x, p))
      for (std::size_t q = 0; q < poset.size(); ++q)
        if (poset.leq(q, p) && !bit(x, q)) return false;
  return true;
}

}  // namespace oracle
