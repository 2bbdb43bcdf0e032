#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modlat/bol.hpp"
#include "modlat/lattice.hpp"
#include "modlat/poset.hpp"
#include "modlat/wildcard.hpp"

namespace modlat {

/// Family of subsets ordered by inclusion; element i is family[i]. The family
/// must form a lattice under inclusion. Covers come from the transitive
/// reduction of strict containment.
Lattice inclusion_lattice(const std::vector<Bitstring>& family, std::vector<std::string> names = {});

struct ClosureLattice {
  Lattice lattice;
  std::vector<Bitstring> members;  // element i of lattice is members[i]
};

/// Members are sorted by size, then lexicographically, and named "{p1,p4}"
/// style from `point_names` (indices when empty).
/// Throws Error{NotAClosureSystem} if the empty set is missing or two
/// members intersect outside the family.
ClosureLattice closed_ideals_lattice(std::vector<Bitstring> members,
                                     const std::vector<std::string>& point_names = {});

/// The join-irreducibles of a lattice as an abstract poset with lines over
/// positions 0..|J|-1; points[i] is the element behind position i.
struct PointData {
  std::vector<Elem> points;
  Poset poset;
  std::vector<std::vector<std::size_t>> lines;
};

PointData point_data(const Lattice& lattice, const BaseOfLines& bol);

struct RoundtripReport {
  std::size_t original_size = 0;
  std::size_t rebuilt_size = 0;
  bool isomorphic = false;
  bool ideal_map_bijective = false;  // a -> J(a) hits every member exactly once

  bool ok() const noexcept { return isomorphic && ideal_map_bijective; }
};

/// Canonical base of lines, enumeration, rebuild and isomorphism test.
RoundtripReport roundtrip_check(const Lattice& lattice);

struct Implication {
  std::vector<std::size_t> premise;
  std::vector<std::size_t> conclusion;
};
using ImplicationSet = std::vector<Implication>;

/// {p} -> (points strictly below p) for every non-minimal p, and {p, q} -> l
/// for every pair of distinct points on a line l.
ImplicationSet sigma_nat(const Poset& poset, const std::vector<std::vector<std::size_t>>& lines);

/// Least superset of `start` closed under every implication.
std::vector<std::size_t> horn_closure(const ImplicationSet& sigma, std::vector<std::size_t> start);

/// Sum of all premise and conclusion sizes.
std::size_t sigma_size(const ImplicationSet& sigma);

}  // namespace modlat
