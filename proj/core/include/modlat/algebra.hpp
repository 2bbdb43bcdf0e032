#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modlat/lattice.hpp"
#include "modlat/poset.hpp"
#include "modlat/wildcard.hpp"

namespace modlat {

/// Finite abelian group Z_{n1} x ... x Z_{nk}. Elements are encoded as mixed
/// radix integers 0..order-1, the first factor being the most significant.
class Group {
 public:
  /// Throws Error{InvalidInput} for a factor below 2, Error{CapExceeded} if
  /// the order exceeds `cap`.
  explicit Group(std::vector<unsigned> factors, std::size_t cap = 4096);

  const std::vector<unsigned>& factors() const noexcept { return factors_; }
  std::size_t order() const noexcept { return order_; }

  std::size_t encode(const std::vector<unsigned>& tuple) const;
  std::vector<unsigned> decode(std::size_t x) const;
  std::size_t add(std::size_t x, std::size_t y) const;
  std::string element_name(std::size_t x) const;  // "(1,3)"

 private:
  std::vector<unsigned> factors_;
  std::size_t order_ = 1;
};

/// Sorted element codes, always containing 0.
using Subgroup = std::vector<std::size_t>;

Subgroup cyclic_subgroup(const Group& group, std::size_t x);
Subgroup join_subgroups(const Group& group, const Subgroup& h, const Subgroup& k);
/// Nontrivial cyclic subgroups of prime-power order, sorted by size then
/// element codes.
std::vector<Subgroup> join_irreducible_subgroups(const Group& group);
/// A short generator list, e.g. "<(0,1),(2,0)>", or "0" for the trivial group.
std::string subgroup_name(const Group& group, const Subgroup& h);

struct SubgroupLattice {
  Lattice lattice;
  std::vector<Subgroup> subgroups;  // element i of lattice
};

/// All subgroups via join closure of the join-irreducible ones. Throws
/// Error{CapExceeded} when more than `cap` subgroups turn up.
SubgroupLattice subgroup_lattice(const Group& group, std::size_t cap = 4096);

struct EnumerationInput {
  std::vector<Subgroup> points;
  Poset poset;
  std::vector<std::vector<std::size_t>> lines;
};

/// Inclusion poset of the join-irreducible subgroups with lines found from
/// subgroup joins alone.
EnumerationInput enumeration_input(const Group& group);

/// Sets X_1..X_t over a universe W, each given as a bitstring over W.
struct SetSystem {
  std::vector<std::string> universe;
  std::vector<std::string> set_names;
  std::vector<Bitstring> sets;
};

/// Parses the table layout: an optional header of universe names, then one
/// row per set, "X1 = 1 0 1 ..." or just the 0/1 entries.
/// Throws Error{ParseError}.
SetSystem parse_set_system(const std::string& text);

struct DistributiveJi {
  std::vector<Bitstring> sets;          // A_v, deduplicated, sorted by size
  std::vector<std::size_t> uncovered;   // v in no X_i, skipped
};

/// A_v = intersection of all X_i containing v, excluding the bottom of the
/// generated lattice.
DistributiveJi distributive_ji(const SetSystem& system);

struct DistributiveLattice {
  Lattice lattice;
  std::vector<Bitstring> members;  // as subsets of W
  RowSet rows;                     // compressed order ideals of J(D)
};

/// The sublattice of P(W) generated by the sets, via order ideals of J(D).
DistributiveLattice distributive_lattice(const SetSystem& system);

}  // namespace modlat
