#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "modlat/lattice.hpp"
#include "modlat/pls.hpp"
#include "modlat/poset.hpp"
#include "modlat/rebuild.hpp"

namespace modlat::catalog {

Lattice chain(std::size_t length);
/// Bottom, n atoms, top. Throws Error{InvalidInput} for n < 1.
Lattice mn(std::size_t n);
/// Subsets of a k-set.
Lattice boolean(std::size_t k);
/// N_5, the smallest non-modular lattice.
Lattice pentagon();
Lattice subgroups(const std::vector<unsigned>& factors);

/// Seven points 0..6 and the seven lines {i, i+1, i+3} mod 7.
Pls fano();

/// Seven points p1..p7 with p1 < p4, p2 < p5, p2 < p6, p3 < p7, and lines
/// {p1,p2,p3}, {p1,p5,p6}, {p4,p6,p7} over positions 0..6.
Poset toy_poset();
std::vector<std::vector<std::size_t>> toy_lines();

/// Eight subsets of {a,...,h,k} in the table layout read by parse_set_system.
std::string eight_sets_text();

/// An optimal implicational base over the join-irreducibles 2, 3, 4, 6, 7,
/// 10, 12, 14, 15, 16 of a fixed lattice, by label.
ImplicationSet optimal_base_fixture();

/// Random partial order on n points: each pair i < j related with
/// probability `density`, then transitively closed.
Poset random_poset(std::size_t n, double density, std::uint64_t seed);
/// Lattice of down-sets of `poset`, built through enumerate and rebuild.
Lattice downset_lattice(const Poset& poset);

struct Named {
  std::string name;
  Lattice lattice;
};

/// The verification corpus: subgroup lattices of Z2^3, Z4xZ4, Z2xZ4, Z8,
/// Z3xZ3, Z2xZ2xZ4, then M3, Boolean 2^3, chains of length 0..3 and
/// `random_count` down-set lattices of random posets on at most 8 points.
std::vector<Named> corpus(std::size_t random_count = 20, std::uint64_t seed = 20240607);

/// Subgroup lattices with cycles of line-tops: Z2xZ8 and Z2xZ16 (short
/// cycles only), Z4xZ8 and Z9xZ9 (with clean cycles).
std::vector<Named> cycle_corpus();

}  // namespace modlat::catalog
