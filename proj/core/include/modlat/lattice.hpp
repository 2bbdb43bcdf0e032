#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace modlat {

/// Dense element index 0..n-1 of a finite lattice.
using Elem = std::size_t;

/// A quotient [lower, upper] with lower <= upper. Prime when upper covers lower.
struct Quotient {
  Elem lower = 0;
  Elem upper = 0;

  friend auto operator<=>(const Quotient&, const Quotient&) = default;
};

struct JoinIrreducible {
  Elem elem = 0;
  Elem lower_star = 0;  // the unique lower cover

  friend bool operator==(const JoinIrreducible&, const JoinIrreducible&) = default;
};

/// Finite lattice presented by its Hasse diagram.
///
/// Construction validates the cover relation (acyclic, transitively reduced)
/// and the lattice axioms, and precomputes the order, join and meet tables as
/// well as the longest-chain rank of every element. Instances are immutable.
class Lattice {
 public:
  /// Throws Error{NotALattice | CycleInCovers | NotTransitivelyReduced | InvalidInput}.
  static Lattice build(std::size_t n, std::span<const Quotient> covers,
                       std::vector<std::string> names = {});
  static Lattice build(std::vector<std::string> names, std::span<const Quotient> covers);

  /// Placeholder with no elements; only build() yields usable lattices.
  Lattice() = default;

  std::size_t size() const noexcept { return n_; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  bool leq(Elem x, Elem y) const noexcept {
    return (up_[x * words_ + y / 64] >> (y % 64)) & 1U;
  }
  bool lt(Elem x, Elem y) const noexcept { return x != y && leq(x, y); }
  bool comparable(Elem x, Elem y) const noexcept { return leq(x, y) || leq(y, x); }
  bool is_cover(Elem lower, Elem upper) const noexcept;

  Elem join(Elem x, Elem y) const noexcept { return join_[x * n_ + y]; }
  Elem meet(Elem x, Elem y) const noexcept { return meet_[x * n_ + y]; }
  Elem join_all(std::span<const Elem> xs) const noexcept;
  Elem meet_all(std::span<const Elem> xs) const noexcept;

  /// Length of the longest chain from bottom to x.
  int rank(Elem x) const noexcept { return rank_[x]; }
  int height() const noexcept { return rank_[top_]; }

  const std::vector<Elem>& lower_covers(Elem x) const noexcept { return lower_[x]; }
  const std::vector<Elem>& upper_covers(Elem x) const noexcept { return upper_[x]; }
  /// All prime quotients, sorted.
  const std::vector<Quotient>& covers() const noexcept { return covers_; }

  const std::string& name(Elem x) const noexcept { return names_[x]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Elem> find(std::string_view name) const;

  /// Cached result of the modularity test run at build time.
  bool modular() const noexcept { return modular_; }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  Elem bottom_ = 0;
  Elem top_ = 0;
  bool modular_ = false;
  std::vector<std::string> names_;
  std::vector<std::vector<Elem>> lower_;
  std::vector<std::vector<Elem>> upper_;
  std::vector<Quotient> covers_;
  std::vector<std::uint64_t> up_;  // row x holds the up-set of x
  std::vector<std::uint32_t> join_;
  std::vector<std::uint32_t> meet_;
  std::vector<int> rank_;
};

/// x + (y·z) = (x + y)·z for all x <= z.
bool is_modular(const Lattice& lattice);

std::vector<JoinIrreducible> join_irreducibles(const Lattice& lattice);
bool is_join_irreducible(const Lattice& lattice, Elem x);
/// J(a): join-irreducibles below a.
std::vector<Elem> ji_below(const Lattice& lattice, Elem a);
/// J(a, b): join-irreducibles below b but not below a.
std::vector<Elem> ji_between(const Lattice& lattice, Elem a, Elem b);

/// [a,b] transposes up to [c,d]: d = b + c and a = b·c.
bool transposes_up(const Lattice& lattice, Quotient from, Quotient to);
/// Both prime quotients transpose up to a common quotient.
bool perspective_up(const Lattice& lattice, Quotient p, Quotient q);

/// Equivalence classes of prime quotients under the transitive closure of
/// one-step transposition (up or down). Classes and their members are sorted.
std::vector<std::vector<Quotient>> projectivity_classes(const Lattice& lattice);

/// Order isomorphism by backtracking with rank and degree pruning.
/// Throws Error{SizeCapExceeded} if either lattice exceeds `cap` elements.
std::optional<std::vector<Elem>> find_isomorphism(const Lattice& a, const Lattice& b,
                                                  std::size_t cap = 200);
bool is_isomorphic(const Lattice& a, const Lattice& b, std::size_t cap = 200);

}  // namespace modlat
