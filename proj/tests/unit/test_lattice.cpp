#include <doctest.h>

#include <algorithm>
#include <random>

#include "modlat/catalog.hpp"
#include "modlat/error.hpp"
#include "modlat/lattice.hpp"

using namespace modlat;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("M3 basics") {
  const Lattice L = catalog::mn(3);
  CHECK(L.size() == 5);
  CHECK(L.height() == 2);
  CHECK(L.modular());
  CHECK(L.name(L.bottom()) == "0");
  CHECK(L.name(L.top()) == "1");
  CHECK(join_irreducibles(L).size() == 3);
  const Elem a1 = *L.find("a1"), a2 = *L.find("a2");
  CHECK(L.join(a1, a2) == L.top());
  CHECK(L.meet(a1, a2) == L.bottom());
  CHECK_FALSE(L.comparable(a1, a2));
  CHECK(L.is_cover(L.bottom(), a1));
  CHECK_FALSE(L.is_cover(L.bottom(), L.top()));
  CHECK_FALSE(L.find("nope"));
}

TEST_CASE("pentagon is not modular") {
  const Lattice N5 = catalog::pentagon();
  CHECK_FALSE(N5.modular());
  CHECK_FALSE(is_modular(N5));
  CHECK(N5.height() == 3);
}

TEST_CASE("malformed cover relations are rejected") {
  const std::vector<Quotient> cycle{{0, 1}, {1, 2}, {2, 0}};
  CHECK(code_of([&] { Lattice::build(3, cycle); }) == ErrorCode::CycleInCovers);
  const std::vector<Quotient> redundant{{0, 1}, {1, 2}, {0, 2}};
  CHECK(code_of([&] { Lattice::build(3, redundant); }) == ErrorCode::NotTransitivelyReduced);
  const std::vector<Quotient> two_tops{{0, 1}, {0, 2}};
  CHECK(code_of([&] { Lattice::build(3, two_tops); }) == ErrorCode::NotALattice);
  // Two atoms below two coatoms: no least upper bound.
  const std::vector<Quotient> bowtie{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
  CHECK(code_of([&] { Lattice::build(6, bowtie); }) == ErrorCode::NotALattice);
  const std::vector<Quotient> out_of_range{{0, 7}};
  CHECK(code_of([&] { Lattice::build(2, out_of_range); }) == ErrorCode::InvalidInput);
}

TEST_CASE("boolean lattice operations match set operations") {
  const Lattice B = catalog::boolean(4);
  REQUIRE(B.size() == 16);
  for (Elem x = 0; x < 16; ++x)
    for (Elem y = 0; y < 16; ++y) {
      CHECK(B.join(x, y) == (x | y));
      CHECK(B.meet(x, y) == (x & y));
      CHECK(B.leq(x, y) == ((x & ~y) == 0));
    }
  CHECK(join_irreducibles(B).size() == 4);
  CHECK(projectivity_classes(B).size() == 4);
  CHECK(B.rank(0b1011) == 3);
}

TEST_CASE("chains") {
  for (std::size_t len = 0; len <= 4; ++len) {
    const Lattice C = catalog::chain(len);
    CHECK(C.size() == len + 1);
    CHECK(C.height() == static_cast<int>(len));
    CHECK(join_irreducibles(C).size() == len);
    CHECK(projectivity_classes(C).size() == len);
  }
}

TEST_CASE("join-irreducible helpers") {
  const Lattice L = catalog::subgroups({2, 4});
  const auto ji = join_irreducibles(L);
  for (const auto& j : ji) {
    CHECK(is_join_irreducible(L, j.elem));
    CHECK(L.lower_covers(j.elem) == std::vector<Elem>{j.lower_star});
  }
  CHECK_FALSE(is_join_irreducible(L, L.bottom()));
  CHECK(ji_below(L, L.top()).size() == ji.size());
  CHECK(ji_below(L, L.bottom()).empty());
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b) {
      const auto between = ji_between(L, a, b);
      for (Elem p : between) CHECK((L.leq(p, b) && !L.leq(p, a)));
    }
}

TEST_CASE("transpositions in M3") {
  const Lattice L = catalog::mn(3);
  const Elem a1 = *L.find("a1"), a2 = *L.find("a2"), a3 = *L.find("a3");
  CHECK(transposes_up(L, {L.bottom(), a1}, {a2, L.top()}));
  CHECK_FALSE(transposes_up(L, {L.bottom(), a1}, {a1, L.top()}));
  CHECK(perspective_up(L, {L.bottom(), a1}, {L.bottom(), a3}));
  CHECK(projectivity_classes(L).size() == 1);
}

TEST_CASE("lattice laws on random down-set lattices") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 25; ++k) {
    const Poset P = catalog::random_poset(1 + rng() % 7, 0.35, rng());
    const Lattice L = catalog::downset_lattice(P);
    CHECK(L.modular());
    for (Elem x = 0; x < L.size(); ++x)
      for (Elem y = 0; y < L.size(); ++y) {
        const Elem j = L.join(x, y), m = L.meet(x, y);
        CHECK((L.leq(x, j) && L.leq(y, j) && L.leq(m, x) && L.leq(m, y)));
        CHECK(L.join(x, m) == x);
        CHECK(L.meet(x, j) == x);
        // Modular lattices are graded with a valuation.
        CHECK(L.rank(x) + L.rank(y) == L.rank(j) + L.rank(m));
      }
  }
}

TEST_CASE("isomorphism") {
  const Lattice z6 = catalog::subgroups({6});
  CHECK(is_isomorphic(z6, catalog::boolean(2)));
  CHECK_FALSE(is_isomorphic(catalog::chain(3), catalog::boolean(2)));
  CHECK(is_isomorphic(catalog::subgroups({2, 2}), catalog::mn(3)));
  const auto map = find_isomorphism(catalog::subgroups({2, 2, 2}), catalog::subgroups({2, 2, 2}));
  REQUIRE(map);
  CHECK(map->size() == 16);
  CHECK(code_of([] { is_isomorphic(catalog::boolean(5), catalog::boolean(5), 16); }) ==
        ErrorCode::SizeCapExceeded);
}

TEST_CASE("names") {
  const Lattice L = Lattice::build({"bot", "x", "top"}, std::vector<Quotient>{{0, 1}, {1, 2}});
  CHECK(L.find("x") == Elem{1});
  CHECK(L.names().size() == 3);
  const Lattice U = Lattice::build(2, std::vector<Quotient>{{0, 1}});
  CHECK(U.name(1) == "1");
}
