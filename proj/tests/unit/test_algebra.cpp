#include <doctest.h>

#include <random>
#include <set>

#include "modlat/algebra.hpp"
#include "modlat/catalog.hpp"
#include "modlat/error.hpp"
#include "support/oracles.hpp"

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

TEST_CASE("group arithmetic") {
  const Group g({2, 4});
  CHECK(g.order() == 8);
  CHECK(g.encode({1, 3}) == 7);
  CHECK(g.decode(6) == std::vector<unsigned>{1, 2});
  CHECK(g.add(g.encode({1, 3}), g.encode({1, 2})) == g.encode({0, 1}));
  CHECK(g.element_name(5) == "(1,1)");
  CHECK(code_of([] { Group({1, 3}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { Group({64, 64, 64}); }) == ErrorCode::CapExceeded);
}

TEST_CASE("cyclic subgroups and joins") {
  const Group g({4, 4});
  const Subgroup h = cyclic_subgroup(g, g.encode({1, 0}));
  CHECK(h.size() == 4);
  CHECK(h.front() == 0);
  const Subgroup k = cyclic_subgroup(g, g.encode({0, 2}));
  CHECK(join_subgroups(g, h, k).size() == 8);
  CHECK(subgroup_name(g, {0}) == "0");
}

TEST_CASE("subgroup counts match the subset oracle") {
  for (const auto& f : std::vector<std::vector<unsigned>>{
           {2}, {6}, {2, 2}, {2, 2, 2}, {4, 4}, {2, 4}, {8}, {3, 3}, {2, 2, 4}, {2, 6}, {2, 8}}) {
    CAPTURE(f.size());
    const std::size_t want = oracle::subgroup_count(f);
    const SubgroupLattice sl = subgroup_lattice(Group(f));
    CHECK(sl.lattice.size() == want);
    CHECK(sl.lattice.modular());
    const auto input = enumeration_input(Group(f));
    CHECK(total_count(enumerate(input.poset, input.lines)) == want);
  }
}

TEST_CASE("join-irreducible subgroups are cyclic of prime-power order") {
  const Group g({2, 2, 4});
  const auto ji = join_irreducible_subgroups(g);
  const SubgroupLattice sl = subgroup_lattice(g);
  CHECK(ji.size() == join_irreducibles(sl.lattice).size());
  for (const auto& h : ji) {
    std::size_t n = h.size();
    while (n % 2 == 0) n /= 2;
    CHECK(n == 1);
    bool cyclic = false;
    for (auto x : h) cyclic = cyclic || cyclic_subgroup(g, x) == h;
    CHECK(cyclic);
  }
}

TEST_CASE("Z4xZ4 counts") {
  const Group g({4, 4});
  CHECK(join_irreducible_subgroups(g).size() == 9);
  CHECK(subgroup_lattice(g).lattice.size() == 15);
}

TEST_CASE("enumeration input of Z2^3") {
  const auto in = enumeration_input(Group({2, 2, 2}));
  CHECK(in.points.size() == 7);
  CHECK(in.poset.covers().empty());
  CHECK(in.lines.size() == 7);
}

TEST_CASE("parse set systems") {
  const SetSystem s = parse_set_system(catalog::eight_sets_text());
  CHECK(s.universe.size() == 9);
  CHECK(s.universe.back() == "k");
  CHECK(s.sets.size() == 8);
  CHECK(s.set_names[0] == "X1");
  CHECK(s.sets[4] == Bitstring{true, true, false, false, true, false, false, false, false});
  const SetSystem bare = parse_set_system("1 0\n0 1\n");
  CHECK(bare.sets.size() == 2);
  CHECK(bare.universe.size() == 2);
  CHECK(code_of([] { parse_set_system("1 0 1\n0 1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_set_system("1 2\n"); }) == ErrorCode::ParseError);
}

TEST_CASE("eight-set system") {
  const SetSystem s = parse_set_system(catalog::eight_sets_text());
  std::vector<oracle::Mask> sets;
  for (const auto& x : s.sets) sets.push_back(oracle::to_mask(x));
  const auto closure = oracle::union_intersection_closure(sets);
  const auto ji = distributive_ji(s);
  CHECK(ji.sets.size() == 7);
  CHECK(oracle::masks(ji.sets) == oracle::join_irreducibles(closure));
  const DistributiveLattice D = distributive_lattice(s);
  CHECK(D.lattice.size() == closure.size());
  CHECK(oracle::masks(D.members) == closure);
  CHECK(D.lattice.modular());
}

TEST_CASE("distributive lattices of random set systems") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 40; ++k) {
    const std::size_t w = 2 + rng() % 6, t = 1 + rng() % 5;
    std::string text;
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < w; ++j) text += (rng() & 1U) ? "1 " : "0 ";
      text += "\n";
    }
    const SetSystem s = parse_set_system(text);
    std::vector<oracle::Mask> sets;
    for (const auto& x : s.sets) sets.push_back(oracle::to_mask(x));
    const auto closure = oracle::union_intersection_closure(sets);
    CHECK(oracle::masks(distributive_ji(s).sets) == oracle::join_irreducibles(closure));
    CHECK(oracle::masks(distributive_lattice(s).members) == closure);
  }
}
