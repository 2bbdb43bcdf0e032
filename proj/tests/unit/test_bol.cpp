#include <doctest.h>

#include <set>

#include "modlat/bol.hpp"
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

/// Lines of a base must be exactly what the definition asks for.
void check_base(const Lattice& L, const BaseOfLines& B) {
  const auto intervals = line_intervals(L);
  REQUIRE(B.line_count() == intervals.size());
  std::set<Elem> points(B.pls.points().begin(), B.pls.points().end());
  std::set<Elem> ji;
  for (const auto& j : join_irreducibles(L)) ji.insert(j.elem);
  CHECK(points == ji);
  for (std::size_t k = 0; k < B.line_count(); ++k) {
    const auto& line = B.pls.lines()[k];
    CHECK(line.size() == intervals[k].n());
    CHECK(B.tops[k] == intervals[k].top);
    CHECK(B.bottoms[k] == intervals[k].bottom);
    for (Elem p : line)
      for (Elem q : line)
        if (p != q) CHECK(L.join(p, q) == B.tops[k]);
  }
}

}  // namespace

TEST_CASE("M3 has one line of three atoms") {
  const Lattice L = catalog::mn(3);
  const auto iv = line_intervals(L);
  REQUIRE(iv.size() == 1);
  CHECK(iv[0].bottom == L.bottom());
  CHECK(iv[0].top == L.top());
  CHECK(iv[0].n() == 3);
  const BaseOfLines B = canonical_bol(L);
  check_base(L, B);
  CHECK(B.pls.lines()[0].size() == 3);
}

TEST_CASE("distributive lattices have no lines") {
  CHECK(line_intervals(catalog::boolean(3)).empty());
  CHECK(canonical_bol(catalog::chain(3)).line_count() == 0);
}

TEST_CASE("pentagon is refused") {
  CHECK(code_of([] { line_intervals(catalog::pentagon()); }) == ErrorCode::NotModular);
}

TEST_CASE("L(Z2^3) gives the Fano plane") {
  const Lattice L = catalog::subgroups({2, 2, 2});
  const BaseOfLines B = canonical_bol(L);
  check_base(L, B);
  CHECK(B.pls.points().size() == 7);
  CHECK(B.line_count() == 7);
  const auto& pts = B.pls.points();
  for (std::size_t x = 0; x < pts.size(); ++x)
    for (std::size_t y = x + 1; y < pts.size(); ++y) {
      int on = 0;
      for (const auto& l : B.pls.lines())
        on += std::count(l.begin(), l.end(), pts[x]) && std::count(l.begin(), l.end(), pts[y]);
      CHECK(on == 1);
    }
  CHECK(rstar(B.pls) == 8);
  // Atoms are join-irreducible, so every line has exactly one choice.
  CHECK(bol_count_upper_bound(L) == 1);
}

TEST_CASE("every base of lines is valid and distinct") {
  for (const auto& factors : std::vector<std::vector<unsigned>>{{4, 4}, {2, 4}, {2, 2, 4}, {9}}) {
    const Lattice L = catalog::subgroups(factors);
    const BolFamily fam = all_bols(L);
    CHECK_FALSE(fam.truncated);
    CHECK(fam.bols.size() == bol_count_upper_bound(L));
    std::set<std::vector<std::vector<PointId>>> seen;
    for (const auto& B : fam.bols) {
      check_base(L, B);
      seen.insert(B.pls.lines());
    }
    CHECK(seen.size() == fam.bols.size());
  }
}

TEST_CASE("all_bols cap") {
  const Lattice L = catalog::subgroups({2, 2, 4});
  REQUIRE(bol_count_upper_bound(L) > 2);
  const BolFamily fam = all_bols(L, 2);
  CHECK(fam.truncated);
  CHECK(fam.bols.size() == 2);
}

TEST_CASE("extract_line respects the chooser") {
  const Lattice L = catalog::subgroups({4, 4});
  for (const auto& iv : line_intervals(L)) {
    const auto smallest = extract_line(L, iv);
    const auto largest = extract_line(L, iv, [](const LineInterval&, Elem, std::span<const Elem> c) {
      return c.back();
    });
    CHECK(smallest.size() == iv.n());
    CHECK(largest.size() == iv.n());
    for (Elem p : largest) CHECK(is_join_irreducible(L, p));
  }
}

TEST_CASE("lines from a join oracle") {
  // Points are the seven nonzero vectors of GF(2)^3, joins are spans.
  auto span = [](std::size_t p, std::size_t q) {
    const std::size_t a = p + 1, b = q + 1;
    return (std::size_t{1} << a) | (std::size_t{1} << b) | (std::size_t{1} << (a ^ b));
  };
  const JoinLines jl = lines_from_joins(7, span);
  CHECK(jl.lines.size() == 7);
  for (const auto& l : jl.lines) CHECK(l.size() == 3);
  // Chains have no lines: every pair joins to the larger point.
  const JoinLines none = lines_from_joins(4, [](std::size_t p, std::size_t q) { return std::max(p, q); });
  CHECK(none.lines.empty());
}

TEST_CASE("induced base") {
  const Lattice L = catalog::subgroups({2, 2, 2});
  const BaseOfLines B = canonical_bol(L);
  for (Elem a = 0; a < L.size(); ++a) {
    const BaseOfLines Ba = induced(L, B, a);
    const auto below = ji_below(L, a);
    CHECK(std::vector<Elem>(Ba.pls.points().begin(), Ba.pls.points().end()) == below);
    for (Elem t : Ba.tops) CHECK(L.leq(t, a));
  }
  CHECK(induced(L, B, L.top()).line_count() == 7);
}

TEST_CASE("localization") {
  const Lattice L = catalog::subgroups({2, 2, 2});
  const BaseOfLines B = canonical_bol(L);
  for (const auto& [a, b] : L.covers()) {
    const Pls loc = localize(L, B, a, b);
    const auto pts = ji_between(L, a, b);
    CHECK(std::vector<Elem>(loc.points().begin(), loc.points().end()) == pts);
    CHECK(components(loc).size() == 1);
  }
  CHECK(code_of([&] { localize(L, B, L.bottom(), L.top()); }) == ErrorCode::NotACovering);
}

TEST_CASE("same_join_family") {
  const Lattice L = catalog::mn(4);
  const Elem a1 = *L.find("a1"), a2 = *L.find("a2");
  CHECK(same_join_family(L, a1, a2).size() == 4);
  const Lattice C = catalog::chain(3);
  CHECK(same_join_family(C, 1, 2).size() <= 2);
}
