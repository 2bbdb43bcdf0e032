#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "modlat/catalog.hpp"
#include "modlat/error.hpp"
#include "modlat/wildcard.hpp"
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

std::size_t ones(const Bitstring& x, const std::vector<std::size_t>& at) {
  std::size_t k = 0;
  for (std::size_t p : at) k += x[p];
  return k;
}

bool satisfies(const GroupSpec& g, const Bitstring& x) {
  const std::size_t k = ones(x, g.members), n = g.members.size();
  switch (g.kind) {
    case GroupKind::Imp: return k == 0 || ones(x, g.implied) == g.implied.size();
    case GroupKind::D: return k == 0 || k == n;
    case GroupKind::Eps: return k <= 1;
    case GroupKind::G: return k == 1;
    case GroupKind::Ell: return k <= 1 || k == n;
  }
  return false;
}

/// Strings of the row's width that meet every cell and group, by filtering
/// all 2^width candidates.
std::set<oracle::Mask> brute(const Row& row) {
  std::set<oracle::Mask> out;
  for (oracle::Mask m = 0; m < (oracle::Mask{1} << row.width()); ++m) {
    const Bitstring x = oracle::to_bits(m, row.width());
    bool ok = true;
    for (std::size_t p = 0; p < row.width(); ++p) {
      if (row.kind(p) == CellKind::Zero && x[p]) ok = false;
      if (row.kind(p) == CellKind::One && !x[p]) ok = false;
    }
    for (const auto& g : row.groups()) ok = ok && satisfies(g, x);
    if (ok) out.insert(m);
  }
  return out;
}

Row with_group(std::size_t width, GroupSpec g) {
  Row r(width);
  r.add_group(std::move(g));
  return r;
}

}  // namespace

TEST_CASE("group counts") {
  CHECK(row_count(Row(5)) == 32);
  CHECK(row_count(with_group(4, {GroupKind::D, {0, 1, 2, 3}, {}})) == 2);
  CHECK(row_count(with_group(4, {GroupKind::Eps, {0, 1, 2, 3}, {}})) == 5);
  CHECK(row_count(with_group(4, {GroupKind::G, {0, 1, 2, 3}, {}})) == 4);
  CHECK(row_count(with_group(4, {GroupKind::Ell, {0, 1, 2, 3}, {}})) == 6);
  // alpha = 2 premises, beta = 3 conclusions: 2^3 + 2^2 - 1.
  CHECK(row_count(with_group(5, {GroupKind::Imp, {0, 1}, {2, 3, 4}})) == 11);
}

TEST_CASE("row semantics match brute force") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 300; ++k) {
    const Row row = oracle::random_row(rng, 1 + rng() % 10);
    const auto want = brute(row);
    CHECK(row_count(row) == want.size());
    const auto got = expand(row);
    CHECK(got.size() == want.size());
    CHECK(oracle::masks(got) == want);
    for (oracle::Mask m = 0; m < (oracle::Mask{1} << row.width()); ++m)
      CHECK(contains(row, oracle::to_bits(m, row.width())) == (want.count(m) == 1));
  }
}

TEST_CASE("assign restricts") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 200; ++k) {
    const Row row = oracle::random_row(rng, 2 + rng() % 8);
    const std::size_t pos = rng() % row.width();
    const bool value = rng() & 1U;
    const auto sub = row.assign(pos, value);
    std::set<oracle::Mask> want;
    for (auto m : brute(row))
      if (oracle::bit(m, pos) == value) want.insert(m);
    if (want.empty()) {
      CHECK_FALSE(sub);
    } else {
      REQUIRE(sub);
      CHECK(brute(*sub) == want);
    }
  }
}

TEST_CASE("row editing errors") {
  Row r(4);
  r.fix(0, true);
  CHECK(code_of([&] { r.fix(0, false); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { r.add_group({GroupKind::D, {0, 1}, {}}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { r.add_group({GroupKind::Eps, {1}, {}}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { r.add_group({GroupKind::D, {1, 2}, {3}}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { expand(Row(30), 1000); }) == ErrorCode::ExpansionCapExceeded);
}

TEST_CASE("cell text") {
  Row r(6);
  r.fix(0, false);
  r.fix(1, true);
  r.add_group({GroupKind::Imp, {2}, {3}});
  r.add_group({GroupKind::Ell, {4, 5}, {}});
  const std::string text = row_cells_text(r);
  CHECK(text.find("a1") != std::string::npos);
  CHECK(text.find("b1") != std::string::npos);
  CHECK(text.rfind("0 1", 0) == 0);
}

TEST_CASE("seed rows are the order ideals") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = 1 + rng() % 10;
    const Poset P = catalog::random_poset(n, 0.3, rng());
    const RowSet seeds = seed_order_ideals(P);
    CHECK(validate_rowset(seeds).total == total_count(seeds));
    CHECK(oracle::masks(expand_all(seeds)) == oracle::closed_ideals(P, {}));
  }
  CHECK(total_count(seed_order_ideals(catalog::toy_poset())) == 45);
}

TEST_CASE("impose_line on a free row is one l group") {
  const std::vector<std::size_t> line{1, 2, 4};
  const auto parts = impose_line(Row(5), line);
  REQUIRE(parts.size() == 1);
  REQUIRE(parts[0].groups().size() == 1);
  CHECK(parts[0].groups()[0].kind == GroupKind::Ell);
  // 3 + 2 patterns on the line, 4 on the rest.
  CHECK(row_count(parts[0]) == 20);
}

TEST_CASE("impose_line leaves satisfied rows alone") {
  Row r(4);
  r.fix(0, true);
  r.fix(1, true);
  r.fix(2, true);
  const std::vector<std::size_t> line{0, 1, 2};
  const auto parts = impose_line(r, line);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].same_cells(r));
}

TEST_CASE("toy enumeration") {
  const RowSet rows = enumerate(catalog::toy_poset(), catalog::toy_lines());
  CHECK(total_count(rows) == 13);
  CHECK(rows.rows.size() == 6);
  const RowSetReport rep = validate_rowset(rows);
  CHECK(rep.rows == 6);
  CHECK(rep.total == 13);
  for (const auto& r : rows.rows) {
    CHECK(r.pending.empty());
    CHECK_FALSE(r.label.empty());
  }
}

TEST_CASE("trace sees the working stack") {
  std::size_t steps = 0, max_stack = 0, last_finals = 0;
  EnumerateOptions opt;
  opt.trace = [&](const std::vector<Row>& stack, const std::vector<Row>& finals) {
    ++steps;
    max_stack = std::max(max_stack, stack.size());
    last_finals = finals.size();
  };
  enumerate(catalog::toy_poset(), catalog::toy_lines(), opt);
  CHECK(steps > 0);
  CHECK(max_stack >= 2);
  CHECK(last_finals == 6);
}

TEST_CASE("parallel enumeration gives the same set") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 4 + rng() % 9;
    const Poset P = catalog::random_poset(n, 0.2, rng());
    const auto lines = oracle::random_lines(rng, n, 4);
    EnumerateOptions opt;
    opt.jobs = 3;
    const RowSet a = enumerate(P, lines);
    const RowSet b = enumerate(P, lines, opt);
    CHECK(total_count(a) == total_count(b));
    CHECK(oracle::masks(expand_all(a)) == oracle::masks(expand_all(b)));
    validate_rowset(b);
  }
}

TEST_CASE("overlap detection") {
  RowSet set{3, {Row(3), Row(3)}};
  set.rows[1].fix(0, true);
  const auto w = common_witness(set.rows[0], set.rows[1]);
  REQUIRE(w);
  CHECK((*w)[0]);
  CHECK(code_of([&] { validate_rowset(set); }) == ErrorCode::OverlapFound);
  Row z(3);
  z.fix(0, false);
  CHECK_FALSE(common_witness(z, set.rows[1]));
}

TEST_CASE("impose_line splits into disjoint parts") {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 300; ++k) {
    const Row row = oracle::random_row(rng, 3 + rng() % 8);
    std::vector<std::size_t> all(row.width());
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t lambda = 3 + rng() % (row.width() - 2);
    const std::vector<std::size_t> line(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(lambda));
    const auto parts = impose_line(row, line);
    CHECK(parts.size() <= lambda + 2);
    RowSet set{row.width(), parts};
    validate_rowset(set);
    std::set<oracle::Mask> want;
    for (auto m : brute(row)) {
      const auto x = oracle::to_bits(m, row.width());
      const std::size_t k1 = ones(x, line);
      if (k1 <= 1 || k1 == lambda) want.insert(m);
    }
    CHECK(oracle::masks(expand_all(set)) == want);
  }
}
