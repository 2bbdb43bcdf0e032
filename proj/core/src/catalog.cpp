#include "modlat/catalog.hpp"

#include <random>

#include "modlat/algebra.hpp"
#include "modlat/error.hpp"
#include "modlat/wildcard.hpp"

namespace modlat::catalog {

Lattice chain(std::size_t length) {
  std::vector<Quotient> covers;
  for (Elem x = 0; x < length; ++x) covers.push_back({x, x + 1});
  return Lattice::build(length + 1, covers);
}

Lattice mn(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "M_n needs n >= 1");
  std::vector<std::string> names{"0"};
  std::vector<Quotient> covers;
  for (std::size_t k = 1; k <= n; ++k) {
    names.push_back("a" + std::to_string(k));
    covers.push_back({0, k});
    covers.push_back({k, n + 1});
  }
  names.push_back("1");
  return Lattice::build(std::move(names), covers);
}

Lattice boolean(std::size_t k) {
  if (k > 12) throw Error(ErrorCode::CapExceeded, "boolean lattice too large");
  const std::size_t n = std::size_t{1} << k;
  std::vector<Quotient> covers;
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x) {
    std::string s = "{";
    for (std::size_t b = 0; b < k; ++b) {
      if (x >> b & 1U) s += (s.size() > 1 ? "," : "") + std::to_string(b + 1);
      else covers.push_back({x, x | (std::size_t{1} << b)});
    }
    names.push_back(s + "}");
  }
  return Lattice::build(std::move(names), covers);
}

Lattice pentagon() {
  const std::vector<Quotient> covers{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return Lattice::build({"0", "a", "b", "c", "1"}, covers);
}

Lattice subgroups(const std::vector<unsigned>& factors) {
  return subgroup_lattice(Group(factors)).lattice;
}

Pls fano() {
  std::vector<std::vector<PointId>> lines;
  for (PointId i = 0; i < 7; ++i) lines.push_back({i, (i + 1) % 7, (i + 3) % 7});
  return Pls::validate({0, 1, 2, 3, 4, 5, 6}, std::move(lines));
}

Poset toy_poset() {
  const std::vector<OrderPair> order{{0, 3}, {1, 4}, {1, 5}, {2, 6}};
  return Poset::from_relation(7, order, {"p1", "p2", "p3", "p4", "p5", "p6", "p7"});
}

std::vector<std::vector<std::size_t>> toy_lines() { return {{0, 1, 2}, {0, 4, 5}, {3, 5, 6}}; }

std::string eight_sets_text() {
  return "a b c d e f g h k\n"
         "X1 = 1 1 1 1 1 1 0 0 1\n"
         "X2 = 1 1 1 1 1 1 0 1 0\n"
         "X3 = 1 1 0 1 1 1 0 0 0\n"
         "X4 = 0 1 1 1 0 1 1 0 0\n"
         "X5 = 1 1 0 0 1 0 0 0 0\n"
         "X6 = 0 1 0 1 0 1 0 0 0\n"
         "X7 = 1 1 0 1 1 1 1 1 0\n"
         "X8 = 0 0 0 1 0 1 1 0 1\n";
}

ImplicationSet optimal_base_fixture() {
  return {
      {{4}, {2}},          {{6}, {3}},          {{7}, {3}},           {{10}, {7}},
      {{12}, {2, 6, 7}},   {{14}, {10}},        {{15}, {10}},         {{16}, {10}},
      {{4, 10}, {12}},     {{4, 12}, {10}},     {{10, 12}, {4}},      {{2, 14}, {15}},
      {{2, 15}, {14}},     {{2, 16}, {14}},     {{14, 15}, {16}},     {{14, 16}, {15}},
      {{15, 16}, {2}},
  };
}

Poset random_poset(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<OrderPair> order;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) order.emplace_back(i, j);
  return Poset::from_relation(n, order);
}

Lattice downset_lattice(const Poset& poset) {
  const RowSet rows = enumerate(poset, {});
  return closed_ideals_lattice(expand_all(rows), poset.names()).lattice;
}

std::vector<Named> corpus(std::size_t random_count, std::uint64_t seed) {
  std::vector<Named> out;
  const std::vector<std::pair<std::string, std::vector<unsigned>>> groups{
      {"Z2^3", {2, 2, 2}}, {"Z4xZ4", {4, 4}}, {"Z2xZ4", {2, 4}},
      {"Z8", {8}},         {"Z3xZ3", {3, 3}}, {"Z2xZ2xZ4", {2, 2, 4}},
  };
  for (const auto& [name, factors] : groups) out.push_back({"L(" + name + ")", subgroups(factors)});
  out.push_back({"M3", mn(3)});
  out.push_back({"B3", boolean(3)});
  for (std::size_t len = 0; len <= 3; ++len) out.push_back({"chain" + std::to_string(len), chain(len)});

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_real_distribution<double> density(0.1, 0.6);
  for (std::size_t k = 0; k < random_count; ++k) {
    const std::size_t n = size(rng);
    const double d = density(rng);
    const Poset poset = random_poset(n, d, rng());
    out.push_back({"downsets" + std::to_string(k + 1) + "(n=" + std::to_string(n) + ")", downset_lattice(poset)});
  }
  return out;
}

std::vector<Named> cycle_corpus() {
  return {{"L(Z2xZ8)", subgroups({2, 8})},
          {"L(Z2xZ16)", subgroups({2, 16})},
          {"L(Z4xZ8)", subgroups({4, 8})},
          {"L(Z9xZ9)", subgroups({9, 9})}};
}

}  // namespace modlat::catalog
