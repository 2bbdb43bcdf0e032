#include "modlat/rebuild.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "modlat/error.hpp"

namespace modlat {

namespace {

using Words = std::vector<std::uint64_t>;

Words pack(const Bitstring& x) {
  Words w((x.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) w[i / 64] |= std::uint64_t{1} << (i % 64);
  return w;
}

bool subset(const Words& a, const Words& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::size_t popcount(const Bitstring& x) { return static_cast<std::size_t>(std::count(x.begin(), x.end(), true)); }

std::string set_name(const Bitstring& x, const std::vector<std::string>& point_names) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    if (!first) s += ',';
    first = false;
    s += point_names.empty() ? std::to_string(i) : point_names[i];
  }
  return s + "}";
}

}  // namespace

Lattice inclusion_lattice(const std::vector<Bitstring>& family, std::vector<std::string> names) {
  const std::size_t m = family.size();
  std::vector<Words> packed;
  packed.reserve(m);
  for (const auto& x : family) packed.push_back(pack(x));
  std::vector<std::size_t> size(m);
  for (std::size_t i = 0; i < m; ++i) size[i] = popcount(family[i]);

  // i < j strictly, as bit rows over the family.
  const std::size_t words = (m + 63) / 64;
  std::vector<std::uint64_t> above(m * words, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (size[i] < size[j] && subset(packed[i], packed[j]))
        above[i * words + j / 64] |= std::uint64_t{1} << (j % 64);

  std::vector<Quotient> covers;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!((above[i * words + j / 64] >> (j % 64)) & 1U)) continue;
      bool cover = true;
      for (std::size_t w = 0; w < words && cover; ++w) {
        // Some k with i < k < j?
        std::uint64_t mid = above[i * words + w];
        while (mid) {
          const std::size_t k = w * 64 + static_cast<std::size_t>(__builtin_ctzll(mid));
          mid &= mid - 1;
          if ((above[k * words + j / 64] >> (j % 64)) & 1U) {
            cover = false;
            break;
          }
        }
      }
      if (cover) covers.push_back({i, j});
    }
  }
  return Lattice::build(m, covers, std::move(names));
}

ClosureLattice closed_ideals_lattice(std::vector<Bitstring> members,
                                     const std::vector<std::string>& point_names) {
  if (members.empty()) throw Error(ErrorCode::NotAClosureSystem, "empty family");
  const std::size_t width = members.front().size();
  for (const auto& x : members)
    if (x.size() != width) throw Error(ErrorCode::InvalidInput, "members differ in width");
  std::sort(members.begin(), members.end(), [](const Bitstring& a, const Bitstring& b) {
    const auto pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (popcount(members.front()) != 0)
    throw Error(ErrorCode::NotAClosureSystem, "the empty set is not a member");

  std::map<Words, std::size_t> index;
  std::vector<Words> packed;
  for (std::size_t i = 0; i < members.size(); ++i) {
    packed.push_back(pack(members[i]));
    index.emplace(packed.back(), i);
  }
  for (std::size_t i = 0; i < packed.size(); ++i) {
    for (std::size_t j = i + 1; j < packed.size(); ++j) {
      Words meet = packed[i];
      for (std::size_t w = 0; w < meet.size(); ++w) meet[w] &= packed[j][w];
      if (!index.count(meet))
        throw Error(ErrorCode::NotAClosureSystem,
                    "intersection of " + set_name(members[i], point_names) + " and " +
                        set_name(members[j], point_names) + " is missing");
    }
  }

  std::vector<std::string> names;
  for (const auto& x : members) names.push_back(set_name(x, point_names));
  Lattice lattice = inclusion_lattice(members, std::move(names));
  return {std::move(lattice), std::move(members)};
}

PointData point_data(const Lattice& lattice, const BaseOfLines& bol) {
  PointData data;
  data.points = bol.pls.points();
  std::map<Elem, std::size_t> pos;
  for (std::size_t i = 0; i < data.points.size(); ++i) pos[data.points[i]] = i;
  std::vector<OrderPair> order;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < data.points.size(); ++i) {
    names.push_back(lattice.name(data.points[i]));
    for (std::size_t j = 0; j < data.points.size(); ++j)
      if (i != j && lattice.leq(data.points[i], data.points[j])) order.emplace_back(i, j);
  }
  data.poset = Poset::from_relation(data.points.size(), order, std::move(names));
  for (const auto& line : bol.pls.lines()) {
    std::vector<std::size_t> l;
    for (PointId p : line) l.push_back(pos.at(p));
    data.lines.push_back(std::move(l));
  }
  return data;
}

RoundtripReport roundtrip_check(const Lattice& lattice) {
  RoundtripReport report;
  report.original_size = lattice.size();
  const BaseOfLines bol = canonical_bol(lattice);
  const PointData data = point_data(lattice, bol);
  const RowSet rows = enumerate(data.poset, data.lines);
  const auto rebuilt = closed_ideals_lattice(expand_all(rows), data.poset.names());
  report.rebuilt_size = rebuilt.lattice.size();
  const std::size_t cap = std::max(lattice.size(), rebuilt.lattice.size());
  report.isomorphic = is_isomorphic(lattice, rebuilt.lattice, cap);

  std::map<Bitstring, std::size_t> hits;
  for (const auto& m : rebuilt.members) hits[m] = 0;
  bool ok = true;
  for (Elem a = 0; a < lattice.size(); ++a) {
    Bitstring ideal(data.points.size(), false);
    for (std::size_t i = 0; i < data.points.size(); ++i) ideal[i] = lattice.leq(data.points[i], a);
    auto it = hits.find(ideal);
    if (it == hits.end() || it->second++ != 0) ok = false;
  }
  report.ideal_map_bijective = ok && lattice.size() == rebuilt.members.size();
  return report;
}

ImplicationSet sigma_nat(const Poset& poset, const std::vector<std::vector<std::size_t>>& lines) {
  ImplicationSet sigma;
  for (std::size_t p = 0; p < poset.size(); ++p) {
    auto below = poset.strictly_below(p);
    if (!below.empty()) sigma.push_back({{p}, std::move(below)});
  }
  for (const auto& raw : lines) {
    std::vector<std::size_t> line = raw;
    std::sort(line.begin(), line.end());
    for (std::size_t i = 0; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j) sigma.push_back({{line[i], line[j]}, line});
  }
  return sigma;
}

std::vector<std::size_t> horn_closure(const ImplicationSet& sigma, std::vector<std::size_t> start) {
  ImplicationSet rules = sigma;
  for (auto& imp : rules) std::sort(imp.premise.begin(), imp.premise.end());
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& imp : rules) {
      if (!std::includes(start.begin(), start.end(), imp.premise.begin(), imp.premise.end()))
        continue;
      for (std::size_t c : imp.conclusion) {
        auto it = std::lower_bound(start.begin(), start.end(), c);
        if (it == start.end() || *it != c) {
          start.insert(it, c);
          changed = true;
        }
      }
    }
  }
  return start;
}

std::size_t sigma_size(const ImplicationSet& sigma) {
  std::size_t s = 0;
  for (const auto& imp : sigma) s += imp.premise.size() + imp.conclusion.size();
  return s;
}

}  // namespace modlat
