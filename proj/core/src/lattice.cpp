#include "modlat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "modlat/error.hpp"

namespace modlat {

namespace {

std::string pair_text(const std::vector<std::string>& names, Elem x, Elem y) {
  return "(" + names[x] + ", " + names[y] + ")";
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

Lattice Lattice::build(std::vector<std::string> names, std::span<const Quotient> covers) {
  const std::size_t n = names.size();
  return build(n, covers, std::move(names));
}

Lattice Lattice::build(std::size_t n, std::span<const Quotient> covers,
                       std::vector<std::string> names) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "a lattice needs at least one element");
  if (names.empty()) {
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  if (names.size() != n) throw Error(ErrorCode::InvalidInput, "name count does not match element count");

  Lattice lat;
  lat.n_ = n;
  lat.words_ = (n + 63) / 64;
  lat.names_ = std::move(names);
  lat.lower_.assign(n, {});
  lat.upper_.assign(n, {});

  std::vector<Quotient> edges(covers.begin(), covers.end());
  for (const auto& e : edges) {
    if (e.lower >= n || e.upper >= n)
      throw Error(ErrorCode::InvalidInput, "cover index out of range");
    if (e.lower == e.upper)
      throw Error(ErrorCode::CycleInCovers, "self-loop at " + lat.names_[e.lower]);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (n > 1 && edges.empty())
    throw Error(ErrorCode::NotALattice, "several elements but no covers");
  for (const auto& e : edges) {
    lat.upper_[e.lower].push_back(e.upper);
    lat.lower_[e.upper].push_back(e.lower);
  }

  // Kahn's algorithm, bottom-up.
  std::vector<Elem> topo;
  topo.reserve(n);
  {
    std::vector<std::size_t> indeg(n);
    for (Elem x = 0; x < n; ++x) indeg[x] = lat.lower_[x].size();
    std::queue<Elem> ready;
    for (Elem x = 0; x < n; ++x)
      if (indeg[x] == 0) ready.push(x);
    while (!ready.empty()) {
      Elem x = ready.front();
      ready.pop();
      topo.push_back(x);
      for (Elem y : lat.upper_[x])
        if (--indeg[y] == 0) ready.push(y);
    }
    if (topo.size() != n) throw Error(ErrorCode::CycleInCovers, "cover relation contains a cycle");
  }

  // Up-sets as bit rows, top-down.
  lat.up_.assign(n * lat.words_, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const Elem x = *it;
    std::uint64_t* row = &lat.up_[x * lat.words_];
    row[x / 64] |= std::uint64_t{1} << (x % 64);
    for (Elem y : lat.upper_[x]) {
      const std::uint64_t* other = &lat.up_[y * lat.words_];
      for (std::size_t w = 0; w < lat.words_; ++w) row[w] |= other[w];
    }
  }

  for (const auto& e : edges) {
    for (Elem c : lat.upper_[e.lower]) {
      if (c != e.upper && lat.leq(c, e.upper))
        throw Error(ErrorCode::NotTransitivelyReduced,
                    "cover " + pair_text(lat.names_, e.lower, e.upper) + " is implied via " +
                        lat.names_[c]);
    }
  }

  // join(x, y) for y not below x equals the least of join(x', y) over upper covers x'.
  lat.join_.assign(n * n, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const Elem x = *it;
    for (Elem y = 0; y < n; ++y) {
      if (lat.leq(y, x)) {
        lat.join_[x * n + y] = static_cast<std::uint32_t>(x);
      } else if (lat.leq(x, y)) {
        lat.join_[x * n + y] = static_cast<std::uint32_t>(y);
      } else {
        std::optional<Elem> best;
        for (Elem xu : lat.upper_[x]) {
          const Elem c = lat.join_[xu * n + y];
          if (!best || lat.leq(c, *best)) best = c;
        }
        bool least = best.has_value();
        if (least) {
          for (Elem xu : lat.upper_[x]) {
            if (!lat.leq(*best, lat.join_[xu * n + y])) {
              least = false;
              break;
            }
          }
        }
        if (!least)
          throw Error(ErrorCode::NotALattice,
                      "no least upper bound for " + pair_text(lat.names_, x, y));
        lat.join_[x * n + y] = static_cast<std::uint32_t>(*best);
      }
    }
  }

  lat.meet_.assign(n * n, 0);
  for (Elem x : topo) {
    for (Elem y = 0; y < n; ++y) {
      if (lat.leq(x, y)) {
        lat.meet_[x * n + y] = static_cast<std::uint32_t>(x);
      } else if (lat.leq(y, x)) {
        lat.meet_[x * n + y] = static_cast<std::uint32_t>(y);
      } else {
        std::optional<Elem> best;
        for (Elem xl : lat.lower_[x]) {
          const Elem c = lat.meet_[xl * n + y];
          if (!best || lat.leq(*best, c)) best = c;
        }
        bool greatest = best.has_value();
        if (greatest) {
          for (Elem xl : lat.lower_[x]) {
            if (!lat.leq(lat.meet_[xl * n + y], *best)) {
              greatest = false;
              break;
            }
          }
        }
        if (!greatest)
          throw Error(ErrorCode::NotALattice,
                      "no greatest lower bound for " + pair_text(lat.names_, x, y));
        lat.meet_[x * n + y] = static_cast<std::uint32_t>(*best);
      }
    }
  }

  lat.bottom_ = topo.front();
  lat.top_ = topo.back();
  for (Elem x = 0; x < n; ++x) {
    if (!lat.leq(lat.bottom_, x) || !lat.leq(x, lat.top_))
      throw Error(ErrorCode::NotALattice, "no unique bottom and top");
  }

  lat.rank_.assign(n, 0);
  for (Elem x : topo)
    for (Elem l : lat.lower_[x]) lat.rank_[x] = std::max(lat.rank_[x], lat.rank_[l] + 1);

  for (Elem x = 0; x < n; ++x)
    for (Elem y : lat.upper_[x]) lat.covers_.push_back({x, y});
  std::sort(lat.covers_.begin(), lat.covers_.end());
  for (auto& v : lat.lower_) std::sort(v.begin(), v.end());
  for (auto& v : lat.upper_) std::sort(v.begin(), v.end());

  // A finite lattice is modular iff the rank is a grading satisfying
  // r(x) + r(y) = r(x + y) + r(xy).
  bool graded = true;
  for (const auto& c : lat.covers_)
    if (lat.rank_[c.upper] != lat.rank_[c.lower] + 1) graded = false;
  bool valuation = graded;
  for (Elem x = 0; valuation && x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (lat.rank_[x] + lat.rank_[y] != lat.rank_[lat.join(x, y)] + lat.rank_[lat.meet(x, y)]) {
        valuation = false;
        break;
      }
  lat.modular_ = valuation;
  return lat;
}

bool Lattice::is_cover(Elem lower, Elem upper) const noexcept {
  const auto& ups = upper_[lower];
  return std::binary_search(ups.begin(), ups.end(), upper);
}

Elem Lattice::join_all(std::span<const Elem> xs) const noexcept {
  Elem acc = bottom_;
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

Elem Lattice::meet_all(std::span<const Elem> xs) const noexcept {
  Elem acc = top_;
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

std::optional<Elem> Lattice::find(std::string_view name) const {
  for (Elem x = 0; x < n_; ++x)
    if (names_[x] == name) return x;
  return std::nullopt;
}

bool is_modular(const Lattice& lattice) { return lattice.modular(); }

std::vector<JoinIrreducible> join_irreducibles(const Lattice& lattice) {
  std::vector<JoinIrreducible> out;
  for (Elem x = 0; x < lattice.size(); ++x)
    if (lattice.lower_covers(x).size() == 1) out.push_back({x, lattice.lower_covers(x).front()});
  return out;
}

bool is_join_irreducible(const Lattice& lattice, Elem x) {
  return lattice.lower_covers(x).size() == 1;
}

std::vector<Elem> ji_below(const Lattice& lattice, Elem a) {
  std::vector<Elem> out;
  for (Elem x = 0; x < lattice.size(); ++x)
    if (is_join_irreducible(lattice, x) && lattice.leq(x, a)) out.push_back(x);
  return out;
}

std::vector<Elem> ji_between(const Lattice& lattice, Elem a, Elem b) {
  std::vector<Elem> out;
  for (Elem x = 0; x < lattice.size(); ++x)
    if (is_join_irreducible(lattice, x) && lattice.leq(x, b) && !lattice.leq(x, a))
      out.push_back(x);
  return out;
}

bool transposes_up(const Lattice& lattice, Quotient from, Quotient to) {
  return lattice.join(from.upper, to.lower) == to.upper &&
         lattice.meet(from.upper, to.lower) == from.lower;
}

bool perspective_up(const Lattice& lattice, Quotient p, Quotient q) {
  for (Elem e = 0; e < lattice.size(); ++e) {
    if (lattice.meet(p.upper, e) != p.lower || lattice.meet(q.upper, e) != q.lower) continue;
    if (lattice.join(p.upper, e) == lattice.join(q.upper, e)) return true;
  }
  return false;
}

std::vector<std::vector<Quotient>> projectivity_classes(const Lattice& lattice) {
  const auto& primes = lattice.covers();
  UnionFind uf(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      if (transposes_up(lattice, primes[i], primes[j]) ||
          transposes_up(lattice, primes[j], primes[i]))
        uf.unite(i, j);
    }
  }
  std::vector<std::vector<Quotient>> classes;
  std::vector<std::size_t> slot(primes.size(), SIZE_MAX);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::size_t root = uf.find(i);
    if (slot[root] == SIZE_MAX) {
      slot[root] = classes.size();
      classes.emplace_back();
    }
    classes[slot[root]].push_back(primes[i]);
  }
  return classes;
}

namespace {

struct Signature {
  int rank;
  std::size_t lower, upper, down, up;
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const Lattice& lat) {
  std::vector<Signature> sig(lat.size());
  for (Elem x = 0; x < lat.size(); ++x) {
    std::size_t down = 0, up = 0;
    for (Elem y = 0; y < lat.size(); ++y) {
      down += lat.leq(y, x);
      up += lat.leq(x, y);
    }
    sig[x] = {lat.rank(x), lat.lower_covers(x).size(), lat.upper_covers(x).size(), down, up};
  }
  return sig;
}

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const Lattice& a, const Lattice& b,
                                                  std::size_t cap) {
  if (a.size() > cap || b.size() > cap)
    throw Error(ErrorCode::SizeCapExceeded,
                "isomorphism test limited to " + std::to_string(cap) + " elements");
  if (a.size() != b.size() || a.covers().size() != b.covers().size()) return std::nullopt;
  const std::size_t n = a.size();
  const auto sa = signatures(a);
  const auto sb = signatures(b);
  {
    auto key = [](const Signature& s) {
      return std::tuple(s.rank, s.lower, s.upper, s.down, s.up);
    };
    std::vector<std::tuple<int, std::size_t, std::size_t, std::size_t, std::size_t>> ka, kb;
    for (const auto& s : sa) ka.push_back(key(s));
    for (const auto& s : sb) kb.push_back(key(s));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return std::nullopt;
  }

  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem x, Elem y) { return a.rank(x) < a.rank(y); });

  std::vector<std::vector<Elem>> candidates(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (sa[x] == sb[y]) candidates[x].push_back(y);

  std::vector<Elem> map(n, SIZE_MAX);
  std::vector<bool> used(n, false);

  // Iterative backtracking over `order`.
  std::vector<std::size_t> choice(n, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == n) return map;
    const Elem x = order[depth];
    bool placed = false;
    while (choice[depth] < candidates[x].size()) {
      const Elem y = candidates[x][choice[depth]++];
      if (used[y]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Elem u = order[k];
        const Elem v = map[u];
        ok = a.leq(u, x) == b.leq(v, y) && a.leq(x, u) == b.leq(y, v);
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = true;
      placed = true;
      break;
    }
    if (placed) {
      ++depth;
      if (depth < n) choice[depth] = 0;
      continue;
    }
    if (depth == 0) return std::nullopt;
    --depth;
    const Elem back = order[depth];
    used[map[back]] = false;
    map[back] = SIZE_MAX;
  }
}

bool is_isomorphic(const Lattice& a, const Lattice& b, std::size_t cap) {
  return find_isomorphism(a, b, cap).has_value();
}

}  // namespace modlat
