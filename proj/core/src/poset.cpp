#include "modlat/poset.hpp"

#include <algorithm>

#include "modlat/error.hpp"

namespace modlat {

Poset Poset::from_relation(std::size_t n, std::span<const OrderPair> relation,
                           std::vector<std::string> names) {
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  if (names.size() != n) throw Error(ErrorCode::InvalidInput, "name count does not match point count");

  Poset p;
  p.n_ = n;
  p.names_ = std::move(names);
  p.leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = 1;
  for (const auto& [lo, hi] : relation) {
    if (lo >= n || hi >= n) throw Error(ErrorCode::InvalidInput, "order pair index out of range");
    if (lo == hi) throw Error(ErrorCode::CycleInCovers, "self-loop at " + p.names_[lo]);
    p.leq_[lo * n + hi] = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq_[k * n + j]) p.leq_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.leq_[i * n + j] && p.leq_[j * n + i])
        throw Error(ErrorCode::CycleInCovers, "order relation contains a cycle through " + p.names_[i]);

  for (std::size_t lo = 0; lo < n; ++lo) {
    for (std::size_t hi = 0; hi < n; ++hi) {
      if (!p.lt(lo, hi)) continue;
      bool cover = true;
      for (std::size_t m = 0; m < n && cover; ++m)
        if (p.lt(lo, m) && p.lt(m, hi)) cover = false;
      if (cover) p.covers_.emplace_back(lo, hi);
    }
  }
  return p;
}

Poset Poset::antichain(std::size_t n) { return from_relation(n, {}); }

std::vector<std::size_t> Poset::strictly_below(std::size_t x) const {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < n_; ++y)
    if (lt(y, x)) out.push_back(y);
  return out;
}

std::vector<std::size_t> Poset::strictly_above(std::size_t x) const {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < n_; ++y)
    if (lt(x, y)) out.push_back(y);
  return out;
}

bool Poset::is_minimal(std::size_t x) const {
  for (std::size_t y = 0; y < n_; ++y)
    if (lt(y, x)) return false;
  return true;
}

}  // namespace modlat
