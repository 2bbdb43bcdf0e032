#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace modlat {

/// (lower, upper) pair of point indices.
using OrderPair = std::pair<std::size_t, std::size_t>;

/// Finite poset on points 0..n-1. The input relation may contain redundant
/// pairs; covers() always returns the transitive reduction.
class Poset {
 public:
  /// Throws Error{CycleInCovers | InvalidInput}.
  static Poset from_relation(std::size_t n, std::span<const OrderPair> relation,
                             std::vector<std::string> names = {});
  static Poset antichain(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool leq(std::size_t x, std::size_t y) const noexcept { return leq_[x * n_ + y] != 0; }
  bool lt(std::size_t x, std::size_t y) const noexcept { return x != y && leq(x, y); }
  bool comparable(std::size_t x, std::size_t y) const noexcept { return leq(x, y) || leq(y, x); }

  const std::vector<OrderPair>& covers() const noexcept { return covers_; }
  /// Strict down-set, sorted.
  std::vector<std::size_t> strictly_below(std::size_t x) const;
  std::vector<std::size_t> strictly_above(std::size_t x) const;
  bool is_minimal(std::size_t x) const;

  const std::string& name(std::size_t x) const noexcept { return names_[x]; }
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<OrderPair> covers_;
  std::vector<std::string> names_;
};

}  // namespace modlat
