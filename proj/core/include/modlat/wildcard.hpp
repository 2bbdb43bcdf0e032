#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modlat/poset.hpp"

namespace modlat {

using Bitstring = std::vector<bool>;
using Count = boost::multiprecision::cpp_int;

enum class GroupKind : std::uint8_t {
  Imp,  // any premise 1 => every conclusion 1
  D,    // all equal
  Eps,  // at most one 1
  G,    // exactly one 1
  Ell,  // at most one 1, or all 1
};

std::string_view to_string(GroupKind kind) noexcept;

struct GroupSpec {
  GroupKind kind = GroupKind::D;
  std::vector<std::size_t> members;  // premises for Imp
  std::vector<std::size_t> implied;  // conclusions, Imp only

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

enum class CellKind : std::uint8_t { Zero, One, Free, Member };

/// A compressed set of bitstrings of fixed width: every position is fixed,
/// free, or a member of exactly one wildcard group.
///
/// Rows are kept normalized: groups below their minimum size are dissolved
/// into fixed or free cells, and groups are ordered by smallest position, so
/// equal denotations built the same way compare equal.
class Row {
 public:
  explicit Row(std::size_t width = 0);

  std::size_t width() const noexcept { return cell_.size(); }
  CellKind kind(std::size_t pos) const noexcept;
  /// Group index of a Member cell.
  std::size_t group_of(std::size_t pos) const noexcept { return static_cast<std::size_t>(cell_[pos]); }
  const std::vector<GroupSpec>& groups() const noexcept { return groups_; }
  bool is_fixed(std::size_t pos) const noexcept { return cell_[pos] == kZero || cell_[pos] == kOne; }

  /// Pins a free cell. Throws Error{InvalidInput} if the cell is not free.
  void fix(std::size_t pos, bool value);
  /// Adds a group over free cells. Throws Error{InvalidInput} on overlap or
  /// if the group is below its kind's minimum size.
  void add_group(GroupSpec spec);

  /// The subset with x[pos] = value, or nullopt when that subset is empty.
  std::optional<Row> assign(std::size_t pos, bool value) const;

  std::vector<std::size_t> pending;  // constraint ids still to impose, in order
  std::string label;

  /// Structural equality of cells and groups (ignores pending and label).
  bool same_cells(const Row& other) const noexcept {
    return cell_ == other.cell_ && groups_ == other.groups_;
  }

 private:
  static constexpr std::int32_t kZero = -3;
  static constexpr std::int32_t kOne = -2;
  static constexpr std::int32_t kFree = -1;

  friend class RowEditor;

  std::vector<std::int32_t> cell_;
  std::vector<GroupSpec> groups_;
};

Count row_count(const Row& row);
bool contains(const Row& row, const Bitstring& x);
/// Throws Error{ExpansionCapExceeded} when the row holds more than `cap` strings.
std::vector<Bitstring> expand(const Row& row, std::size_t cap = 1u << 20);

/// Text form: one token per position (0 1 2 a1 b1 d1 e1 g1 l1 ...).
std::string row_cells_text(const Row& row);

struct RowSet {
  std::size_t width = 0;
  std::vector<Row> rows;
};

Count total_count(const RowSet& set);
std::vector<Bitstring> expand_all(const RowSet& set, std::size_t cap = 1u << 20);

/// Rows whose union is the set of order ideals of `poset` (bit i = point i).
RowSet seed_order_ideals(const Poset& poset);

/// Pairwise disjoint rows whose union is the subset of `row` with at most one
/// 1 on `positions` or all of them 1. Returns {row} when the row already
/// satisfies the constraint.
std::vector<Row> impose_line(const Row& row, std::span<const std::size_t> positions);

struct EnumerateOptions {
  std::size_t jobs = 1;
  /// Called after every processing step with the working stack (top first)
  /// and the final rows so far. Only honoured when jobs == 1.
  std::function<void(const std::vector<Row>& stack, const std::vector<Row>& finals)> trace;
};

/// Rows denoting the order ideals X of `poset` with |X ∩ l| >= 2 => l ⊆ X for
/// every line l. Lines are processed last-in-first-out row by row.
RowSet enumerate(const Poset& poset, const std::vector<std::vector<std::size_t>>& lines,
                 const EnumerateOptions& options = {});

struct RowSetReport {
  std::size_t rows = 0;
  Count total = 0;
};

/// Exact pairwise disjointness check. Throws Error{OverlapFound} naming the
/// two rows and a common bitstring.
RowSetReport validate_rowset(const RowSet& set);
/// A bitstring in both rows, if any.
std::optional<Bitstring> common_witness(const Row& a, const Row& b);

}  // namespace modlat
