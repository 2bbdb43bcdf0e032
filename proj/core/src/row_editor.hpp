#pragma once

#include "modlat/wildcard.hpp"

namespace modlat {

/// Low-level mutation of a Row's cells and groups. Edits may leave the row
/// denormalized; finish() restores the Row invariants.
class RowEditor {
 public:
  explicit RowEditor(Row& row) : row_(row), dead_(row.groups_.size(), false) {}

  void set(std::size_t pos, CellKind kind);
  GroupSpec& group(std::size_t g) { return row_.groups_[g]; }
  /// Drops the group; its cells must be set separately.
  void kill(std::size_t g) { dead_[g] = true; }

  /// Dissolves undersized groups, reorders groups by smallest position and
  /// refreshes member cells. Returns false if some G group became empty.
  bool finish();

 private:
  Row& row_;
  std::vector<bool> dead_;
};

}  // namespace modlat
