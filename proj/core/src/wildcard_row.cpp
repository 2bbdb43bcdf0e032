#include <algorithm>

#include "modlat/error.hpp"
#include "modlat/wildcard.hpp"
#include "row_editor.hpp"

namespace modlat {

std::string_view to_string(GroupKind kind) noexcept {
  switch (kind) {
    case GroupKind::Imp: return "imp";
    case GroupKind::D: return "d";
    case GroupKind::Eps: return "eps";
    case GroupKind::G: return "g";
    case GroupKind::Ell: return "ell";
  }
  return "?";
}

namespace {

std::size_t min_position(const GroupSpec& g) {
  std::size_t m = SIZE_MAX;
  if (!g.members.empty()) m = std::min(m, g.members.front());
  if (!g.implied.empty()) m = std::min(m, g.implied.front());
  return m;
}

std::size_t min_size(GroupKind kind) {
  switch (kind) {
    case GroupKind::G: return 1;
    case GroupKind::Imp: return 1;
    default: return 2;
  }
}

}  // namespace

void RowEditor::set(std::size_t pos, CellKind kind) {
  switch (kind) {
    case CellKind::Zero: row_.cell_[pos] = Row::kZero; break;
    case CellKind::One: row_.cell_[pos] = Row::kOne; break;
    case CellKind::Free: row_.cell_[pos] = Row::kFree; break;
    case CellKind::Member: break;
  }
}

bool RowEditor::finish() {
  auto& groups = row_.groups_;
  std::vector<GroupSpec> kept;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (dead_[g]) continue;
    GroupSpec spec = std::move(groups[g]);
    std::sort(spec.members.begin(), spec.members.end());
    std::sort(spec.implied.begin(), spec.implied.end());
    auto release = [&](const std::vector<std::size_t>& cells, CellKind k) {
      for (std::size_t p : cells) set(p, k);
    };
    const std::size_t n = spec.members.size();
    switch (spec.kind) {
      case GroupKind::Imp:
        if (spec.members.empty() || spec.implied.empty()) {
          release(spec.members, CellKind::Free);
          release(spec.implied, CellKind::Free);
          continue;
        }
        break;
      case GroupKind::D:
      case GroupKind::Eps:
        if (n < 2) {
          release(spec.members, CellKind::Free);
          continue;
        }
        break;
      case GroupKind::Ell:
        if (n < 3) {
          release(spec.members, CellKind::Free);
          continue;
        }
        break;
      case GroupKind::G:
        if (n == 0) return false;
        if (n == 1) {
          set(spec.members.front(), CellKind::One);
          continue;
        }
        break;
    }
    kept.push_back(std::move(spec));
  }
  std::sort(kept.begin(), kept.end(),
            [](const GroupSpec& a, const GroupSpec& b) { return min_position(a) < min_position(b); });
  for (std::size_t g = 0; g < kept.size(); ++g) {
    for (std::size_t p : kept[g].members) row_.cell_[p] = static_cast<std::int32_t>(g);
    for (std::size_t p : kept[g].implied) row_.cell_[p] = static_cast<std::int32_t>(g);
  }
  groups = std::move(kept);
  dead_.assign(groups.size(), false);
  return true;
}

Row::Row(std::size_t width) : cell_(width, kFree) {}

CellKind Row::kind(std::size_t pos) const noexcept {
  switch (cell_[pos]) {
    case kZero: return CellKind::Zero;
    case kOne: return CellKind::One;
    case kFree: return CellKind::Free;
    default: return CellKind::Member;
  }
}

void Row::fix(std::size_t pos, bool value) {
  if (pos >= width() || cell_[pos] != kFree)
    throw Error(ErrorCode::InvalidInput, "cell " + std::to_string(pos) + " is not free");
  cell_[pos] = value ? kOne : kZero;
}

void Row::add_group(GroupSpec spec) {
  const std::size_t size = spec.members.size();
  if (spec.kind == GroupKind::Imp ? (spec.members.empty() || spec.implied.empty())
                                  : size < min_size(spec.kind))
    throw Error(ErrorCode::InvalidInput, std::string(to_string(spec.kind)) + " group is too small");
  if (spec.kind != GroupKind::Imp && !spec.implied.empty())
    throw Error(ErrorCode::InvalidInput, "only implication groups have conclusions");
  std::vector<std::size_t> all = spec.members;
  all.insert(all.end(), spec.implied.begin(), spec.implied.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw Error(ErrorCode::InvalidInput, "group lists a position twice");
  for (std::size_t p : all)
    if (p >= width() || cell_[p] != kFree)
      throw Error(ErrorCode::InvalidInput, "group cell " + std::to_string(p) + " is not free");
  groups_.push_back(std::move(spec));
  RowEditor ed(*this);
  ed.finish();
}

std::optional<Row> Row::assign(std::size_t pos, bool value) const {
  const std::int32_t c = cell_[pos];
  if (c == kZero || c == kOne) {
    if ((c == kOne) != value) return std::nullopt;
    return *this;
  }
  Row out = *this;
  RowEditor ed(out);
  const CellKind v = value ? CellKind::One : CellKind::Zero;
  ed.set(pos, v);
  if (c == kFree) return out;

  const std::size_t g = static_cast<std::size_t>(c);
  GroupSpec& grp = ed.group(g);
  auto erase = [](std::vector<std::size_t>& xs, std::size_t p) {
    xs.erase(std::find(xs.begin(), xs.end(), p));
  };
  auto fill = [&](const std::vector<std::size_t>& cells, CellKind k) {
    for (std::size_t p : cells)
      if (p != pos) ed.set(p, k);
  };
  switch (grp.kind) {
    case GroupKind::D:
      fill(grp.members, v);
      ed.kill(g);
      break;
    case GroupKind::Eps:
    case GroupKind::G:
      if (value) {
        fill(grp.members, CellKind::Zero);
        ed.kill(g);
      } else {
        erase(grp.members, pos);
      }
      break;
    case GroupKind::Ell:
      erase(grp.members, pos);
      grp.kind = value ? GroupKind::D : GroupKind::Eps;
      break;
    case GroupKind::Imp: {
      const bool premise = std::find(grp.members.begin(), grp.members.end(), pos) != grp.members.end();
      if (premise && value) {
        fill(grp.implied, CellKind::One);
        erase(grp.members, pos);
        fill(grp.members, CellKind::Free);
        ed.kill(g);
      } else if (premise) {
        erase(grp.members, pos);
      } else if (value) {
        erase(grp.implied, pos);
      } else {
        fill(grp.members, CellKind::Zero);
        erase(grp.implied, pos);
        fill(grp.implied, CellKind::Free);
        ed.kill(g);
      }
      break;
    }
  }
  if (!ed.finish()) return std::nullopt;
  return out;
}

Count row_count(const Row& row) {
  Count total = 1;
  std::size_t free_cells = 0;
  for (std::size_t p = 0; p < row.width(); ++p)
    if (row.kind(p) == CellKind::Free) ++free_cells;
  total <<= free_cells;
  for (const auto& g : row.groups()) {
    const std::size_t n = g.members.size();
    switch (g.kind) {
      case GroupKind::Imp: {
        Count a = 1, b = 1;
        a <<= n;
        b <<= g.implied.size();
        total *= a + b - 1;
        break;
      }
      case GroupKind::D: total *= 2; break;
      case GroupKind::Eps: total *= n + 1; break;
      case GroupKind::G: total *= n; break;
      case GroupKind::Ell: total *= n + 2; break;
    }
  }
  return total;
}

bool contains(const Row& row, const Bitstring& x) {
  if (x.size() != row.width()) return false;
  for (std::size_t p = 0; p < row.width(); ++p) {
    const CellKind k = row.kind(p);
    if ((k == CellKind::Zero && x[p]) || (k == CellKind::One && !x[p])) return false;
  }
  for (const auto& g : row.groups()) {
    std::size_t ones = 0;
    for (std::size_t p : g.members) ones += x[p];
    const std::size_t n = g.members.size();
    switch (g.kind) {
      case GroupKind::Imp:
        if (ones > 0)
          for (std::size_t p : g.implied)
            if (!x[p]) return false;
        break;
      case GroupKind::D:
        if (ones != 0 && ones != n) return false;
        break;
      case GroupKind::Eps:
        if (ones > 1) return false;
        break;
      case GroupKind::G:
        if (ones != 1) return false;
        break;
      case GroupKind::Ell:
        if (ones > 1 && ones != n) return false;
        break;
    }
  }
  return true;
}

namespace {

/// All admissible value patterns of one group over (members..., implied...).
std::vector<std::vector<bool>> group_patterns(const GroupSpec& g) {
  const std::size_t n = g.members.size();
  std::vector<std::vector<bool>> out;
  switch (g.kind) {
    case GroupKind::Imp: {
      const std::size_t m = g.implied.size();
      for (std::size_t a = 0; a < (std::size_t{1} << n); ++a) {
        std::vector<bool> pat(n + m, true);
        for (std::size_t i = 0; i < n; ++i) pat[i] = (a >> i) & 1U;
        out.push_back(pat);
      }
      for (std::size_t b = 0; b + 1 < (std::size_t{1} << m); ++b) {
        std::vector<bool> pat(n + m, false);
        for (std::size_t j = 0; j < m; ++j) pat[n + j] = (b >> j) & 1U;
        out.push_back(pat);
      }
      break;
    }
    case GroupKind::D:
      out.emplace_back(n, false);
      out.emplace_back(n, true);
      break;
    case GroupKind::Eps:
    case GroupKind::G:
    case GroupKind::Ell:
      if (g.kind != GroupKind::G) out.emplace_back(n, false);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> pat(n, false);
        pat[i] = true;
        out.push_back(pat);
      }
      if (g.kind == GroupKind::Ell) out.emplace_back(n, true);
      break;
  }
  return out;
}

}  // namespace

std::vector<Bitstring> expand(const Row& row, std::size_t cap) {
  if (row_count(row) > cap)
    throw Error(ErrorCode::ExpansionCapExceeded,
                "row holds " + row_count(row).str() + " bitstrings, cap is " + std::to_string(cap));

  // Factors: each free cell and each group, with its positions and patterns.
  struct Factor {
    std::vector<std::size_t> positions;
    std::vector<std::vector<bool>> patterns;
  };
  std::vector<Factor> factors;
  Bitstring base(row.width(), false);
  for (std::size_t p = 0; p < row.width(); ++p) {
    if (row.kind(p) == CellKind::One) base[p] = true;
    if (row.kind(p) == CellKind::Free) factors.push_back({{p}, {{false}, {true}}});
  }
  for (const auto& g : row.groups()) {
    Factor f;
    f.positions = g.members;
    f.positions.insert(f.positions.end(), g.implied.begin(), g.implied.end());
    f.patterns = group_patterns(g);
    factors.push_back(std::move(f));
  }

  std::vector<Bitstring> out{base};
  for (const auto& f : factors) {
    std::vector<Bitstring> next;
    next.reserve(out.size() * f.patterns.size());
    for (const auto& x : out) {
      for (const auto& pat : f.patterns) {
        Bitstring y = x;
        for (std::size_t i = 0; i < pat.size(); ++i) y[f.positions[i]] = pat[i];
        next.push_back(std::move(y));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string row_cells_text(const Row& row) {
  std::vector<std::string> token(row.width());
  std::size_t counter[5] = {0, 0, 0, 0, 0};
  for (const auto& g : row.groups()) {
    const std::size_t k = ++counter[static_cast<std::size_t>(g.kind)];
    const std::string idx = std::to_string(k);
    switch (g.kind) {
      case GroupKind::Imp:
        for (std::size_t p : g.members) token[p] = "a" + idx;
        for (std::size_t p : g.implied) token[p] = "b" + idx;
        break;
      case GroupKind::D:
        for (std::size_t p : g.members) token[p] = "d" + idx;
        break;
      case GroupKind::Eps:
        for (std::size_t p : g.members) token[p] = "e" + idx;
        break;
      case GroupKind::G:
        for (std::size_t p : g.members) token[p] = "g" + idx;
        break;
      case GroupKind::Ell:
        for (std::size_t p : g.members) token[p] = "l" + idx;
        break;
    }
  }
  std::string out;
  for (std::size_t p = 0; p < row.width(); ++p) {
    if (p) out += ' ';
    switch (row.kind(p)) {
      case CellKind::Zero: out += '0'; break;
      case CellKind::One: out += '1'; break;
      case CellKind::Free: out += '2'; break;
      case CellKind::Member: out += token[p]; break;
    }
  }
  return out;
}

Count total_count(const RowSet& set) {
  Count total = 0;
  for (const auto& r : set.rows) total += row_count(r);
  return total;
}

std::vector<Bitstring> expand_all(const RowSet& set, std::size_t cap) {
  if (total_count(set) > cap)
    throw Error(ErrorCode::ExpansionCapExceeded,
                "row set holds " + total_count(set).str() + " bitstrings, cap is " + std::to_string(cap));
  std::vector<Bitstring> out;
  for (const auto& r : set.rows) {
    auto part = expand(r, cap);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace modlat
