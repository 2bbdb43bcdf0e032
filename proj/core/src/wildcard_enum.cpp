#include <algorithm>
#include <atomic>
#include <thread>

#include "modlat/error.hpp"
#include "modlat/wildcard.hpp"
#include "row_editor.hpp"

namespace modlat {

// ---------------------------------------------------------------------------
// Seeding

namespace {

constexpr std::int8_t kOpen = -1;

void seed_rec(const Poset& poset, std::vector<std::int8_t> state, std::vector<Row>& out) {
  const std::size_t n = poset.size();
  std::vector<std::size_t> open;
  for (std::size_t p = 0; p < n; ++p)
    if (state[p] == kOpen) open.push_back(p);

  // Comparability components among the undetermined points.
  std::vector<std::size_t> comp(n, SIZE_MAX);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t p : open) {
    if (comp[p] != SIZE_MAX) continue;
    comp[p] = comps.size();
    std::vector<std::size_t> members{p};
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t q : open)
        if (comp[q] == SIZE_MAX && poset.comparable(members[i], q)) {
          comp[q] = comps.size();
          members.push_back(q);
        }
    std::sort(members.begin(), members.end());
    comps.push_back(std::move(members));
  }

  std::size_t pivot = SIZE_MAX, best = 0;
  for (const auto& c : comps) {
    if (c.size() < 3) continue;
    for (std::size_t p : c) {
      std::size_t degree = 0;
      for (std::size_t q : c) degree += (q != p && poset.comparable(p, q));
      if (pivot == SIZE_MAX || degree > best || (degree == best && p < pivot)) {
        pivot = p;
        best = degree;
      }
    }
  }

  if (pivot == SIZE_MAX) {
    Row row(n);
    for (std::size_t p = 0; p < n; ++p)
      if (state[p] != kOpen) row.fix(p, state[p] == 1);
    for (const auto& c : comps) {
      if (c.size() != 2) continue;
      const std::size_t lo = poset.lt(c[0], c[1]) ? c[0] : c[1];
      const std::size_t hi = lo == c[0] ? c[1] : c[0];
      row.add_group({GroupKind::Imp, {hi}, {lo}});
    }
    out.push_back(std::move(row));
    return;
  }

  auto with_pivot = state;
  with_pivot[pivot] = 1;
  for (std::size_t q = 0; q < n; ++q)
    if (poset.lt(q, pivot)) with_pivot[q] = 1;
  seed_rec(poset, std::move(with_pivot), out);

  state[pivot] = 0;
  for (std::size_t q = 0; q < n; ++q)
    if (poset.lt(pivot, q)) state[q] = 0;
  seed_rec(poset, std::move(state), out);
}

}  // namespace

RowSet seed_order_ideals(const Poset& poset) {
  RowSet set;
  set.width = poset.size();
  seed_rec(poset, std::vector<std::int8_t>(poset.size(), kOpen), set.rows);
  return set;
}

// ---------------------------------------------------------------------------
// Imposing a line

namespace {

std::optional<Row> assign_all(Row row, std::span<const std::size_t> positions, bool value,
                              std::size_t except = SIZE_MAX) {
  for (std::size_t p : positions) {
    if (p == except) continue;
    auto next = row.assign(p, value);
    if (!next) return std::nullopt;
    row = std::move(*next);
  }
  return row;
}

/// Upper bound on the number of ones any member of `row` has on `positions`.
std::size_t max_ones(const Row& row, std::span<const std::size_t> positions) {
  std::size_t bound = 0;
  std::vector<std::size_t> capped;
  for (std::size_t p : positions) {
    switch (row.kind(p)) {
      case CellKind::Zero: break;
      case CellKind::One:
      case CellKind::Free: ++bound; break;
      case CellKind::Member: {
        const std::size_t g = row.group_of(p);
        const GroupKind k = row.groups()[g].kind;
        if (k == GroupKind::Eps || k == GroupKind::G) {
          if (std::find(capped.begin(), capped.end(), g) == capped.end()) {
            capped.push_back(g);
            ++bound;
          }
        } else {
          ++bound;
        }
        break;
      }
    }
  }
  return bound;
}

/// Subset of `row` where exactly one of the group's line cells `on_line` is
/// 1 and every other line cell is 0. Only for eps, g and ell groups.
std::optional<Row> exactly_one_in_group(const Row& row, std::size_t g,
                                        const std::vector<std::size_t>& on_line,
                                        std::span<const std::size_t> line) {
  auto off = [&](std::size_t p) {
    return std::find(on_line.begin(), on_line.end(), p) == on_line.end();
  };
  std::vector<std::size_t> zeroed;
  for (std::size_t p : row.groups()[g].members)
    if (off(p)) zeroed.push_back(p);
  for (std::size_t p : line)
    if (off(p)) zeroed.push_back(p);
  auto r = assign_all(row, zeroed, false);
  if (!r) return std::nullopt;
  // What is left of the group sits exactly on `on_line`.
  RowEditor ed(*r);
  ed.group(r->group_of(on_line.front())).kind = GroupKind::G;
  if (!ed.finish()) return std::nullopt;
  return r;
}

/// Two rows equal except on cells fixed to all 0 in one and all 1 in the
/// other merge into one row with a d group (or a free cell) there.
std::optional<Row> merge_pair(const Row& x, const Row& y) {
  if (x.width() != y.width() || x.groups() != y.groups()) return std::nullopt;
  std::vector<std::size_t> diff;
  int direction = 0;
  for (std::size_t p = 0; p < x.width(); ++p) {
    const CellKind a = x.kind(p), b = y.kind(p);
    if (a == b && (a != CellKind::Member || x.group_of(p) == y.group_of(p))) continue;
    if (!x.is_fixed(p) || !y.is_fixed(p)) return std::nullopt;
    const int dir = a == CellKind::Zero ? 1 : 2;
    if (direction != 0 && dir != direction) return std::nullopt;
    direction = dir;
    diff.push_back(p);
  }
  if (diff.empty()) return std::nullopt;
  Row merged = x;
  {
    RowEditor ed(merged);
    for (std::size_t p : diff) ed.set(p, CellKind::Free);
  }
  if (diff.size() >= 2) merged.add_group({GroupKind::D, diff, {}});
  return merged;
}

void merge_rows(std::vector<Row>& rows) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rows.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < rows.size() && !changed; ++j) {
        if (auto m = merge_pair(rows[i], rows[j])) {
          rows[i] = std::move(*m);
          rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        }
      }
    }
  }
}

}  // namespace

std::vector<Row> impose_line(const Row& row, std::span<const std::size_t> positions) {
  std::vector<std::size_t> line(positions.begin(), positions.end());
  std::sort(line.begin(), line.end());
  line.erase(std::unique(line.begin(), line.end()), line.end());
  for (std::size_t p : line)
    if (p >= row.width()) throw Error(ErrorCode::InvalidInput, "line position out of range");

  std::vector<std::size_t> ones, zeros, free_cells, members;
  for (std::size_t p : line) {
    switch (row.kind(p)) {
      case CellKind::One: ones.push_back(p); break;
      case CellKind::Zero: zeros.push_back(p); break;
      case CellKind::Free: free_cells.push_back(p); break;
      case CellKind::Member: members.push_back(p); break;
    }
  }
  if (line.size() <= 2 || ones.size() == line.size() || max_ones(row, line) <= 1) return {row};

  std::vector<Row> out;
  auto emit = [&](std::optional<Row> r) {
    if (r) out.push_back(std::move(*r));
  };

  if (members.empty() && zeros.empty() && ones.empty()) {
    Row r = row;
    r.add_group({GroupKind::Ell, free_cells, {}});
    out.push_back(std::move(r));
    return out;
  }

  // At most one 1 on the line.
  if (ones.size() == 1) {
    emit(assign_all(row, line, false, ones.front()));
  } else if (ones.empty()) {
    auto zero = assign_all(row, members, false);
    if (zero && free_cells.size() >= 2) zero->add_group({GroupKind::Eps, free_cells, {}});
    emit(std::move(zero));

    std::vector<std::size_t> handled;
    for (std::size_t p : members) {
      if (std::find(handled.begin(), handled.end(), p) != handled.end()) continue;
      const std::size_t g = row.group_of(p);
      const GroupSpec& spec = row.groups()[g];
      std::vector<std::size_t> on_line;
      for (std::size_t q : members)
        if (row.group_of(q) == g) on_line.push_back(q);
      const bool collective = on_line.size() >= 2 && (spec.kind == GroupKind::Eps ||
                                                      spec.kind == GroupKind::G ||
                                                      spec.kind == GroupKind::Ell);
      if (collective) {
        emit(exactly_one_in_group(row, g, on_line, line));
        handled.insert(handled.end(), on_line.begin(), on_line.end());
        continue;
      }
      if (spec.kind == GroupKind::D && on_line.size() >= 2) {
        handled.insert(handled.end(), on_line.begin(), on_line.end());
        continue;
      }
      auto r = assign_all(row, line, false, p);
      if (r) r = r->assign(p, true);
      emit(std::move(r));
      handled.push_back(p);
    }
  }

  // All ones on the line.
  if (zeros.empty()) emit(assign_all(row, line, true));

  merge_rows(out);
  return out;
}

// ---------------------------------------------------------------------------
// LIFO driver

namespace {

struct Driver {
  const std::vector<std::vector<std::size_t>>& lines;
  std::size_t next_label;
  bool labelled;
  const EnumerateOptions* options = nullptr;

  /// Imposes pending lines until the row changes shape or becomes final.
  /// Returns the replacement rows (possibly just `row`, now final).
  std::vector<Row> step(Row row) {
    while (!row.pending.empty()) {
      const std::size_t id = row.pending.front();
      auto parts = impose_line(row, lines[id]);
      row.pending.erase(row.pending.begin());
      if (parts.size() == 1 && parts.front().same_cells(row)) continue;
      for (auto& p : parts) {
        p.pending = row.pending;
        if (labelled) p.label = "r" + std::to_string(next_label++);
      }
      return parts;
    }
    return {std::move(row)};
  }

  void run(std::vector<Row>& stack, std::vector<Row>& finals, std::size_t stop_at = SIZE_MAX) {
    // stack.back() is the top.
    while (!stack.empty() && stack.size() < stop_at) {
      Row top = std::move(stack.back());
      stack.pop_back();
      if (top.pending.empty()) {
        finals.push_back(std::move(top));
      } else {
        auto parts = step(std::move(top));
        if (parts.size() == 1 && parts.front().pending.empty()) {
          finals.push_back(std::move(parts.front()));
        } else {
          for (auto it = parts.rbegin(); it != parts.rend(); ++it) stack.push_back(std::move(*it));
        }
      }
      if (options && options->trace) {
        std::vector<Row> view(stack.rbegin(), stack.rend());
        options->trace(view, finals);
      }
    }
  }
};

}  // namespace

RowSet enumerate(const Poset& poset, const std::vector<std::vector<std::size_t>>& lines,
                 const EnumerateOptions& options) {
  for (const auto& l : lines)
    for (std::size_t p : l)
      if (p >= poset.size()) throw Error(ErrorCode::InvalidInput, "line point out of range");

  RowSet seeds = seed_order_ideals(poset);
  std::vector<std::size_t> all(lines.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (std::size_t i = 0; i < seeds.rows.size(); ++i) {
    seeds.rows[i].pending = all;
    seeds.rows[i].label = "r" + std::to_string(i + 1);
  }

  RowSet result;
  result.width = poset.size();
  std::vector<Row> stack(seeds.rows.rbegin(), seeds.rows.rend());
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);

  if (jobs == 1) {
    Driver d{lines, seeds.rows.size() + 1, true, &options};
    if (options.trace) {
      std::vector<Row> view(stack.rbegin(), stack.rend());
      options.trace(view, result.rows);
    }
    d.run(stack, result.rows);
    return result;
  }

  // Grow a frontier, then finish every frontier row independently.
  Driver front{lines, 0, false};
  front.run(stack, result.rows, 4 * jobs);
  std::vector<Row> frontier(stack.rbegin(), stack.rend());
  std::vector<std::vector<Row>> parts(frontier.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Driver d{lines, 0, false};
    for (std::size_t i = next++; i < frontier.size(); i = next++) {
      std::vector<Row> local{std::move(frontier[i])};
      d.run(local, parts[i]);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(jobs, frontier.size()); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& p : parts)
    for (auto& r : p) result.rows.push_back(std::move(r));
  for (std::size_t i = 0; i < result.rows.size(); ++i) result.rows[i].label = "r" + std::to_string(i + 1);
  return result;
}

// ---------------------------------------------------------------------------
// Disjointness

namespace {

Bitstring some_member(const Row& row) {
  Bitstring x(row.width(), false);
  for (std::size_t p = 0; p < row.width(); ++p) x[p] = row.kind(p) == CellKind::One;
  for (const auto& g : row.groups())
    if (g.kind == GroupKind::G) x[g.members.front()] = true;
  return x;
}

bool all_open_free(const Row& row, const Row& other) {
  for (std::size_t p = 0; p < row.width(); ++p)
    if (!other.is_fixed(p) && row.kind(p) == CellKind::Member) return false;
  return true;
}

std::optional<Bitstring> witness_rec(Row x, Row y) {
  // Propagate cells fixed on one side only.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t p = 0; p < x.width(); ++p) {
      const bool fx = x.is_fixed(p), fy = y.is_fixed(p);
      if (fx && fy) {
        if (x.kind(p) != y.kind(p)) return std::nullopt;
      } else if (fx || fy) {
        const bool v = (fx ? x.kind(p) : y.kind(p)) == CellKind::One;
        auto& target = fx ? y : x;
        auto next = target.assign(p, v);
        if (!next) return std::nullopt;
        target = std::move(*next);
        changed = true;
      }
    }
  }
  if (all_open_free(x, y)) return some_member(y);
  if (all_open_free(y, x)) return some_member(x);
  for (std::size_t p = 0; p < x.width(); ++p) {
    if (x.is_fixed(p)) continue;
    if (x.kind(p) != CellKind::Member && y.kind(p) != CellKind::Member) continue;
    for (bool v : {false, true}) {
      auto xa = x.assign(p, v);
      auto ya = y.assign(p, v);
      if (!xa || !ya) continue;
      if (auto w = witness_rec(std::move(*xa), std::move(*ya))) return w;
    }
    return std::nullopt;
  }
  return some_member(x);
}

std::string bits_text(const Bitstring& x) {
  std::string s;
  for (bool b : x) s += b ? '1' : '0';
  return s;
}

}  // namespace

std::optional<Bitstring> common_witness(const Row& a, const Row& b) {
  if (a.width() != b.width()) throw Error(ErrorCode::InvalidInput, "rows differ in width");
  for (std::size_t p = 0; p < a.width(); ++p)
    if (a.is_fixed(p) && b.is_fixed(p) && a.kind(p) != b.kind(p)) return std::nullopt;
  return witness_rec(a, b);
}

RowSetReport validate_rowset(const RowSet& set) {
  RowSetReport report;
  report.rows = set.rows.size();
  for (std::size_t i = 0; i < set.rows.size(); ++i) {
    if (set.rows[i].width() != set.width)
      throw Error(ErrorCode::InvalidInput, "row " + std::to_string(i) + " has the wrong width");
    for (std::size_t j = i + 1; j < set.rows.size(); ++j) {
      if (auto w = common_witness(set.rows[i], set.rows[j])) {
        auto name = [&](std::size_t k) {
          return set.rows[k].label.empty() ? "#" + std::to_string(k) : set.rows[k].label;
        };
        throw Error(ErrorCode::OverlapFound,
                    "rows " + name(i) + " and " + name(j) + " share " + bits_text(*w));
      }
    }
    report.total += row_count(set.rows[i]);
  }
  return report;
}

}  // namespace modlat
