#include "modlat/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "modlat/error.hpp"

namespace modlat {

namespace {

using Signed = long long;

Signed sg(std::size_t x) { return static_cast<Signed>(x); }

Verdict verdict(std::string name, bool pass, std::string detail) {
  return {std::move(name), true, pass, std::move(detail)};
}

Verdict skipped(std::string name, std::string why) { return {std::move(name), false, true, std::move(why)}; }

// Line-top -> index into the interval list.
class MnIndex {
 public:
  explicit MnIndex(const Lattice& lattice) : lattice_(lattice), intervals_(line_intervals(lattice)) {
    slot_.assign(lattice.size(), npos);
    for (std::size_t k = 0; k < intervals_.size(); ++k) slot_[intervals_[k].top] = k;
  }

  const std::vector<LineInterval>& intervals() const noexcept { return intervals_; }

  const LineInterval& at(Elem x) const {
    if (x >= slot_.size() || slot_[x] == npos)
      throw Error(ErrorCode::NotAnMnElement,
                  (x < lattice_.size() ? lattice_.name(x) : std::to_string(x)) + " is not a line-top");
    return intervals_[slot_[x]];
  }

  bool ssmaller(Elem x, Elem y) const {
    const auto& iy = at(y);
    at(x);
    return lattice_.lt(x, y) && !lattice_.leq(x, iy.bottom);
  }

  bool ccomparable(Elem x, Elem y) const { return ssmaller(x, y) || ssmaller(y, x); }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  const Lattice& lattice_;
  std::vector<LineInterval> intervals_;
  std::vector<std::size_t> slot_;
};

Elem lower_star(const Lattice& lattice, Elem p) { return lattice.lower_covers(p).front(); }

std::optional<PointId> common_point(const std::vector<PointId>& a, const std::vector<PointId>& b) {
  std::vector<PointId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  if (out.size() != 1) return std::nullopt;
  return out.front();
}

std::string list(const Lattice& lattice, const std::vector<Elem>& xs) {
  std::string s = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + lattice.name(xs[k]);
  return s + "}";
}

std::size_t projectivity_class_count(const Lattice& lattice) {
  return projectivity_classes(lattice).size();
}

// Line triples pairwise meeting in three distinct points.
struct Triangle {
  std::size_t l1, l2, l3;
  PointId s, p1, p2;
};

std::vector<Triangle> triangles(const BaseOfLines& bol, bool ordered_third) {
  const auto& lines = bol.pls.lines();
  std::vector<Triangle> out;
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      const auto s = common_point(lines[a], lines[b]);
      if (!s) continue;
      for (std::size_t c = ordered_third ? b + 1 : 0; c < lines.size(); ++c) {
        if (c == a || c == b) continue;
        const auto p1 = common_point(lines[a], lines[c]);
        const auto p2 = common_point(lines[b], lines[c]);
        if (!p1 || !p2 || *p1 == *s || *p2 == *s || *p1 == *p2) continue;
        out.push_back({a, b, c, *s, *p1, *p2});
      }
    }
  }
  return out;
}

bool acyclic_everywhere(const Lattice& lattice, const BaseOfLines& bol) {
  for (const auto& [a, b] : lattice.covers())
    if (!is_acyclic(localize(lattice, bol, a, b))) return false;
  return true;
}

}  // namespace

bool all_pass(const std::vector<Verdict>& verdicts) noexcept {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

ParamsReport params(const Lattice& lattice) {
  ParamsReport r;
  const auto intervals = line_intervals(lattice);
  r.j = join_irreducibles(lattice).size();
  r.delta = static_cast<std::size_t>(lattice.height());
  r.i = intervals.size();
  for (const auto& iv : intervals) {
    r.mu += iv.n();
    r.o = std::max(r.o, iv.n() - 1);
  }
  const BaseOfLines bol = canonical_bol(lattice);
  r.s = components(bol.pls).size();
  r.rstar_canonical = rstar(bol.pls);
  r.acyclic = is_acyclic(bol.pls);
  r.locally_acyclic = cycle_profile(lattice).locally_acyclic;
  const std::size_t classes = projectivity_class_count(lattice);
  r.verdicts.push_back(verdict("s matches projectivity classes", classes == r.s,
                               "components " + std::to_string(r.s) + ", classes " +
                                   std::to_string(classes)));
  return r;
}

std::vector<Verdict> check_thm92(const Lattice& lattice, std::size_t cap) {
  const ParamsReport p = params(lattice);
  const Signed rhs = sg(p.mu) - sg(p.i) + sg(p.s);
  std::ostringstream nums;
  nums << "j=" << p.j << " mu-i+s=" << rhs;

  std::vector<Verdict> out;
  out.push_back(verdict("j <= mu - i + s", sg(p.j) <= rhs, nums.str()));
  const bool equal = sg(p.j) == rhs;
  out.push_back(verdict("j = mu - i + s iff acyclic", equal == p.acyclic,
                        nums.str() + (p.acyclic ? ", canonical base acyclic" : ", canonical base cyclic")));

  const BolFamily family = all_bols(lattice, cap);
  std::size_t disagree = 0;
  for (const auto& b : family.bols)
    if (is_acyclic(b.pls) != p.acyclic) ++disagree;
  out.push_back(verdict("all bases agree on acyclicity", disagree == 0,
                        std::to_string(family.bols.size()) + " bases" +
                            (family.truncated ? " (truncated)" : "") + ", " + std::to_string(disagree) +
                            " disagree"));
  return out;
}

CycleProfile cycle_profile(const Lattice& lattice, std::size_t cap) {
  CycleProfile out;
  const BolFamily family = all_bols(lattice, cap);
  bool any_cyclic = false, any_local = false;
  for (const auto& b : family.bols) {
    any_cyclic = any_cyclic || !is_acyclic(b.pls);
    any_local = any_local || !acyclic_everywhere(lattice, b);
  }
  if (any_cyclic || !family.truncated) out.acyclic = !any_cyclic;
  if (any_local || !family.truncated) out.locally_acyclic = !any_local;
  return out;
}

std::vector<Verdict> check_thm94(const Lattice& lattice, const BaseOfLines& bol) {
  return check_thm94(lattice, bol, cycle_profile(lattice));
}

std::vector<Verdict> check_thm94(const Lattice& lattice, const BaseOfLines& bol,
                                 const CycleProfile& profile) {
  const auto intervals = line_intervals(lattice);
  const Signed j = sg(join_irreducibles(lattice).size());
  const Signed d = lattice.height();
  const Signed s = sg(components(bol.pls).size());
  const Signed i = sg(intervals.size());
  Signed o = 1;
  for (const auto& iv : intervals) o = std::max(o, sg(iv.n()) - 1);
  const Signed r = sg(rstar(bol.pls));
  std::optional<bool> acyclic = profile.acyclic;
  std::optional<bool> locally_acyclic = profile.locally_acyclic;
  if (!is_acyclic(bol.pls)) acyclic = false;

  auto nums = [&](std::initializer_list<std::pair<const char*, Signed>> xs) {
    std::string t;
    for (const auto& [k, v] : xs) t += (t.empty() ? "" : " ") + std::string(k) + "=" + std::to_string(v);
    return t;
  };

  std::vector<Verdict> out;
  out.push_back(verdict("i >= delta - s and j >= 2 delta - s", i >= d - s && j >= 2 * d - s,
                        nums({{"i", i}, {"j", j}, {"delta", d}, {"s", s}})));
  if (o <= 2)
    out.push_back(verdict("j >= 2i + s - r* >= 2 delta - s",
                          j >= 2 * i + s - r && 2 * i + s - r >= 2 * d - s,
                          nums({{"j", j}, {"2i+s-r*", 2 * i + s - r}, {"2delta-s", 2 * d - s}})));
  else
    out.push_back(skipped("j >= 2i + s - r* >= 2 delta - s", "o=" + std::to_string(o)));

  if (!locally_acyclic) {
    out.push_back(skipped("locally acyclic: i = delta - s + r*", "too many bases to decide"));
  } else if (*locally_acyclic) {
    bool ok = i == d - s + r && j >= i + d;
    if (o <= 2) ok = ok && j == i + d;
    out.push_back(verdict("locally acyclic: i = delta - s + r*", ok,
                          nums({{"i", i}, {"delta-s+r*", d - s + r}, {"j", j}, {"i+delta", i + d}, {"o", o}})));
  } else {
    out.push_back(skipped("locally acyclic: i = delta - s + r*", "some localization is cyclic"));
  }

  if (!acyclic) {
    out.push_back(skipped("acyclic: i = delta - s", "too many bases to decide"));
  } else if (*acyclic) {
    bool ok = i == d - s;
    if (o <= 2) ok = ok && j == 2 * d - s;
    out.push_back(verdict("acyclic: i = delta - s", ok,
                          nums({{"i", i}, {"delta-s", d - s}, {"j", j}, {"2delta-s", 2 * d - s}, {"o", o}})));
  } else {
    out.push_back(skipped("acyclic: i = delta - s", "cyclic"));
  }

  out.push_back(verdict("r* >= 2i + s - j", 2 * i + s - j <= r,
                        nums({{"2i+s-j", 2 * i + s - j}, {"r*", r}})));
  if (o <= 2)
    out.push_back(verdict("r* <= 2i + 2s - 2 delta", r <= 2 * i + 2 * s - 2 * d,
                          nums({{"r*", r}, {"2i+2s-2delta", 2 * i + 2 * s - 2 * d}})));
  else
    out.push_back(skipped("r* <= 2i + 2s - 2 delta", "o=" + std::to_string(o)));
  return out;
}

bool is_locally_acyclic(const Lattice& lattice, BolMode mode, std::size_t cap) {
  if (mode == BolMode::Canonical) return acyclic_everywhere(lattice, canonical_bol(lattice));
  const BolFamily family = all_bols(lattice, cap);
  for (const auto& b : family.bols)
    if (!acyclic_everywhere(lattice, b)) return false;
  if (family.truncated)
    throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " bases of lines");
  return true;
}

std::vector<TriangleConfig> triangle_configurations(const BaseOfLines& bol) {
  const auto& lines = bol.pls.lines();
  std::vector<TriangleConfig> out;
  for (const auto& t : triangles(bol, false)) {
    for (std::size_t l4 = 0; l4 < lines.size(); ++l4) {
      if (l4 == t.l1 || l4 == t.l2 || l4 == t.l3) continue;
      const auto q = common_point(lines[l4], lines[t.l1]);
      const auto r = common_point(lines[l4], lines[t.l2]);
      const auto p3 = common_point(lines[l4], lines[t.l3]);
      if (!q || !r || !p3) continue;
      auto corner = [&](PointId x) { return x == t.s || x == t.p1 || x == t.p2; };
      if (corner(*q) || corner(*r) || corner(*p3)) continue;
      out.push_back({t.l1, t.l2, t.l3, l4, t.s, t.p1, t.p2, *q, *r, *p3});
    }
  }
  return out;
}

Quotient cyclic_localization_witness(const Lattice& lattice, const BaseOfLines& bol,
                                     const TriangleConfig& config) {
  auto fail = [&](const std::string& what) { throw Error(ErrorCode::ClaimViolated, what); };
  const Elem u = lattice.join(config.q, config.r);
  if (u != bol.tops[config.l4]) fail("q + r is not the top of the fourth line");
  if (lattice.join(config.q, config.p3) != u || lattice.join(config.r, config.p3) != u)
    fail("q + p3 or r + p3 differs from q + r");
  if (lattice.leq(config.s, u)) fail("s <= u for u = " + lattice.name(u));
  const Elem a = lattice.join(u, lower_star(lattice, config.s));
  const Elem b = lattice.join(u, config.s);
  if (!lattice.is_cover(a, b)) fail(lattice.name(a) + " is not covered by " + lattice.name(b));
  for (PointId p : {config.s, config.p1, config.p2}) {
    if (!lattice.leq(p, b)) fail(lattice.name(p) + " is not below b");
    if (lattice.leq(p, a)) fail(lattice.name(p) + " is below a");
  }
  if (!find_cycle(localize(lattice, bol, a, b)))
    fail("localization at (" + lattice.name(a) + ", " + lattice.name(b) + ") is acyclic");
  return {a, b};
}

bool ssmaller(const Lattice& lattice, Elem x, Elem y) { return MnIndex(lattice).ssmaller(x, y); }

MnCycleList mn_cycles(const Lattice& lattice, std::size_t maxlen, std::size_t cap) {
  const MnIndex index(lattice);
  std::vector<Elem> tops;
  for (const auto& iv : index.intervals()) tops.push_back(iv.top);
  std::sort(tops.begin(), tops.end());
  const std::size_t m = tops.size();
  std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (x != y && index.ccomparable(tops[x], tops[y])) adj[x][y] = 1;

  MnCycleList out;
  std::vector<std::size_t> path;
  std::vector<char> used(m, 0);
  auto emit = [&] {
    MnCycle c;
    for (std::size_t k = 0; k < path.size(); ++k) {
      c.tops.push_back(tops[path[k]]);
      c.up.push_back(index.ssmaller(tops[path[k]], tops[path[(k + 1) % path.size()]]));
    }
    out.cycles.push_back(std::move(c));
  };
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    if (out.truncated) return;
    const std::size_t last = path.back();
    if (path.size() >= 3 && adj[last][start] && path[1] < last) {
      if (out.cycles.size() == cap) {
        out.truncated = true;
        return;
      }
      emit();
    }
    if (path.size() == maxlen) return;
    for (std::size_t y = start + 1; y < m; ++y) {
      if (used[y] || !adj[last][y]) continue;
      used[y] = 1;
      path.push_back(y);
      self(self, start);
      path.pop_back();
      used[y] = 0;
    }
  };
  for (std::size_t start = 0; start < m && !out.truncated; ++start) {
    path = {start};
    used[start] = 1;
    dfs(dfs, start);
    used[start] = 0;
  }
  return out;
}

bool is_clean_cycle(const Lattice& lattice, const MnCycle& cycle) {
  const std::size_t k = cycle.tops.size();
  if (k < 3) return false;
  std::set<Elem> distinct(cycle.tops.begin(), cycle.tops.end());
  if (distinct.size() != k) return false;
  const MnIndex index(lattice);
  for (std::size_t t = 0; t < k; ++t) {
    const Elem v = cycle.tops[(t + k - 1) % k];
    const Elem u = cycle.tops[t];
    const Elem z = cycle.tops[(t + 1) % k];
    const auto& iu = index.at(u);
    const auto& iv = index.at(v);
    const auto& iz = index.at(z);
    const bool peak = index.ssmaller(v, u) && index.ssmaller(z, u);
    const bool valley = index.ssmaller(u, v) && index.ssmaller(u, z);
    if (!peak && !valley) continue;
    if (lattice.comparable(v, z)) return false;
    if (peak) {
      // (v_i, v) and (z_k, z) both transpose up to the same (u_0, u_j).
      for (Elem uj : iu.atoms) {
        const Quotient target{iu.bottom, uj};
        auto reaches = [&](Elem x) {
          return std::any_of(lattice.lower_covers(x).begin(), lattice.lower_covers(x).end(),
                             [&](Elem xi) { return transposes_up(lattice, {xi, x}, target); });
        };
        if (reaches(v) && reaches(z)) return false;
      }
    } else {
      // (u_j, u) transposes up to some (v_0, v_i) and some (z_0, z_k).
      for (Elem uj : lattice.lower_covers(u)) {
        const Quotient source{uj, u};
        auto reaches = [&](const LineInterval& iv_) {
          return std::any_of(iv_.atoms.begin(), iv_.atoms.end(),
                             [&](Elem xi) { return transposes_up(lattice, source, {iv_.bottom, xi}); });
        };
        if (reaches(iv) && reaches(iz)) return false;
      }
    }
  }
  return true;
}

Verdict check_line_claims(const Lattice& lattice, const BaseOfLines& bol) {
  const std::string name = "lines: joins, bottoms and sizes";
  for (std::size_t k = 0; k < bol.line_count(); ++k) {
    const auto& line = bol.pls.lines()[k];
    if (line.size() != bol.intervals[k].n())
      return verdict(name, false, "line " + list(lattice, line) + " has the wrong size");
    for (std::size_t x = 0; x < line.size(); ++x) {
      for (std::size_t y = x + 1; y < line.size(); ++y) {
        if (lattice.join(line[x], line[y]) != bol.tops[k])
          return verdict(name, false, "join differs from the top on " + list(lattice, line));
        const Elem bottom = lattice.join(lower_star(lattice, line[x]), lower_star(lattice, line[y]));
        if (bottom != bol.bottoms[k])
          return verdict(name, false, "p_* + q_* differs from the bottom on " + list(lattice, line));
      }
    }
  }
  return verdict(name, true, std::to_string(bol.line_count()) + " lines");
}

Verdict check_perspective_lines(const Lattice& lattice, const BaseOfLines& bol) {
  const std::string name = "points on a line are perspective";
  std::size_t pairs = 0;
  for (const auto& line : bol.pls.lines()) {
    for (std::size_t x = 0; x < line.size(); ++x) {
      for (std::size_t y = x + 1; y < line.size(); ++y) {
        ++pairs;
        const Quotient p{lower_star(lattice, line[x]), line[x]};
        const Quotient q{lower_star(lattice, line[y]), line[y]};
        if (!perspective_up(lattice, p, q))
          return verdict(name, false, lattice.name(line[x]) + ", " + lattice.name(line[y]));
      }
    }
  }
  return verdict(name, true, std::to_string(pairs) + " pairs");
}

Verdict check_perspective_pairs(const Lattice& lattice) {
  const std::string name = "perspective pairs span a line-interval";
  const auto intervals = line_intervals(lattice);
  const auto ji = join_irreducibles(lattice);
  std::size_t pairs = 0;
  for (std::size_t x = 0; x < ji.size(); ++x) {
    for (std::size_t y = x + 1; y < ji.size(); ++y) {
      const Quotient p{ji[x].lower_star, ji[x].elem};
      const Quotient q{ji[y].lower_star, ji[y].elem};
      if (!perspective_up(lattice, p, q)) continue;
      ++pairs;
      const Elem bottom = lattice.join(p.lower, q.lower);
      const Elem top = lattice.join(p.upper, q.upper);
      auto it = std::find_if(intervals.begin(), intervals.end(), [&](const LineInterval& iv) {
        return iv.bottom == bottom && iv.top == top;
      });
      const std::string pair = lattice.name(p.upper) + ", " + lattice.name(q.upper);
      if (it == intervals.end()) return verdict(name, false, "no line-interval for " + pair);
      const Elem a1 = lattice.join(bottom, p.upper), a2 = lattice.join(bottom, q.upper);
      auto atom = [&](Elem a) { return std::binary_search(it->atoms.begin(), it->atoms.end(), a); };
      if (a1 == a2 || !atom(a1) || !atom(a2)) return verdict(name, false, "atoms wrong for " + pair);
    }
  }
  return verdict(name, true, std::to_string(pairs) + " perspective pairs");
}

Verdict check_components(const Lattice& lattice, const BaseOfLines& bol) {
  const std::string name = "components are projectivity classes";
  const auto classes = projectivity_classes(lattice);
  std::map<Quotient, std::size_t> class_of;
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (const auto& q : classes[c]) class_of[q] = c;
  const auto comps = components(bol.pls);
  std::set<std::size_t> used;
  for (const auto& comp : comps) {
    std::set<std::size_t> mine;
    for (PointId p : comp) mine.insert(class_of.at({lower_star(lattice, p), p}));
    if (mine.size() != 1 || !used.insert(*mine.begin()).second)
      return verdict(name, false, "component " + list(lattice, comp) + " straddles classes");
  }
  const bool ok = used.size() == classes.size();
  return verdict(name, ok,
                 std::to_string(comps.size()) + " components, " + std::to_string(classes.size()) + " classes");
}

Verdict check_localizations_connected(const Lattice& lattice, const BaseOfLines& bol) {
  const std::string name = "localizations are connected";
  for (const auto& [a, b] : lattice.covers()) {
    const auto comps = components(localize(lattice, bol, a, b));
    if (comps.size() != 1)
      return verdict(name, false, "(" + lattice.name(a) + ", " + lattice.name(b) + ") has " +
                                      std::to_string(comps.size()) + " components");
  }
  return verdict(name, true, std::to_string(lattice.covers().size()) + " coverings");
}

Verdict check_coatom_counts(const Lattice& lattice, const BaseOfLines& bol) {
  const std::string name = "coatom counts |lines(a,1)| >= s_a, j(a,1) >= s_a + 1";
  if (lattice.size() < 2 || components(bol.pls).size() != 1)
    return skipped(name, "not congruence-simple");
  std::string detail;
  for (Elem a : lattice.lower_covers(lattice.top())) {
    std::size_t lines = 0;
    for (Elem t : bol.tops) lines += !lattice.leq(t, a);
    const std::size_t sa = components(induced(lattice, bol, a).pls).size();
    const std::size_t ja = ji_between(lattice, a, lattice.top()).size();
    const std::string here = lattice.name(a) + ": lines=" + std::to_string(lines) +
                             " j=" + std::to_string(ja) + " s_a=" + std::to_string(sa);
    if (lines < sa || ja < sa + 1) return verdict(name, false, here);
    if (detail.empty()) detail = here;
  }
  return verdict(name, true, detail);
}

Verdict check_exchange(const Lattice& lattice) {
  const std::string name = "exchange: some p in J(a) has p + q = r + q";
  const auto ji = join_irreducibles(lattice);
  std::size_t cases = 0;
  for (Elem a = 0; a < lattice.size(); ++a) {
    const auto below = ji_below(lattice, a);
    for (const auto& q : ji) {
      const Elem aq = lattice.join(a, q.elem);
      for (const auto& r : ji) {
        if (lattice.comparable(q.elem, r.elem)) continue;
        if (!lattice.leq(r.elem, aq) || lattice.leq(r.elem, a)) continue;
        ++cases;
        const Elem target = lattice.join(r.elem, q.elem);
        const bool found = std::any_of(below.begin(), below.end(),
                                       [&](Elem p) { return lattice.join(p, q.elem) == target; });
        if (!found)
          return verdict(name, false, "a=" + lattice.name(a) + " q=" + lattice.name(q.elem) +
                                          " r=" + lattice.name(r.elem));
      }
    }
  }
  return verdict(name, true, std::to_string(cases) + " cases");
}

Verdict check_three_line_cycles(const Lattice& lattice, const BaseOfLines& bol) {
  const std::string name = "3-line cycles have tops not all comparable";
  const auto ts = triangles(bol, true);
  for (const auto& t : ts) {
    const Elem x = bol.tops[t.l1], y = bol.tops[t.l2], z = bol.tops[t.l3];
    if (lattice.comparable(x, y) && lattice.comparable(y, z) && lattice.comparable(x, z))
      return verdict(name, false, "tops " + list(lattice, {x, y, z}));
  }
  return verdict(name, true, std::to_string(ts.size()) + " 3-line cycles");
}

Verdict check_short_mn_cycles(const Lattice& lattice) {
  const std::string name = "3-cycles of line-tops are chains";
  const auto found = mn_cycles(lattice, 3);
  for (const auto& c : found.cycles) {
    const auto& t = c.tops;
    if (!(lattice.comparable(t[0], t[1]) && lattice.comparable(t[1], t[2]) && lattice.comparable(t[0], t[2])))
      return verdict(name, false, list(lattice, t));
  }
  return verdict(name, true, std::to_string(found.cycles.size()) + " cycles of length 3");
}

Verdict check_clean_cycles(const Lattice& lattice, std::size_t maxlen) {
  const std::string name = "clean cycle forces a cyclic base";
  const auto found = mn_cycles(lattice, maxlen);
  const auto clean = std::find_if(found.cycles.begin(), found.cycles.end(),
                                  [&](const MnCycle& c) { return is_clean_cycle(lattice, c); });
  if (clean == found.cycles.end())
    return skipped(name, "untriggered: no clean cycle among " + std::to_string(found.cycles.size()) +
                             (found.truncated ? "+" : "") + " cycles");
  const bool cyclic = !is_acyclic(canonical_bol(lattice).pls);
  return verdict(name, cyclic, "clean cycle " + list(lattice, clean->tops));
}

Verdict check_triangle_witnesses(const Lattice& lattice, const BaseOfLines& bol) {
  const std::string name = "triangle configurations give cyclic localizations";
  const auto configs = triangle_configurations(bol);
  if (configs.empty()) return skipped(name, "no triangle configuration");
  for (const auto& c : configs) {
    try {
      cyclic_localization_witness(lattice, bol, c);
    } catch (const Error& e) {
      return verdict(name, false, e.what());
    }
  }
  return verdict(name, true, std::to_string(configs.size()) + " configurations");
}

SuiteReport run_suite(const Lattice& lattice, const SuiteOptions& options) {
  SuiteReport report;
  report.params = params(lattice);
  auto& out = report.verdicts;
  out = report.params.verdicts;
  for (auto& v : check_thm92(lattice, options.bol_cap)) out.push_back(std::move(v));

  const BolFamily family = all_bols(lattice, options.sample_bols);
  report.bols_truncated = family.truncated;
  const CycleProfile profile = cycle_profile(lattice, options.bol_cap);

  // Per-base verdicts merge by name; the first failure wins the detail.
  std::vector<Verdict> merged;
  std::map<std::string, std::size_t> slot;
  auto add = [&](Verdict v) {
    auto [it, fresh] = slot.emplace(v.name, merged.size());
    if (fresh) {
      merged.push_back(std::move(v));
      return;
    }
    Verdict& m = merged[it->second];
    if (!v.applicable) return;
    if (!m.applicable || (m.pass && !v.pass)) m = std::move(v);
  };
  std::set<std::size_t> rs;
  for (const auto& b : family.bols) {
    rs.insert(rstar(b.pls));
    for (auto& v : check_thm94(lattice, b, profile)) add(std::move(v));
    add(check_line_claims(lattice, b));
    add(check_perspective_lines(lattice, b));
    add(check_components(lattice, b));
    add(check_localizations_connected(lattice, b));
    add(check_coatom_counts(lattice, b));
    add(check_three_line_cycles(lattice, b));
    add(check_triangle_witnesses(lattice, b));
  }
  for (auto& v : merged) out.push_back(std::move(v));
  out.push_back(check_perspective_pairs(lattice));
  out.push_back(check_exchange(lattice));
  out.push_back(check_short_mn_cycles(lattice));
  out.push_back(check_clean_cycles(lattice, options.cycle_maxlen));
  report.rstar_observed.assign(rs.begin(), rs.end());
  return report;
}

}  // namespace modlat
