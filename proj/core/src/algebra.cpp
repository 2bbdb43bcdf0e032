#include "modlat/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "modlat/bol.hpp"
#include "modlat/error.hpp"
#include "modlat/rebuild.hpp"

namespace modlat {

Group::Group(std::vector<unsigned> factors, std::size_t cap) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorCode::InvalidInput, "a group needs at least one factor");
  for (unsigned n : factors_) {
    if (n < 2) throw Error(ErrorCode::InvalidInput, "factor " + std::to_string(n) + " is below 2");
    if (order_ > cap / n)
      throw Error(ErrorCode::CapExceeded, "group order exceeds " + std::to_string(cap));
    order_ *= n;
  }
  if (order_ > cap) throw Error(ErrorCode::CapExceeded, "group order exceeds " + std::to_string(cap));
}

std::size_t Group::encode(const std::vector<unsigned>& tuple) const {
  if (tuple.size() != factors_.size())
    throw Error(ErrorCode::InvalidInput, "tuple length does not match the group");
  std::size_t x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) x = x * factors_[i] + tuple[i] % factors_[i];
  return x;
}

std::vector<unsigned> Group::decode(std::size_t x) const {
  std::vector<unsigned> t(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    t[i] = static_cast<unsigned>(x % factors_[i]);
    x /= factors_[i];
  }
  return t;
}

std::size_t Group::add(std::size_t x, std::size_t y) const {
  std::size_t out = 0, stride = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const std::size_t n = factors_[i];
    out += ((x % n + y % n) % n) * stride;
    x /= n;
    y /= n;
    stride *= n;
  }
  return out;
}

std::string Group::element_name(std::size_t x) const {
  const auto t = decode(x);
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + ")";
}

Subgroup cyclic_subgroup(const Group& group, std::size_t x) {
  Subgroup h{0};
  for (std::size_t y = x; y != 0; y = group.add(y, x)) h.push_back(y);
  std::sort(h.begin(), h.end());
  return h;
}

namespace {

Subgroup sumset(const Group& group, const Subgroup& a, const Subgroup& b) {
  std::vector<char> in(group.order(), 0);
  for (std::size_t x : a)
    for (std::size_t y : b) in[group.add(x, y)] = 1;
  Subgroup out;
  for (std::size_t z = 0; z < in.size(); ++z)
    if (in[z]) out.push_back(z);
  return out;
}

bool prime_power(std::size_t n) {
  if (n < 2) return false;
  std::size_t p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool by_size(const Subgroup& a, const Subgroup& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

Bitstring indicator(const Group& group, const Subgroup& h) {
  Bitstring x(group.order(), false);
  for (std::size_t e : h) x[e] = true;
  return x;
}

}  // namespace

Subgroup join_subgroups(const Group& group, const Subgroup& h, const Subgroup& k) {
  Subgroup s = h;
  for (std::size_t x : k)
    if (!std::binary_search(s.begin(), s.end(), x)) s = sumset(group, s, cyclic_subgroup(group, x));
  return s;
}

std::vector<Subgroup> join_irreducible_subgroups(const Group& group) {
  std::set<Subgroup> seen;
  for (std::size_t x = 1; x < group.order(); ++x) {
    Subgroup c = cyclic_subgroup(group, x);
    if (prime_power(c.size())) seen.insert(std::move(c));
  }
  std::vector<Subgroup> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), by_size);
  return out;
}

std::string subgroup_name(const Group& group, const Subgroup& h) {
  if (h.size() == 1) return "0";
  Subgroup span{0};
  std::string s = "<";
  bool first = true;
  for (std::size_t x : h) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    span = join_subgroups(group, span, cyclic_subgroup(group, x));
    if (!first) s += ',';
    first = false;
    s += group.element_name(x);
  }
  return s + ">";
}

SubgroupLattice subgroup_lattice(const Group& group, std::size_t cap) {
  const auto ji = join_irreducible_subgroups(group);
  std::set<Subgroup> all{Subgroup{0}};
  std::vector<Subgroup> queue{Subgroup{0}};
  while (!queue.empty()) {
    Subgroup s = std::move(queue.back());
    queue.pop_back();
    for (const auto& j : ji) {
      if (std::includes(s.begin(), s.end(), j.begin(), j.end())) continue;
      Subgroup t = join_subgroups(group, s, j);
      if (all.insert(t).second) {
        if (all.size() > cap)
          throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " subgroups");
        queue.push_back(std::move(t));
      }
    }
  }
  SubgroupLattice out;
  out.subgroups.assign(all.begin(), all.end());
  std::sort(out.subgroups.begin(), out.subgroups.end(), by_size);
  std::vector<Bitstring> family;
  std::vector<std::string> names;
  for (const auto& h : out.subgroups) {
    family.push_back(indicator(group, h));
    names.push_back(subgroup_name(group, h));
  }
  out.lattice = inclusion_lattice(family, std::move(names));
  return out;
}

EnumerationInput enumeration_input(const Group& group) {
  EnumerationInput in;
  in.points = join_irreducible_subgroups(group);
  const std::size_t n = in.points.size();
  std::vector<OrderPair> order;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(subgroup_name(group, in.points[i]));
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && std::includes(in.points[j].begin(), in.points[j].end(), in.points[i].begin(),
                                  in.points[i].end()))
        order.emplace_back(i, j);
  }
  in.poset = Poset::from_relation(n, order, std::move(names));

  std::map<Subgroup, std::size_t> handle;
  auto join = [&](std::size_t p, std::size_t q) {
    auto s = join_subgroups(group, in.points[p], in.points[q]);
    return handle.emplace(std::move(s), handle.size()).first->second;
  };
  in.lines = lines_from_joins(n, join).lines;
  return in;
}

SetSystem parse_set_system(const std::string& text) {
  SetSystem sys;
  std::istringstream input(text);
  std::string raw;
  std::size_t line_no = 0;
  auto binary = [](const std::string& t) { return t == "0" || t == "1"; };
  while (std::getline(input, raw)) {
    ++line_no;
    std::istringstream tokens(raw);
    std::vector<std::string> tok;
    for (std::string t; tokens >> t;) tok.push_back(t);
    if (tok.empty() || tok.front().front() == '#') continue;

    std::string label;
    std::size_t start = 0;
    if (!binary(tok[0])) {
      const bool header = std::none_of(tok.begin(), tok.end(), binary);
      if (header) {
        if (!sys.universe.empty() || !sys.sets.empty())
          throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unexpected header");
        sys.universe = tok;
        continue;
      }
      label = tok[0];
      start = 1;
      if (start < tok.size() && tok[start] == "=") ++start;
      if (!label.empty() && label.back() == '=') label.pop_back();
    }
    Bitstring row;
    for (std::size_t i = start; i < tok.size(); ++i) {
      if (!binary(tok[i]))
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": expected 0 or 1, got '" + tok[i] + "'");
      row.push_back(tok[i] == "1");
    }
    if (!sys.sets.empty() && row.size() != sys.sets.front().size())
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": row length differs");
    if (label.empty()) label = "X" + std::to_string(sys.sets.size() + 1);
    sys.set_names.push_back(label);
    sys.sets.push_back(std::move(row));
  }
  if (sys.sets.empty()) throw Error(ErrorCode::ParseError, "no sets given");
  const std::size_t width = sys.sets.front().size();
  if (sys.universe.empty())
    for (std::size_t v = 0; v < width; ++v) sys.universe.push_back(std::to_string(v));
  if (sys.universe.size() != width)
    throw Error(ErrorCode::ParseError, "header names " + std::to_string(sys.universe.size()) +
                                           " elements but rows have " + std::to_string(width));
  return sys;
}

namespace {

Bitstring meet_of_all(const SetSystem& system) {
  Bitstring bottom(system.universe.size(), true);
  for (const auto& x : system.sets)
    for (std::size_t v = 0; v < bottom.size(); ++v) bottom[v] = bottom[v] && x[v];
  return bottom;
}

std::size_t weight(const Bitstring& x) { return static_cast<std::size_t>(std::count(x.begin(), x.end(), true)); }

}  // namespace

DistributiveJi distributive_ji(const SetSystem& system) {
  if (system.sets.empty()) throw Error(ErrorCode::InvalidInput, "no sets given");
  const std::size_t w = system.universe.size();
  const Bitstring bottom = meet_of_all(system);
  DistributiveJi out;
  std::set<Bitstring> seen;
  for (std::size_t v = 0; v < w; ++v) {
    Bitstring a(w, true);
    bool covered = false;
    for (const auto& x : system.sets) {
      if (!x[v]) continue;
      covered = true;
      for (std::size_t u = 0; u < w; ++u) a[u] = a[u] && x[u];
    }
    if (!covered) {
      out.uncovered.push_back(v);
      continue;
    }
    if (a != bottom) seen.insert(std::move(a));
  }
  out.sets.assign(seen.begin(), seen.end());
  std::sort(out.sets.begin(), out.sets.end(), [](const Bitstring& a, const Bitstring& b) {
    return weight(a) != weight(b) ? weight(a) < weight(b) : a < b;
  });
  return out;
}

DistributiveLattice distributive_lattice(const SetSystem& system) {
  const auto ji = distributive_ji(system);
  const std::size_t n = ji.sets.size();
  const std::size_t w = system.universe.size();
  auto below = [&](const Bitstring& a, const Bitstring& b) {
    for (std::size_t v = 0; v < w; ++v)
      if (a[v] && !b[v]) return false;
    return true;
  };
  std::vector<OrderPair> order;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && below(ji.sets[i], ji.sets[j])) order.emplace_back(i, j);
  const Poset poset = Poset::from_relation(n, order);

  DistributiveLattice out;
  out.rows = enumerate(poset, {});
  const Bitstring bottom = meet_of_all(system);
  for (const auto& ideal : expand_all(out.rows)) {
    Bitstring y = bottom;
    for (std::size_t i = 0; i < n; ++i)
      if (ideal[i])
        for (std::size_t v = 0; v < w; ++v) y[v] = y[v] || ji.sets[i][v];
    out.members.push_back(std::move(y));
  }
  std::sort(out.members.begin(), out.members.end(), [](const Bitstring& a, const Bitstring& b) {
    return weight(a) != weight(b) ? weight(a) < weight(b) : a < b;
  });
  std::vector<std::string> names;
  for (const auto& y : out.members) {
    std::string s = "{";
    for (std::size_t v = 0; v < w; ++v)
      if (y[v]) s += (s.size() > 1 ? "," : "") + system.universe[v];
    names.push_back(s + "}");
  }
  out.lattice = inclusion_lattice(out.members, std::move(names));
  return out;
}

}  // namespace modlat
