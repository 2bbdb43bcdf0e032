#include "modlat/pls.hpp"

#include <algorithm>
#include <numeric>

#include "modlat/error.hpp"

namespace modlat {

namespace {

std::size_t point_index(const std::vector<PointId>& points, PointId p) {
  return static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), p) - points.begin());
}

struct Dsu {
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

Pls Pls::validate(std::vector<PointId> points, std::vector<std::vector<PointId>> lines) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (auto& line : lines) {
    std::sort(line.begin(), line.end());
    line.erase(std::unique(line.begin(), line.end()), line.end());
    if (line.size() < 2) throw Error(ErrorCode::LineTooSmall, "lines need at least two points");
    for (PointId p : line)
      if (!std::binary_search(points.begin(), points.end(), p))
        throw Error(ErrorCode::UnknownPoint, "line uses unknown point " + std::to_string(p));
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      std::vector<PointId> common;
      std::set_intersection(lines[i].begin(), lines[i].end(), lines[j].begin(), lines[j].end(),
                            std::back_inserter(common));
      if (common.size() >= 2)
        throw Error(ErrorCode::TwoPointIntersection,
                    "lines " + std::to_string(i) + " and " + std::to_string(j) + " share points " +
                        std::to_string(common[0]) + " and " + std::to_string(common[1]));
    }
  }
  Pls pls;
  pls.points_ = std::move(points);
  pls.lines_ = std::move(lines);
  pls.next_fresh_ = pls.points_.empty() ? 0 : pls.points_.back() + 1;
  return pls;
}

std::size_t Pls::incidence_count() const noexcept {
  std::size_t e = 0;
  for (const auto& line : lines_) e += line.size();
  return e;
}

bool Pls::has_point(PointId p) const noexcept {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::vector<std::vector<PointId>> components(const Pls& pls) {
  const auto& pts = pls.points();
  Dsu dsu(pts.size());
  for (const auto& line : pls.lines())
    for (std::size_t k = 1; k < line.size(); ++k)
      dsu.unite(point_index(pts, line[0]), point_index(pts, line[k]));
  std::vector<std::vector<PointId>> out;
  std::vector<std::size_t> slot(pts.size(), SIZE_MAX);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::size_t r = dsu.find(i);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(pts[i]);
  }
  return out;
}

std::optional<PlsCycle> find_cycle(const Pls& pls) {
  const auto& pts = pls.points();
  const auto& lines = pls.lines();
  const std::size_t np = pts.size();
  const std::size_t nodes = np + lines.size();
  std::vector<std::vector<std::size_t>> adj(nodes);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    for (PointId p : lines[k]) {
      const std::size_t i = point_index(pts, p);
      adj[i].push_back(np + k);
      adj[np + k].push_back(i);
    }
  }

  std::vector<std::size_t> parent(nodes, SIZE_MAX);
  std::vector<std::uint8_t> state(nodes, 0);  // 0 new, 1 on stack, 2 done
  for (std::size_t root = 0; root < nodes; ++root) {
    if (state[root] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == adj[v].size()) {
        state[v] = 2;
        stack.pop_back();
        continue;
      }
      const std::size_t w = adj[v][next++];
      if (w == parent[v]) continue;
      if (state[w] == 0) {
        parent[w] = v;
        state[w] = 1;
        stack.emplace_back(w, 0);
        continue;
      }
      if (state[w] != 1) continue;
      // Back edge v -> w closes the cycle w ... v.
      std::vector<std::size_t> path;
      for (std::size_t u = v; u != w; u = parent[u]) path.push_back(u);
      path.push_back(w);
      std::reverse(path.begin(), path.end());
      if (path.front() < np) std::rotate(path.begin(), path.begin() + 1, path.end());
      PlsCycle cycle;
      for (std::size_t k = 0; k < path.size(); k += 2) {
        cycle.lines.push_back(path[k] - np);
        cycle.junctions.push_back(pts[path[k + 1]]);
      }
      return cycle;
    }
  }
  return std::nullopt;
}

bool is_acyclic(const Pls& pls) { return !find_cycle(pls).has_value(); }

Pls split_point(const Pls& pls, std::size_t line, PointId point) {
  if (line >= pls.lines().size())
    throw Error(ErrorCode::InvalidInput, "line index " + std::to_string(line) + " out of range");
  const auto& members = pls.lines()[line];
  if (!std::binary_search(members.begin(), members.end(), point))
    throw Error(ErrorCode::PointNotOnLine,
                "point " + std::to_string(point) + " is not on line " + std::to_string(line));
  Pls out = pls;
  const PointId fresh = out.next_fresh_++;
  auto& target = out.lines_[line];
  target.erase(std::find(target.begin(), target.end(), point));
  target.insert(std::upper_bound(target.begin(), target.end(), fresh), fresh);
  out.points_.push_back(fresh);
  return out;
}

std::size_t rstar(const Pls& pls) {
  const std::size_t e = pls.incidence_count();
  const std::size_t v = pls.points().size() + pls.lines().size();
  const std::size_t c = components(pls).size();
  return e + c - v;
}

std::vector<Splitting> acyclifier(const Pls& pls) {
  std::vector<Splitting> out;
  Pls current = pls;
  while (auto cycle = find_cycle(current)) {
    const Splitting s{cycle->lines.front(), cycle->junctions.front()};
    current = split_point(current, s.line, s.point);
    out.push_back(s);
  }
  return out;
}

Pls apply_splittings(const Pls& pls, std::span<const Splitting> splittings) {
  Pls current = pls;
  for (const auto& s : splittings) current = split_point(current, s.line, s.point);
  return current;
}

}  // namespace modlat
