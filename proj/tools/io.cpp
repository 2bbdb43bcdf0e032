#include "io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "modlat/error.hpp"

namespace modlat::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

// Index of a JSON entry that is either a number or a name from `names`.
std::size_t resolve(const Json& entry, const std::vector<std::string>& names, const char* what) {
  if (entry.is_number_unsigned()) {
    const auto k = entry.get<std::size_t>();
    if (k >= names.size()) bad(std::string(what) + " index " + std::to_string(k) + " out of range");
    return k;
  }
  if (entry.is_string()) {
    const auto s = entry.get<std::string>();
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == s) return k;
    bad(std::string("unknown ") + what + " '" + s + "'");
  }
  bad(std::string(what) + " must be an index or a name");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) bad(std::string("\"") + key + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& x : a) {
    if (x.is_string()) out.push_back(x.get<std::string>());
    else if (x.is_number()) out.push_back(x.dump());
    else bad(std::string("\"") + key + "\" entries must be strings");
  }
  return out;
}

std::vector<std::size_t> id_list(const Json& a) {
  if (!a.is_array()) bad("expected an array of point ids");
  std::vector<std::size_t> out;
  for (const auto& x : a) {
    if (!x.is_number_unsigned()) bad("point ids must be nonnegative integers");
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

Json names_of(const std::vector<std::size_t>& xs, const std::vector<std::string>& names) {
  Json a = Json::array();
  for (auto x : xs) {
    if (names.empty()) a.push_back(x);
    else a.push_back(names[x]);
  }
  return a;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string count_text(const Count& c) { return c.str(); }

}  // namespace

Json read_json(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(path.string() + ": " + e.what());
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path.string());
  out << text;
}

Json to_json(const Lattice& lattice) {
  Json j;
  j["names"] = lattice.names();
  Json covers = Json::array();
  for (const auto& q : lattice.covers()) covers.push_back({q.lower, q.upper});
  j["covers"] = std::move(covers);
  return j;
}

Lattice lattice_from_json(const Json& j) {
  std::vector<std::string> names;
  if (j.contains("names")) names = string_list(j, "names");
  else if (j.contains("size")) names.resize(field(j, "size").get<std::size_t>());
  else bad("lattice needs \"names\" or \"size\"");
  if (names.empty()) bad("a lattice needs at least one element");
  if (names.front().empty())
    for (std::size_t k = 0; k < names.size(); ++k) names[k] = std::to_string(k);
  std::vector<Quotient> covers;
  for (const auto& c : field(j, "covers")) {
    if (!c.is_array() || c.size() != 2) bad("each cover must be a [lower, upper] pair");
    covers.push_back({resolve(c[0], names, "element"), resolve(c[1], names, "element")});
  }
  return Lattice::build(std::move(names), covers);
}

std::string to_dot(const Lattice& lattice, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << quoted(graph_name) << " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Elem x = 0; x < lattice.size(); ++x) out << "  n" << x << " [label=" << quoted(lattice.name(x)) << "];\n";
  for (const auto& q : lattice.covers()) out << "  n" << q.lower << " -> n" << q.upper << ";\n";
  out << "}\n";
  return out.str();
}

Json to_json(const Poset& poset) {
  Json j;
  j["points"] = poset.names();
  Json order = Json::array();
  for (const auto& [lo, hi] : poset.covers()) order.push_back({poset.name(lo), poset.name(hi)});
  j["order"] = std::move(order);
  return j;
}

Poset poset_from_json(const Json& j) {
  std::vector<std::string> names;
  const Json& pts = field(j, "points");
  if (pts.is_number_unsigned()) {
    for (std::size_t k = 0; k < pts.get<std::size_t>(); ++k) names.push_back(std::to_string(k));
  } else {
    names = string_list(j, "points");
  }
  std::vector<OrderPair> order;
  if (j.contains("order")) {
    for (const auto& c : j.at("order")) {
      if (!c.is_array() || c.size() != 2) bad("each order pair must be [lower, upper]");
      order.emplace_back(resolve(c[0], names, "point"), resolve(c[1], names, "point"));
    }
  }
  const std::size_t n = names.size();
  return Poset::from_relation(n, order, std::move(names));
}

Json lines_to_json(const Lines& lines, const Poset& poset) {
  Json a = Json::array();
  for (const auto& l : lines) a.push_back(names_of(l, poset.names()));
  return Json{{"lines", std::move(a)}};
}

Lines lines_from_json(const Json& j, const Poset& poset) {
  const Json& a = j.is_array() ? j : field(j, "lines");
  if (!a.is_array()) bad("\"lines\" must be an array");
  Lines out;
  for (const auto& l : a) {
    if (!l.is_array()) bad("each line must be an array");
    std::vector<std::size_t> line;
    for (const auto& p : l) line.push_back(resolve(p, poset.names(), "point"));
    out.push_back(std::move(line));
  }
  return out;
}

Json to_json(const Pls& pls) {
  Json j;
  j["points"] = pls.points();
  j["lines"] = pls.lines();
  return j;
}

Pls pls_from_json(const Json& j) {
  std::vector<std::vector<PointId>> lines;
  for (const auto& l : field(j, "lines")) lines.push_back(id_list(l));
  return Pls::validate(id_list(field(j, "points")), std::move(lines));
}

Json to_json(const BaseOfLines& bol, const Lattice& lattice) {
  Json j = to_json(bol.pls);
  j["tops"] = bol.tops;
  j["bottoms"] = bol.bottoms;
  Json names = Json::array();
  for (PointId p : bol.pls.points()) names.push_back(lattice.name(p));
  j["names"] = std::move(names);
  return j;
}

BaseOfLines bol_from_json(const Json& j, const Lattice& lattice) {
  BaseOfLines bol;
  bol.pls = pls_from_json(j);
  bol.tops = id_list(field(j, "tops"));
  if (bol.tops.size() != bol.pls.lines().size()) bad("\"tops\" needs one entry per line");
  const auto intervals = line_intervals(lattice);
  std::map<Elem, const LineInterval*> by_top;
  for (const auto& iv : intervals) by_top[iv.top] = &iv;
  if (bol.tops.size() != intervals.size())
    throw Error(ErrorCode::InvalidInput, "a base of lines needs one line per line-interval (" +
                                             std::to_string(intervals.size()) + ")");
  if (bol.pls.points().size() != join_irreducibles(lattice).size())
    throw Error(ErrorCode::InvalidInput, "the points must be all join-irreducibles");
  for (PointId p : bol.pls.points())
    if (p >= lattice.size() || !is_join_irreducible(lattice, p))
      throw Error(ErrorCode::InvalidInput, "point " + std::to_string(p) + " is not join-irreducible");
  for (std::size_t k = 0; k < bol.tops.size(); ++k) {
    auto it = by_top.find(bol.tops[k]);
    if (it == by_top.end())
      throw Error(ErrorCode::InvalidInput, "top " + std::to_string(bol.tops[k]) + " is not a line-top");
    const auto& line = bol.pls.lines()[k];
    if (line.size() != it->second->n())
      throw Error(ErrorCode::InvalidInput, "line " + std::to_string(k) + " has the wrong size");
    for (std::size_t a = 0; a < line.size(); ++a)
      for (std::size_t b = a + 1; b < line.size(); ++b)
        if (lattice.join(line[a], line[b]) != bol.tops[k])
          throw Error(ErrorCode::InvalidInput, "line " + std::to_string(k) + " does not join to its top");
    bol.bottoms.push_back(it->second->bottom);
    bol.intervals.push_back(*it->second);
    by_top.erase(it);
  }
  return bol;
}

Json to_json(const ImplicationSet& sigma, const std::vector<std::string>& names) {
  Json a = Json::array();
  for (const auto& imp : sigma)
    a.push_back(Json{{"if", names_of(imp.premise, names)}, {"then", names_of(imp.conclusion, names)}});
  return a;
}

ImplicationSet implications_from_json(const Json& j, const std::vector<std::string>& names) {
  if (!j.is_array()) bad("implications must be an array");
  ImplicationSet out;
  auto side = [&](const Json& a) {
    std::vector<std::size_t> xs;
    for (const auto& x : a) {
      if (names.empty()) {
        if (!x.is_number_unsigned()) bad("implication entries must be integers");
        xs.push_back(x.get<std::size_t>());
      } else {
        xs.push_back(resolve(x, names, "point"));
      }
    }
    return xs;
  };
  for (const auto& imp : j) out.push_back({side(field(imp, "if")), side(field(imp, "then"))});
  return out;
}

Json to_json(const Row& row) {
  Json j;
  if (!row.label.empty()) j["label"] = row.label;
  j["cells"] = row_cells_text(row);
  Json groups = Json::array();
  for (const auto& g : row.groups()) {
    Json d{{"kind", std::string(to_string(g.kind))}, {"members", g.members}};
    if (g.kind == GroupKind::Imp) d["implied"] = g.implied;
    groups.push_back(std::move(d));
  }
  j["groups"] = std::move(groups);
  j["count"] = count_text(row_count(row));
  return j;
}

Json to_json(const RowSet& rows) {
  Json a = Json::array();
  for (const auto& r : rows.rows) a.push_back(to_json(r));
  return Json{{"width", rows.width}, {"rows", std::move(a)}, {"total", count_text(total_count(rows))}};
}

std::string row_line(const Row& row) {
  std::string s = row_cells_text(row);
  if (row.pending.empty()) return s + "  final";
  s += "  pending:";
  for (auto l : row.pending) s += " l" + std::to_string(l + 1);
  return s;
}

std::string bitstring_text(const Bitstring& x) {
  std::string s;
  for (bool b : x) s += b ? '1' : '0';
  return s;
}

Json to_json(const Verdict& v) {
  return Json{{"name", v.name}, {"applicable", v.applicable}, {"pass", v.pass}, {"detail", v.detail}};
}

Json to_json(const ParamsReport& r) {
  Json j{{"j", r.j}, {"delta", r.delta}, {"s", r.s}, {"i", r.i}, {"o", r.o}, {"mu", r.mu},
         {"rstar_canonical", r.rstar_canonical}, {"acyclic", r.acyclic}};
  j["locally_acyclic"] = r.locally_acyclic ? Json(*r.locally_acyclic) : Json(nullptr);
  Json v = Json::array();
  for (const auto& x : r.verdicts) v.push_back(to_json(x));
  j["verdicts"] = std::move(v);
  return j;
}

std::string params_table(const ParamsReport& r) {
  std::ostringstream out;
  auto row = [&](const char* k, const std::string& v) { out << "  " << k << std::string(18 - std::string(k).size(), ' ') << v << "\n"; };
  row("j", std::to_string(r.j));
  row("delta", std::to_string(r.delta));
  row("s", std::to_string(r.s));
  row("i", std::to_string(r.i));
  row("o", std::to_string(r.o));
  row("mu", std::to_string(r.mu));
  row("r* (canonical)", std::to_string(r.rstar_canonical));
  row("acyclic", r.acyclic ? "yes" : "no (cyclic)");
  row("locally acyclic", r.locally_acyclic ? (*r.locally_acyclic ? "yes" : "no") : "unknown");
  return out.str();
}

}  // namespace modlat::io
