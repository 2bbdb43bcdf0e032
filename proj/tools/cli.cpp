#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "io.hpp"
#include "modlat/algebra.hpp"
#include "modlat/analysis.hpp"
#include "modlat/catalog.hpp"
#include "modlat/error.hpp"

namespace modlat::cli {

namespace {

struct Options {
  std::string lattice, poset, lines, sets, group, out, bol, pls, implications;
  std::string a, b, poset_out, lines_out;
  bool count = false, expand = false, dot = false, all_bols = false, json = false;
  bool trace = false, analyze = false, sigma = false, check = false;
  std::size_t cap = 1000;
  std::size_t jobs = 1;
};

std::vector<unsigned> parse_group(const std::string& spec) {
  std::vector<unsigned> factors;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      factors.push_back(static_cast<unsigned>(v));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad group factor '" + part + "' in --group");
    }
  }
  return factors;
}

class Command {
 public:
  Command(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  Lattice lattice() const {
    if (!o_.lattice.empty() && !o_.group.empty())
      throw Error(ErrorCode::InvalidInput, "give either --lattice or --group");
    if (!o_.group.empty()) return subgroup_lattice(Group(parse_group(o_.group)), o_.cap * 4).lattice;
    if (o_.lattice.empty()) throw Error(ErrorCode::InvalidInput, "--lattice or --group is required");
    return io::lattice_from_json(io::read_json(o_.lattice));
  }

  Elem element(const Lattice& l, const std::string& key) const {
    if (auto e = l.find(key)) return *e;
    try {
      std::size_t used = 0;
      const auto k = std::stoul(key, &used);
      if (used == key.size() && k < l.size()) return k;
    } catch (const std::logic_error&) {
    }
    throw Error(ErrorCode::InvalidInput, "no element named '" + key + "'");
  }

  BaseOfLines base(const Lattice& l) const {
    if (o_.bol.empty()) return canonical_bol(l);
    return io::bol_from_json(io::read_json(o_.bol), l);
  }

  // Writes to --out when given, stdout otherwise.
  void emit(const std::string& text) const {
    if (o_.out.empty()) out_ << text;
    else io::write_text(o_.out, text);
  }

  void emit_lattice(const Lattice& l) const {
    if (o_.dot) emit(io::to_dot(l));
    else emit(io::to_json(l).dump(2) + "\n");
  }

  void write_enumeration_input(const Poset& poset, const io::Lines& lines) const {
    if (!o_.poset_out.empty()) io::write_text(o_.poset_out, io::to_json(poset).dump(2) + "\n");
    if (!o_.lines_out.empty()) io::write_text(o_.lines_out, io::lines_to_json(lines, poset).dump(2) + "\n");
  }

  void print_rows(const RowSet& rows) const {
    if (o_.count) {
      out_ << total_count(rows) << "\n";
      return;
    }
    if (o_.json) {
      emit(io::to_json(rows).dump(2) + "\n");
      return;
    }
    std::ostringstream text;
    if (o_.expand) {
      for (const auto& x : expand_all(rows)) text << io::bitstring_text(x) << "\n";
    } else {
      for (const auto& r : rows.rows)
        text << r.label << ": " << io::row_line(r) << "  [" << row_count(r) << "]\n";
      text << "total " << total_count(rows) << "\n";
    }
    emit(text.str());
  }

  int enumerate_cmd() const {
    const Poset poset = io::poset_from_json(io::read_json(o_.poset));
    const io::Lines lines = o_.lines.empty() ? io::Lines{} : io::lines_from_json(io::read_json(o_.lines), poset);
    EnumerateOptions opt;
    opt.jobs = o_.jobs;
    std::size_t step = 0;
    if (o_.trace) {
      opt.jobs = 1;
      opt.trace = [&](const std::vector<Row>& stack, const std::vector<Row>& finals) {
        err_ << "step " << ++step << "\n";
        for (const auto& r : stack) err_ << "  " << r.label << ": " << io::row_line(r) << "\n";
        if (!finals.empty()) err_ << "  (" << finals.size() << " final)\n";
      };
    }
    const RowSet rows = enumerate(poset, lines, opt);
    if (o_.check) validate_rowset(rows);
    print_rows(rows);
    return 0;
  }

  int rebuild_cmd() const {
    if (!o_.implications.empty()) {
      const auto sigma = io::implications_from_json(io::read_json(o_.implications));
      out_ << "implications " << sigma.size() << "\n";
      out_ << "s(Sigma) = " << sigma_size(sigma) << "\n";
      return 0;
    }
    if (!o_.lattice.empty() || !o_.group.empty()) {
      const RoundtripReport r = roundtrip_check(lattice());
      out_ << "original " << r.original_size << ", rebuilt " << r.rebuilt_size << ", isomorphic "
           << (r.isomorphic ? "yes" : "no") << ", ideal map bijective " << (r.ideal_map_bijective ? "yes" : "no")
           << "\n";
      out_ << (r.ok() ? "roundtrip ok" : "roundtrip FAILED") << "\n";
      return r.ok() ? 0 : 1;
    }
    if (o_.poset.empty()) throw Error(ErrorCode::InvalidInput, "rebuild needs --poset, --lattice or --implications");
    const Poset poset = io::poset_from_json(io::read_json(o_.poset));
    const io::Lines lines = o_.lines.empty() ? io::Lines{} : io::lines_from_json(io::read_json(o_.lines), poset);
    if (o_.sigma) {
      const ImplicationSet sigma = sigma_nat(poset, lines);
      emit(io::to_json(sigma, poset.names()).dump(2) + "\n");
      if (!o_.out.empty()) out_ << "s(Sigma) = " << sigma_size(sigma) << "\n";
      return 0;
    }
    EnumerateOptions opt;
    opt.jobs = o_.jobs;
    const RowSet rows = enumerate(poset, lines, opt);
    const auto closure = closed_ideals_lattice(expand_all(rows), poset.names());
    emit_lattice(closure.lattice);
    return 0;
  }

  int analyze_cmd() const {
    const Lattice l = lattice();
    ParamsReport report = params(l);
    const BaseOfLines bol = base(l);
    for (auto& v : check_thm92(l, o_.cap)) report.verdicts.push_back(std::move(v));
    for (auto& v : check_thm94(l, bol, cycle_profile(l, o_.cap))) report.verdicts.push_back(std::move(v));
    if (o_.json) {
      emit(io::to_json(report).dump(2) + "\n");
      return 0;
    }
    std::ostringstream text;
    text << "lattice with " << l.size() << " elements\n" << io::params_table(report);
    for (const auto& v : report.verdicts)
      text << "  [" << (!v.applicable ? "n/a " : v.pass ? "ok  " : "FAIL") << "] " << v.name << ": " << v.detail
           << "\n";
    out_ << text.str();
    if (!o_.out.empty()) io::write_text(o_.out, io::to_json(report).dump(2) + "\n");
    return 0;
  }

  int verify_cmd() const {
    std::vector<catalog::Named> lattices;
    if (!o_.lattice.empty() || !o_.group.empty()) {
      lattices.push_back({o_.lattice.empty() ? "Z(" + o_.group + ")" : o_.lattice, lattice()});
    } else {
      lattices = catalog::corpus();
      for (auto& extra : catalog::cycle_corpus()) lattices.push_back(std::move(extra));
    }
    SuiteOptions opt;
    opt.bol_cap = o_.cap;
    bool ok = true;
    for (const auto& [name, l] : lattices) {
      const SuiteReport r = run_suite(l, opt);
      const bool pass = all_pass(r.verdicts);
      ok = ok && pass;
      std::size_t applicable = 0;
      for (const auto& v : r.verdicts) applicable += v.applicable;
      out_ << (pass ? "PASS " : "FAIL ") << name << "  |L|=" << l.size() << " checks=" << applicable << " r*={";
      for (std::size_t k = 0; k < r.rstar_observed.size(); ++k) out_ << (k ? "," : "") << r.rstar_observed[k];
      out_ << "}" << (r.bols_truncated ? " (sampled)" : "") << "\n";
      for (const auto& v : r.verdicts)
        if (!v.pass) out_ << "    FAIL " << v.name << ": " << v.detail << "\n";
    }
    out_ << (ok ? "all checks passed" : "some checks FAILED") << "\n";
    return ok ? 0 : 1;
  }

  void print_bol(const Lattice& l, const BaseOfLines& bol, std::ostream& os) const {
    for (std::size_t k = 0; k < bol.line_count(); ++k) {
      os << "l" << k + 1 << " = {";
      const auto& line = bol.pls.lines()[k];
      for (std::size_t t = 0; t < line.size(); ++t) os << (t ? "," : "") << l.name(line[t]);
      os << "}  top " << l.name(bol.tops[k]) << "  bottom " << l.name(bol.bottoms[k]) << "\n";
    }
  }

  int bol_cmd() const {
    const Lattice l = lattice();
    if (o_.all_bols) {
      const BolFamily family = all_bols(l, o_.cap);
      out_ << family.bols.size() << (family.truncated ? "+" : "") << " bases of lines\n";
      for (std::size_t k = 0; k < family.bols.size(); ++k) {
        out_ << "base " << k + 1 << ": r* = " << rstar(family.bols[k].pls) << "\n";
        print_bol(l, family.bols[k], out_);
      }
      return 0;
    }
    const BaseOfLines bol = base(l);
    if (!o_.poset_out.empty() || !o_.lines_out.empty()) {
      const PointData data = point_data(l, bol);
      write_enumeration_input(data.poset, data.lines);
    }
    if (o_.json || !o_.out.empty()) {
      emit(io::to_json(bol, l).dump(2) + "\n");
      return 0;
    }
    out_ << bol.pls.points().size() << " points, " << bol.line_count() << " lines\n";
    print_bol(l, bol, out_);
    return 0;
  }

  void print_pls(const Pls& pls, const Lattice* l) const {
    auto name = [&](PointId p) { return l && p < l->size() ? l->name(p) : std::to_string(p); };
    out_ << "points {";
    for (std::size_t k = 0; k < pls.points().size(); ++k) out_ << (k ? "," : "") << name(pls.points()[k]);
    out_ << "}\n";
    for (const auto& line : pls.lines()) {
      out_ << "  line {";
      for (std::size_t k = 0; k < line.size(); ++k) out_ << (k ? "," : "") << name(line[k]);
      out_ << "}\n";
    }
    const auto comps = components(pls);
    out_ << "components " << comps.size() << "\n";
    if (const auto c = find_cycle(pls)) {
      out_ << "cycle through junctions";
      for (PointId p : c->junctions) out_ << " " << name(p);
      out_ << "\n";
    } else {
      out_ << "acyclic\n";
    }
  }

  int localize_cmd() const {
    const Lattice l = lattice();
    if (o_.a.empty()) throw Error(ErrorCode::InvalidInput, "localize needs --a");
    const Elem a = element(l, o_.a);
    const Elem b = o_.b.empty() ? l.top() : element(l, o_.b);
    const Pls pls = localize(l, base(l), a, b);
    if (o_.json || !o_.out.empty()) {
      emit(io::to_json(pls).dump(2) + "\n");
      return 0;
    }
    print_pls(pls, &l);
    out_ << "r* " << rstar(pls) << "\n";
    return 0;
  }

  int subgroup_cmd() const {
    if (o_.group.empty()) throw Error(ErrorCode::InvalidInput, "subgroup-lattice needs --group");
    const Group g(parse_group(o_.group));
    const SubgroupLattice sl = subgroup_lattice(g, o_.cap * 4);
    if (!o_.poset_out.empty() || !o_.lines_out.empty()) {
      const EnumerationInput in = enumeration_input(g);
      write_enumeration_input(in.poset, in.lines);
    }
    if (o_.count) {
      const EnumerationInput in = enumeration_input(g);
      EnumerateOptions opt;
      opt.jobs = o_.jobs;
      out_ << total_count(enumerate(in.poset, in.lines, opt)) << "\n";
      return 0;
    }
    if (o_.analyze) {
      const ParamsReport r = params(sl.lattice);
      out_ << "group Z(" << o_.group << ") of order " << g.order() << ", " << sl.subgroups.size()
           << " subgroups\n"
           << io::params_table(r);
      if (!o_.out.empty()) io::write_text(o_.out, io::to_json(r).dump(2) + "\n");
      return 0;
    }
    emit_lattice(sl.lattice);
    return 0;
  }

  int distributive_cmd() const {
    if (o_.sets.empty()) throw Error(ErrorCode::InvalidInput, "distributive needs --sets");
    const SetSystem sys = parse_set_system(io::read_text(o_.sets));
    const DistributiveLattice d = distributive_lattice(sys);
    if (o_.dot || !o_.out.empty()) {
      emit_lattice(d.lattice);
      return 0;
    }
    if (o_.count || o_.expand) {
      print_rows(d.rows);
      return 0;
    }
    const DistributiveJi ji = distributive_ji(sys);
    out_ << "join-irreducibles " << ji.sets.size() << "\n";
    for (std::size_t k = 0; k < ji.sets.size(); ++k) {
      out_ << "  q" << k + 1 << " = {";
      bool first = true;
      for (std::size_t v = 0; v < ji.sets[k].size(); ++v)
        if (ji.sets[k][v]) {
          out_ << (first ? "" : ",") << sys.universe[v];
          first = false;
        }
      out_ << "}\n";
    }
    for (const auto& r : d.rows.rows) out_ << r.label << ": " << io::row_line(r) << "  [" << row_count(r) << "]\n";
    out_ << "elements " << d.lattice.size() << "\n";
    return 0;
  }

  int rstar_cmd() const {
    if (!o_.pls.empty()) {
      const Pls pls = io::pls_from_json(io::read_json(o_.pls));
      print_pls(pls, nullptr);
      out_ << "r* " << rstar(pls) << "\n";
      for (const auto& s : acyclifier(pls)) out_ << "  split line " << s.line << " at " << s.point << "\n";
      return 0;
    }
    const Lattice l = lattice();
    if (!o_.all_bols) {
      out_ << "r* " << rstar(base(l).pls) << "\n";
      return 0;
    }
    const BolFamily family = all_bols(l, o_.cap);
    std::map<std::size_t, std::size_t> seen;
    for (const auto& b : family.bols) ++seen[rstar(b.pls)];
    out_ << family.bols.size() << (family.truncated ? "+" : "") << " bases of lines\n";
    for (const auto& [r, n] : seen) out_ << "  r* " << r << ": " << n << " bases\n";
    return 0;
  }

  int witness_cmd() const {
    const Lattice l = lattice();
    const BaseOfLines bol = base(l);
    const auto configs = triangle_configurations(bol);
    out_ << configs.size() << " triangle configurations\n";
    bool ok = true;
    for (const auto& c : configs) {
      out_ << "  s=" << l.name(c.s) << " p1=" << l.name(c.p1) << " p2=" << l.name(c.p2) << " q=" << l.name(c.q)
           << " r=" << l.name(c.r) << " p3=" << l.name(c.p3);
      try {
        const Quotient w = cyclic_localization_witness(l, bol, c);
        out_ << "  -> (" << l.name(w.lower) << ", " << l.name(w.upper) << ") cyclic\n";
      } catch (const Error& e) {
        ok = false;
        out_ << "  -> " << e.what() << "\n";
      }
    }
    return ok ? 0 : 1;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bases of lines, wildcard enumeration and structure checks for finite modular lattices", "modlat"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Command&)> action;

  auto lattice_flags = [&](CLI::App* sub) {
    sub->add_option("--lattice", o.lattice, "Lattice JSON file");
    sub->add_option("--group", o.group, "Invariant factors of an abelian group, e.g. 4,4");
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the result to this file");
    sub->add_option("--cap", o.cap, "Cap on bases of lines and similar searches");
  };

  auto* en = app.add_subcommand("enumerate", "Compressed Lambda-closed order ideals of a poset with lines");
  en->add_option("--poset", o.poset, "Poset JSON file")->required();
  en->add_option("--lines", o.lines, "Lines JSON file");
  en->add_flag("--count", o.count, "Print the total only");
  en->add_flag("--expand", o.expand, "Print every bitstring");
  en->add_flag("--json", o.json, "RowSet JSON");
  en->add_flag("--trace", o.trace, "Print the working stack after every step to stderr");
  en->add_flag("--check", o.check, "Verify that the rows are pairwise disjoint");
  en->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  common(en);
  en->callback([&] { action = &Command::enumerate_cmd; });

  auto* rb = app.add_subcommand("rebuild", "Lattice from poset and lines, or a round-trip check");
  rb->add_option("--poset", o.poset, "Poset JSON file");
  rb->add_option("--lines", o.lines, "Lines JSON file");
  lattice_flags(rb);
  rb->add_option("--implications", o.implications, "Implications JSON file to measure");
  rb->add_flag("--sigma", o.sigma, "Emit the natural implicational base instead");
  rb->add_flag("--dot", o.dot, "Graphviz output");
  rb->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  common(rb);
  rb->callback([&] { action = &Command::rebuild_cmd; });

  auto* an = app.add_subcommand("analyze", "Parameters and theorem verdicts for one lattice");
  lattice_flags(an);
  an->add_option("--bol", o.bol, "Base of lines JSON (default: canonical)");
  an->add_flag("--json", o.json, "ParamsReport JSON only");
  common(an);
  an->callback([&] { action = &Command::analyze_cmd; });

  auto* ve = app.add_subcommand("verify", "Full check suite over the built-in corpus or one lattice");
  lattice_flags(ve);
  common(ve);
  ve->callback([&] { action = &Command::verify_cmd; });

  auto* bo = app.add_subcommand("bol", "Base of lines of a lattice");
  lattice_flags(bo);
  bo->add_option("--bol", o.bol, "Base of lines JSON to re-check and print");
  bo->add_flag("--all-bols", o.all_bols, "List every base of lines up to --cap");
  bo->add_flag("--json", o.json, "BOL JSON");
  bo->add_option("--poset-out", o.poset_out, "Write the poset of join-irreducibles");
  bo->add_option("--lines-out", o.lines_out, "Write the lines over that poset");
  common(bo);
  bo->callback([&] { action = &Command::bol_cmd; });

  auto* lo = app.add_subcommand("localize", "Localization of a base of lines to a covering a < b");
  lattice_flags(lo);
  lo->add_option("--bol", o.bol, "Base of lines JSON (default: canonical)");
  lo->add_option("--a", o.a, "Lower element (name or index)")->required();
  lo->add_option("--b", o.b, "Upper element (default: top)");
  lo->add_flag("--json", o.json, "PLS JSON");
  common(lo);
  lo->callback([&] { action = &Command::localize_cmd; });

  auto* sg = app.add_subcommand("subgroup-lattice", "Subgroup lattice of a finite abelian group");
  sg->add_option("--group", o.group, "Invariant factors, e.g. 2,2,2")->required();
  sg->add_flag("--analyze", o.analyze, "Print the parameter report");
  sg->add_flag("--count", o.count, "Count subgroups through the enumeration pipeline");
  sg->add_flag("--dot", o.dot, "Graphviz output");
  sg->add_option("--poset-out", o.poset_out, "Write the poset of cyclic prime-power subgroups");
  sg->add_option("--lines-out", o.lines_out, "Write the lines found from subgroup joins");
  sg->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  common(sg);
  sg->callback([&] { action = &Command::subgroup_cmd; });

  auto* di = app.add_subcommand("distributive", "Lattice generated by a family of sets");
  di->add_option("--sets", o.sets, "0/1 table, one set per row")->required();
  di->add_flag("--count", o.count, "Print the number of elements only");
  di->add_flag("--expand", o.expand, "Print every order ideal of the join-irreducibles");
  di->add_flag("--dot", o.dot, "Graphviz output of the lattice");
  common(di);
  di->callback([&] { action = &Command::distributive_cmd; });

  auto* rs = app.add_subcommand("rstar", "Splitting number of a partial linear space or of a lattice's bases");
  rs->add_option("--pls", o.pls, "PLS JSON file");
  lattice_flags(rs);
  rs->add_option("--bol", o.bol, "Base of lines JSON");
  rs->add_flag("--all-bols", o.all_bols, "Tabulate r* over all bases up to --cap");
  common(rs);
  rs->callback([&] { action = &Command::rstar_cmd; });

  auto* wt = app.add_subcommand("witness-triangle", "Triangle configurations and their cyclic localizations");
  lattice_flags(wt);
  wt->add_option("--bol", o.bol, "Base of lines JSON (default: canonical)");
  common(wt);
  wt->callback([&] { action = &Command::witness_cmd; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    return action(Command(o, out, err));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace modlat::cli
