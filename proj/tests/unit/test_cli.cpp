#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "io.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = MODLAT_FIXTURES;

struct Result {
  int rc;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "modlat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int rc = modlat::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {rc, out.str(), err.str()};
}

std::string fixture(const char* name) { return (kFixtures / name).string(); }

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "modlat_test_cli";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("enumerate the toy fixture") {
  const Result r = run({"enumerate", "--poset", fixture("toy.poset.json"), "--lines", fixture("toy.lines.json"),
                        "--count"});
  CHECK(r.rc == 0);
  CHECK(r.out == "13\n");
  const Result e = run({"enumerate", "--poset", fixture("toy.poset.json"), "--lines", fixture("toy.lines.json"),
                        "--expand", "--check", "--jobs", "2"});
  CHECK(e.rc == 0);
  const Result j = run({"enumerate", "--poset", fixture("toy.poset.json"), "--lines", fixture("toy.lines.json"),
                        "--json"});
  REQUIRE(j.rc == 0);
  CHECK(modlat::io::Json::parse(j.out)["total"] == "13");
}

TEST_CASE("lattice analysis") {
  const Result z = run({"subgroup-lattice", "--group", "2,2,2", "--analyze"});
  CHECK(z.rc == 0);
  CHECK(z.out.find("r* (canonical)    8") != std::string::npos);
  CHECK(run({"subgroup-lattice", "--group", "2,2", "--count"}).out == "5\n");
  CHECK(run({"analyze", "--lattice", fixture("m3.json")}).rc == 0);
  const Result n5 = run({"analyze", "--lattice", fixture("pentagon.json")});
  CHECK(n5.rc == 2);
  CHECK(n5.err.find("NotModular") != std::string::npos);
  const Result js = run({"analyze", "--group", "4,4", "--json"});
  REQUIRE(js.rc == 0);
  CHECK(modlat::io::Json::parse(js.out)["i"] == 5);
}

TEST_CASE("verify passes") {
  const Result r = run({"verify"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).rc == 2);
  CHECK(run({"bogus"}).rc == 2);
  CHECK(run({"enumerate"}).rc == 2);
  CHECK(run({"subgroup-lattice", "--group", "1,x"}).rc == 2);
  CHECK(run({"analyze", "--lattice", fixture("missing.json")}).rc == 2);
  CHECK(run({"localize", "--lattice", fixture("m3.json"), "--a", "a", "--b", "b"}).rc == 2);
}

TEST_CASE("base of lines files feed the other commands") {
  const fs::path dir = scratch();
  const std::string bol = (dir / "bol.json").string(), poset = (dir / "p.json").string(),
                    lines = (dir / "l.json").string();
  const Result b = run({"bol", "--group", "4,4", "--json"});
  REQUIRE(b.rc == 0);
  modlat::io::write_text(bol, b.out);
  CHECK(run({"bol", "--group", "4,4", "--poset-out", poset, "--lines-out", lines}).rc == 0);
  CHECK(run({"enumerate", "--poset", poset, "--lines", lines, "--count"}).out == "15\n");
  CHECK(run({"rstar", "--group", "4,4", "--bol", bol}).out.find("r* 2") != std::string::npos);
  CHECK(run({"analyze", "--group", "4,4", "--bol", bol}).rc == 0);

  const Result loc = run({"localize", "--group", "2,2,2", "--a", "<(0,0,1),(0,1,0)>", "--json"});
  REQUIRE(loc.rc == 0);
  const auto pls = modlat::io::pls_from_json(modlat::io::Json::parse(loc.out));
  CHECK(pls.points().size() == 4);
  CHECK(pls.lines().size() == 6);
}

TEST_CASE("rstar, distributive and triangles") {
  CHECK(run({"rstar", "--pls", fixture("fano.pls.json")}).out.find("r* 8") != std::string::npos);
  const Result d = run({"distributive", "--sets", fixture("eight_sets.txt"), "--count"});
  CHECK(d.rc == 0);
  CHECK(d.out == "31\n");
  const Result t = run({"witness-triangle", "--group", "2,2,2"});
  CHECK(t.rc == 0);
  CHECK(t.out.rfind("84 triangle configurations", 0) == 0);
}
