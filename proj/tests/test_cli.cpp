#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wbalg/cli.hpp"
#include "wbalg/corpus.hpp"
#include "wbalg/io.hpp"

using namespace wbalg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "wbalg_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string emit(const std::string& name) {
  const fs::path f = scratch() / (name + ".json");
  REQUIRE(run({"corpus", "emit", name, "-o", f.string()}).code == exit_ok);
  return f.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("corpus list and emit") {
  const Run r = run({"corpus", "list"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("pair-groupoid-2\n") != std::string::npos);
  const Run e = run({"corpus", "emit", "pair-groupoid-2"});
  CHECK(e.code == exit_ok);
  CHECK(parse_constants(e.out).dim == 4);
  CHECK(run({"corpus", "emit", "nope"}).code == exit_input);
}

TEST_CASE("check") {
  Run r = run({"check", emit("pair-groupoid-2")});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "weak bialgebra: yes (lm rm lc rc)\n");
  r = run({"check", emit("grouplike-nilpotent")});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "prebialgebra: yes; axioms: lc rc; failing: lm (witness x,1,x), rm (witness x,1,x)\n");
  r = run({"check", emit("grouplike-nilpotent-dual")});
  CHECK(r.out.rfind("prebialgebra: yes; axioms: lm rm; failing: lc (witness ", 0) == 0);
}

TEST_CASE("input errors and structure-law failures") {
  const fs::path bad = scratch() / "bad.json";
  std::ofstream(bad) << "{\"dim\": 1";
  Run r = run({"check", bad.string()});
  CHECK(r.code == exit_input);
  CHECK(r.err.find("malformed JSON") != std::string::npos);
  CHECK(run({"check", (scratch() / "missing.json").string()}).code == exit_input);
  CHECK(run({"frobnicate"}).code == exit_input);
  CHECK(run({}).code == exit_input);

  StructureConstants sc = corpus_algebra("c2").constants();
  sc.mu(1, 1, 0) = 2;  // g g = 2, so Delta is not multiplicative
  const fs::path law = scratch() / "law.json";
  write_constants(law.string(), sc);
  r = run({"check", law.string()});
  CHECK(r.code == exit_structure);
  CHECK(r.out.rfind("prebialgebra: no; failing:", 0) == 0);
  CHECK(run({"verify", law.string()}).code == exit_structure);
  CHECK(run({"dual", law.string()}).code == exit_structure);
}

TEST_CASE("dual twice is byte-identical") {
  const std::string f = emit("arrow-category");
  const fs::path d1 = scratch() / "d1.json", d2 = scratch() / "d2.json";
  REQUIRE(run({"dual", f, "-o", d1.string()}).code == exit_ok);
  REQUIRE(run({"dual", d1.string(), "-o", d2.string()}).code == exit_ok);
  CHECK(slurp(d2) == slurp(f));
  CHECK(slurp(d1) != slurp(f));
  CHECK(run({"check", d1.string()}).out == "weak bialgebra: yes (lm rm lc rc)\n");
}

TEST_CASE("verify exit codes and JSON") {
  Run r = run({"verify", emit("c2"), "--sections", "4"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("e = 1 (x) 1") != std::string::npos);

  r = run({"verify", emit("grouplike-nilpotent"), "--sections", "1", "--json"});
  CHECK(r.code == exit_identity);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["flags"]["lc"] == true);
  CHECK(doc["flags"]["lm"] == false);
  std::size_t fails = 0;
  for (const auto& e : doc["entries"]) {
    if (e["status"] != "fails") continue;
    ++fails;
    const std::string h = e["hypothesis"];
    CHECK((h == "iff lm" || h == "iff rm"));
    CHECK(e.contains("witness"));
  }
  CHECK(fails == doc["summary"]["fails"]);
  CHECK(fails > 0);

  CHECK(run({"verify", emit("c2"), "--sections", "5"}).code == exit_input);
  r = run({"verify", emit("c3"), "--sections", "1,2", "--json"});
  CHECK(r.code == exit_ok);
  CHECK(nlohmann::json::parse(r.out)["sections"] == nlohmann::json::array({1, 2}));
}

}
