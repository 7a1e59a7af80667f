// Acceptance criteria AC1..AC9. Usage: acceptance <path to wbalg cli> <scratch dir>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "wbalg/corpus.hpp"
#include "wbalg/dualization.hpp"
#include "wbalg/frobenius.hpp"
#include "wbalg/hcomodules.hpp"
#include "wbalg/hmodules.hpp"

using namespace wbalg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<Prebialgebra> corpus() {
  std::vector<Prebialgebra> out;
  for (const auto& n : corpus_names()) out.push_back(corpus_algebra(n));
  return out;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

// Every entry whose id starts with one of the prefixes must hold, and at least
// `min` of them must be present.
void require_holds(Outcome& o, const VerificationReport& r, const std::vector<std::string>& prefixes,
                   const std::string& where, std::size_t min = 1) {
  std::size_t seen = 0;
  for (const auto& e : r.entries()) {
    bool match = false;
    for (const auto& p : prefixes) match = match || starts_with(e.id, p);
    if (!match) continue;
    ++seen;
    if (e.status != Status::holds) o.fail(where + ": " + e.id + " is " + to_string(e.status));
  }
  if (seen < min) o.fail(where + ": expected at least " + std::to_string(min) + " entries for " + prefixes[0]);
}

bool flag_named(const oracle::Flags& f, const std::string& name) {
  if (name == "lm") return f.lm;
  if (name == "rm") return f.rm;
  if (name == "lc") return f.lc;
  return f.rc;
}

Outcome ac1() {
  Outcome o;
  auto expect = [&](const Prebialgebra& p, AxiomFlags want) {
    const AxiomFlags got = check_axioms(p);
    const oracle::Flags f = oracle::flags(p.constants());
    const AxiomFlags brute{f.lm, f.rm, f.lc, f.rc};
    if (!(got == want) || !(brute == want)) o.fail(p.name() + ": flags " + describe(got));
  };
  expect(corpus_algebra("pair-groupoid-2"), {true, true, true, true});
  expect(grouplike_nilpotent(), {false, false, true, true});
  expect(dual(grouplike_nilpotent()), {true, true, false, false});
  expect(corpus_algebra("grouplike-nilpotent-dual"), {true, true, false, false});
  return o;
}

Outcome ac2() {
  Outcome o;
  for (const auto& p : corpus()) {
    const oracle::Flags f = oracle::flags(p.constants());
    const VerificationReport r = verify_section1(p);
    for (int k = 1; k <= 8; ++k) {
      const std::string id = "eq 1.1." + std::to_string(k);
      const ReportEntry* e = r.find(id);
      if (!e || !starts_with(e->hypothesis, "iff ")) {
        o.fail(p.name() + ": " + id + " missing");
        continue;
      }
      const bool identity = e->status == Status::holds;
      if (identity != flag_named(f, e->hypothesis.substr(4)))
        o.fail(p.name() + ": " + id + " holds=" + std::to_string(identity) + " but " + e->hypothesis.substr(4) + " differs");
    }
    if (oracle::identity_1_1_1(p.constants()) != f.rm) o.fail(p.name() + ": brute-force eq 1.1.1 disagrees with rm");
    if (oracle::identity_1_1_5(p.constants()) != f.rc) o.fail(p.name() + ": brute-force eq 1.1.5 disagrees with rc");
  }
  return o;
}

Outcome ac3() {
  Outcome o;
  for (const auto& p : corpus()) {
    const VerificationReport r = verify_section1(p);
    require_holds(o, r, {"Lemma 1.2 chain"}, p.name(), 4);
    require_holds(o, r, {"Lemma 1.2 converse"}, p.name(), 4);
    const AxiomFlags f = check_axioms(p);
    for (const char* id : {"eq 1.2.1", "eq 1.2.2", "eq 1.2.3", "eq 1.2.4", "eq 1.2.6", "eq 1.2.7"}) {
      const ReportEntry* e = r.find(id);
      if (!e) {
        o.fail(p.name() + ": missing " + id);
        continue;
      }
      const Status want = hypothesis_holds(f, e->hypothesis) ? Status::holds : Status::not_applicable;
      if (e->status != want) o.fail(p.name() + ": " + id + " is " + to_string(e->status));
    }
    // I_t = H_L implies (rc), by brute force.
    const SubspaceCatalog c = subspace_catalog(p);
    if (c.I_t == c.H_L && !oracle::flags(p.constants()).rc) o.fail(p.name() + ": I_t = H_L without rc");
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  for (const auto& p : corpus()) {
    if (!check_axioms(p).weak_bialgebra()) continue;
    const VerificationReport r = verify_section1(p);
    require_holds(o, r, {"Lemma 1.4", "Lemma more_algs", "Prop 1.12", "Prop coalg1", "eq 1.5.1"}, p.name(), 14);
    // Closure of H_t and H_s under the product, checked directly.
    const SubspaceCatalog c = subspace_catalog(p);
    for (const Subspace* s : {&c.H_t, &c.H_s, &c.H_t_bar, &c.H_s_bar}) {
      const Mat e = s->embedding();
      for (std::size_t i = 0; i < e.cols(); ++i)
        for (std::size_t j = 0; j < e.cols(); ++j)
          if (!s->contains(oracle::mul(p.constants(), e.col(i), e.col(j)))) o.fail(p.name() + ": subalgebra not closed");
    }
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  for (const auto& p : corpus()) {
    if (!check_axioms(p).weak_bialgebra()) continue;
    const VerificationReport r2 = verify_section2(p, 1);
    require_holds(o, r2, {"Thm 2.4 triangle"}, p.name(), 4);
    require_holds(o, r2, {"Thm 2.4 associativity"}, p.name(), 4);
    const VerificationReport r3 = verify_section3(p, 1);
    require_holds(o, r3, {"Thm 3.1 triangle"}, p.name(), 4);
    require_holds(o, r3, {"Thm 3.1 associativity"}, p.name(), 4);
    if (p.dim() <= 6) {
      const LeftModule h = regular_module(p);
      if (tensor_l(h, h).carrier.dim() != oracle::dim_pi_regular(p.constants()))
        o.fail(p.name() + ": dim H (x)^l H differs from brute force");
    }
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  for (const auto& p : corpus()) {
    const AxiomFlags f = check_axioms(p);
    const std::string name = p.name();
    if (f.monoidal() && (f.lc || f.rc))
      require_holds(o, verify_section2(p, 1),
                    {"Thm forgetful S^ S_", "Thm forgetful S_ S^", "Thm forgetful cotensor equality", "Cor alg4 dimensions"},
                    name, 8);
    if (f.comonoidal() && (f.lm || f.rm))
      require_holds(o, verify_section3(p, 1),
                    {"Thm forgetful_co S^ S_", "Thm forgetful_co S_ S^", "Thm forgetful_co cotensor equality",
                     "Cor alg5 dimensions"},
                    name, 8);
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  for (const auto& p : corpus()) {
    if (!check_axioms(p).weak_bialgebra()) continue;
    const VerificationReport r = verify_section4(p, 1);
    if (!r.all_hold()) o.fail(p.name() + ": " + r.failures()[0]->id);
    require_holds(o, r, {"Prop alg1 Ht separable Frobenius", "Prop alg1 Hs separable Frobenius"}, p.name(), 2);
    require_holds(o, r, {"Prop Frob1 round trip"}, p.name(), 2);
    require_holds(o, r, {"Prop Frob3 image is cotensor"}, p.name(), 6);
    require_holds(o, r, {"Cor alg4 pi"}, p.name(), 3);
    require_holds(o, r, {"Cor alg5 pi"}, p.name(), 3);
  }
  for (const auto& [name, sys] : frobenius_examples())
    if (!check_frobenius(sys).all_hold() || from_coalgebra(to_coalgebra(sys)) != sys) o.fail("example " + name);
  return o;
}

Outcome ac8() {
  Outcome o;
  for (const auto& p : corpus()) {
    if (dual_constants(dual_constants(p.constants())) != p.constants()) o.fail(p.name() + ": double dual differs");
    if (canonical_maps(dual(p)).f != canonical_maps(p).g) o.fail(p.name() + ": f_{H*} != g_H");
  }
  return o;
}

int run_command(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome ac9(const std::string& cli, const std::string& dir) {
  Outcome o;
  const std::string pg = dir + "/ac9_pair_groupoid.json", gn = dir + "/ac9_grouplike_nilpotent.json";
  if (run_command("'" + cli + "' corpus emit pair-groupoid-2 -o '" + pg + "'") != 0 ||
      run_command("'" + cli + "' corpus emit grouplike-nilpotent -o '" + gn + "'") != 0) {
    o.fail("corpus emit failed");
    return o;
  }
  const std::string pg_out = dir + "/ac9_pg_report.json", gn_out = dir + "/ac9_gn_report.json";
  const int pg_code = run_command("'" + cli + "' verify '" + pg + "' --json > '" + pg_out + "'");
  if (pg_code != 0) o.fail("pair groupoid verify exit " + std::to_string(pg_code));
  const auto pg_doc = nlohmann::json::parse(slurp(pg_out));
  if (pg_doc["summary"]["fails"] != 0) o.fail("pair groupoid has failing entries");
  for (const auto& e : pg_doc["entries"])
    if (e["status"] == "fails") o.fail("pair groupoid: " + e["id"].get<std::string>());

  run_command("'" + cli + "' verify '" + gn + "' --sections 1 --json > '" + gn_out + "'");
  const auto gn_doc = nlohmann::json::parse(slurp(gn_out));
  std::set<std::string> failing, conditioned;
  for (const auto& e : gn_doc["entries"]) {
    const std::string id = e["id"], hyp = e["hypothesis"];
    if (hyp == "iff lm" || hyp == "iff rm") conditioned.insert(id);
    if (e["status"] != "fails") continue;
    failing.insert(id);
    if (!e.contains("witness") || e["witness"]["indices"].empty()) o.fail(id + " has no witness");
  }
  if (failing.empty() || failing != conditioned) o.fail("failing set is not exactly the lm/rm-conditioned identities");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <cli> <scratch dir>\n";
    return 2;
  }
  const std::string cli = argv[1], dir = argv[2];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 axiom decision", ac1},
      {"AC2 Lemma 1.1 equivalences", ac2},
      {"AC3 Lemma 1.2 inclusions and equalities", ac3},
      {"AC4 subalgebra and coalgebra structure", ac4},
      {"AC5 Thm 2.4 / Thm 3.1 triangle and associativity", ac5},
      {"AC6 forgetful functors and tensor dimensions", ac6},
      {"AC7 Frobenius structure and pi", ac7},
      {"AC8 dualization", ac8},
      {"AC9 CLI verify", [&] { return ac9(cli, dir); }},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << (o.pass ? "" : ": " + o.detail) << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
