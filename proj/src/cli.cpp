#include "wbalg/cli.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "wbalg/corpus.hpp"
#include "wbalg/dualization.hpp"
#include "wbalg/frobenius.hpp"
#include "wbalg/hcomodules.hpp"
#include "wbalg/hmodules.hpp"
#include "wbalg/io.hpp"

namespace wbalg {

namespace {

using ojson = nlohmann::ordered_json;

std::string labelled(const StructureConstants& sc, const Witness& w) {
  std::string s;
  for (std::size_t i = 0; i < w.indices.size(); ++i) s += (i ? "," : "") + sc.label(w.indices[i]);
  return s;
}

std::string raw(const Witness& w) {
  std::string s;
  for (std::size_t i = 0; i < w.indices.size(); ++i) s += (i ? "," : "") + std::to_string(w.indices[i]);
  return s;
}

// Loads and validates; on failure writes the message and returns the exit code.
std::optional<Prebialgebra> load(const std::string& path, std::ostream& out, std::ostream& err, int& code) {
  StructureConstants sc;
  try {
    sc = read_constants(path);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    code = exit_input;
    return std::nullopt;
  }
  const VerificationReport v = validate(sc);
  if (!v.all_hold()) {
    out << "prebialgebra: no; failing:";
    bool first = true;
    for (const auto* e : v.failures()) {
      out << (first ? " " : ", ") << e->id;
      if (!e->witness->indices.empty()) out << " (witness " << labelled(sc, *e->witness) << ")";
      out << ": " << e->witness->detail;
      first = false;
    }
    out << "\n";
    code = exit_structure;
    return std::nullopt;
  }
  return Prebialgebra(std::move(sc));
}

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err) {
  int code = exit_ok;
  const auto p = load(path, out, err, code);
  if (!p) return code;
  const AxiomDecision d = decide_axioms(*p);
  if (d.flags.weak_bialgebra()) {
    out << "weak bialgebra: yes (" << describe(d.flags) << ")\n";
    return exit_ok;
  }
  const std::string held = describe(d.flags);
  out << "prebialgebra: yes; axioms: " << (held.empty() ? "none" : held) << "; failing:";
  const std::pair<const char*, const std::optional<Witness>*> axioms[] = {
      {"lm", &d.lm_witness}, {"rm", &d.rm_witness}, {"lc", &d.lc_witness}, {"rc", &d.rc_witness}};
  bool first = true;
  for (const auto& [name, w] : axioms) {
    if (!*w) continue;
    out << (first ? " " : ", ") << name << " (witness " << labelled(p->constants(), **w) << ")";
    first = false;
  }
  out << "\n";
  return exit_ok;
}

std::vector<std::pair<int, VerificationReport>> run_sections(const Prebialgebra& p, const std::set<int>& sections,
                                                              std::uint64_t seed) {
  std::vector<std::pair<int, VerificationReport>> out;
  for (int s : sections) {
    VerificationReport r;
    switch (s) {
      case 1:
        r = verify_section1(p);
        r.merge(verify_duality(p));
        break;
      case 2: r = verify_section2(p, seed); break;
      case 3: r = verify_section3(p, seed); break;
      case 4: r = verify_section4(p, seed); break;
    }
    out.emplace_back(s, std::move(r));
  }
  return out;
}

int cmd_verify(const std::string& path, const std::vector<int>& wanted, std::uint64_t seed, bool as_json,
               std::ostream& out, std::ostream& err) {
  std::set<int> sections;
  for (int s : wanted) {
    if (s < 1 || s > 4) {
      err << "error: sections are 1, 2, 3 and 4\n";
      return exit_input;
    }
    sections.insert(s);
  }
  if (sections.empty()) sections = {1, 2, 3, 4};
  int code = exit_ok;
  const auto p = load(path, out, err, code);
  if (!p) return code;
  const AxiomFlags flags = check_axioms(*p);
  const auto reports = run_sections(*p, sections, seed);
  std::map<Status, std::size_t> totals;
  for (const auto& [s, r] : reports)
    for (Status st : {Status::holds, Status::fails, Status::not_applicable}) totals[st] += r.count(st);

  if (as_json) {
    ojson doc;
    doc["algebra"] = p->name();
    doc["dim"] = p->dim();
    doc["flags"] = {{"lm", flags.lm}, {"rm", flags.rm}, {"lc", flags.lc}, {"rc", flags.rc}};
    doc["seed"] = seed;
    doc["sections"] = std::vector<int>(sections.begin(), sections.end());
    ojson entries = ojson::array();
    for (const auto& [s, r] : reports)
      for (const auto& e : r.entries()) {
        ojson j;
        j["section"] = s;
        j["id"] = e.id;
        j["status"] = to_string(e.status);
        j["hypothesis"] = e.hypothesis;
        if (e.witness) j["witness"] = {{"indices", e.witness->indices}, {"detail", e.witness->detail}};
        if (!e.note.empty()) j["note"] = e.note;
        entries.push_back(std::move(j));
      }
    doc["entries"] = std::move(entries);
    doc["summary"] = {{"holds", totals[Status::holds]},
                      {"fails", totals[Status::fails]},
                      {"not_applicable", totals[Status::not_applicable]}};
    out << doc.dump(2) << "\n";
  } else {
    out << (p->name().empty() ? std::string("(unnamed)") : p->name()) << ", dim " << p->dim() << ", axioms: "
        << describe(flags) << "\n";
    for (const auto& [s, r] : reports) {
      out << "section " << s << "\n";
      for (const auto& e : r.entries()) {
        switch (e.status) {
          case Status::holds: out << "  holds  " << e.id; break;
          case Status::fails:
            out << "  FAILS  " << e.id << "  witness (" << raw(*e.witness) << "): " << e.witness->detail;
            break;
          case Status::not_applicable: out << "  n/a    " << e.id << "  [needs " << e.hypothesis << "]"; break;
        }
        if (!e.note.empty()) out << "  -- " << e.note;
        out << "\n";
      }
    }
    out << totals[Status::holds] << " hold, " << totals[Status::fails] << " fail, "
        << totals[Status::not_applicable] << " not applicable\n";
  }
  return totals[Status::fails] == 0 ? exit_ok : exit_identity;
}

int emit(const StructureConstants& sc, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << serialize(sc);
    return exit_ok;
  }
  try {
    write_constants(path, sc);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for weak bialgebras given by structure constants", "wbalg"};
  app.require_subcommand(1);

  std::string file, output, name;
  std::vector<int> sections;
  std::uint64_t seed = 1;
  bool as_json = false;

  auto* check = app.add_subcommand("check", "Decide the prebialgebra laws and the four axioms");
  check->add_option("file", file, "structure-constant file")->required();

  auto* verify = app.add_subcommand("verify", "Run the identity checks");
  verify->add_option("file", file, "structure-constant file")->required();
  verify->add_option("--sections", sections, "comma separated subset of 1,2,3,4")->delimiter(',');
  verify->add_option("--seed", seed, "seed for the random (co)modules");
  verify->add_flag("--json", as_json, "emit the report as JSON");

  auto* dual_cmd = app.add_subcommand("dual", "Write the dual prebialgebra");
  dual_cmd->add_option("file", file, "structure-constant file")->required();
  dual_cmd->add_option("-o,--output", output, "output file (default stdout)");

  auto* corpus = app.add_subcommand("corpus", "The built-in examples");
  corpus->require_subcommand(1);
  auto* list = corpus->add_subcommand("list", "List example names");
  auto* emit_cmd = corpus->add_subcommand("emit", "Write an example");
  emit_cmd->add_option("name", name, "example name")->required();
  emit_cmd->add_option("-o,--output", output, "output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }

  if (check->parsed()) return cmd_check(file, out, err);
  if (verify->parsed()) return cmd_verify(file, sections, seed, as_json, out, err);
  if (dual_cmd->parsed()) {
    int code = exit_ok;
    const auto p = load(file, out, err, code);
    if (!p) return code;
    return emit(dual_constants(p->constants()), output, out, err);
  }
  if (list->parsed()) {
    for (const auto& n : corpus_names()) out << n << "\n";
    return exit_ok;
  }
  if (emit_cmd->parsed()) {
    const auto names = corpus_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      err << "error: unknown example \"" << name << "\"; try corpus list\n";
      return exit_input;
    }
    return emit(corpus_algebra(name).constants(), output, out, err);
  }
  return exit_input;
}

}  // namespace wbalg
