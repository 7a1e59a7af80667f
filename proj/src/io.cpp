#include "wbalg/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace wbalg {

namespace {

using nlohmann::json;

Rational coefficient(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.dump());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": coefficient must be an integer or a \"p/q\" string");
}

std::size_t index(const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_number_unsigned() || v.get<std::size_t>() >= dim)
    throw InputError(where + ": index must be an integer in [0, " + std::to_string(dim) + ")");
  return v.get<std::size_t>();
}

const json& field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  if (!doc[key].is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  return doc[key];
}

void read_triples(const json& doc, const char* key, std::size_t n, std::vector<Rational>& out) {
  std::set<std::size_t> seen;
  for (std::size_t e = 0; e < field(doc, key).size(); ++e) {
    const json& t = doc[key][e];
    const std::string where = std::string(key) + "[" + std::to_string(e) + "]";
    if (!t.is_array() || t.size() != 4) throw InputError(where + ": expected [i, j, k, coefficient]");
    const std::size_t pos = (index(t[0], n, where) * n + index(t[1], n, where)) * n + index(t[2], n, where);
    if (!seen.insert(pos).second) throw InputError(where + ": repeated entry");
    out[pos] = coefficient(t[3], where);
  }
}

void read_pairs(const json& doc, const char* key, std::size_t n, Vec& out) {
  std::set<std::size_t> seen;
  for (std::size_t e = 0; e < field(doc, key).size(); ++e) {
    const json& t = doc[key][e];
    const std::string where = std::string(key) + "[" + std::to_string(e) + "]";
    if (!t.is_array() || t.size() != 2) throw InputError(where + ": expected [i, coefficient]");
    const std::size_t i = index(t[0], n, where);
    if (!seen.insert(i).second) throw InputError(where + ": repeated entry");
    out[i] = coefficient(t[1], where);
  }
}

void write_triples(std::ostream& os, const char* key, std::size_t n, const std::vector<Rational>& v) {
  os << "  \"" << key << "\": [";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = v[(i * n + j) * n + k];
        if (sgn(c) == 0) continue;
        os << (first ? "\n" : ",\n") << "    [" << i << ", " << j << ", " << k << ", \"" << to_string(c) << "\"]";
        first = false;
      }
  os << (first ? "]" : "\n  ]");
}

void write_pairs(std::ostream& os, const char* key, const Vec& v) {
  os << "  \"" << key << "\": [";
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    os << (first ? "" : ", ") << "[" << i << ", \"" << to_string(v[i]) << "\"]";
    first = false;
  }
  os << "]";
}

}  // namespace

StructureConstants parse_constants(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("expected a JSON object");
  static const std::set<std::string> known = {"dim", "mult", "comult", "unit", "counit", "name", "basis"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) throw InputError("unknown field \"" + key + "\"");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0)
    throw InputError("\"dim\" must be a positive integer");
  const std::size_t n = doc["dim"].get<std::size_t>();
  StructureConstants sc(n);
  read_triples(doc, "mult", n, sc.mult);
  read_triples(doc, "comult", n, sc.comult);
  read_pairs(doc, "unit", n, sc.unit);
  read_pairs(doc, "counit", n, sc.counit);
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InputError("\"name\" must be a string");
    sc.name = doc["name"].get<std::string>();
  }
  if (doc.contains("basis")) {
    const json& b = doc["basis"];
    if (!b.is_array() || b.size() != n) throw InputError("\"basis\" must be an array of dim strings");
    for (const auto& l : b) {
      if (!l.is_string()) throw InputError("\"basis\" must be an array of dim strings");
      sc.basis.push_back(l.get<std::string>());
    }
  }
  return sc;
}

std::string serialize(const StructureConstants& sc) {
  std::ostringstream os;
  os << "{\n  \"dim\": " << sc.dim << ",\n";
  if (!sc.name.empty()) os << "  \"name\": " << json(sc.name).dump() << ",\n";
  if (!sc.basis.empty()) os << "  \"basis\": " << json(sc.basis).dump() << ",\n";
  write_triples(os, "mult", sc.dim, sc.mult);
  os << ",\n";
  write_triples(os, "comult", sc.dim, sc.comult);
  os << ",\n";
  write_pairs(os, "unit", sc.unit);
  os << ",\n";
  write_pairs(os, "counit", sc.counit);
  os << "\n}\n";
  return os.str();
}

StructureConstants read_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_constants(buf.str());
}

void write_constants(const std::string& path, const StructureConstants& sc) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << serialize(sc);
}

}  // namespace wbalg
