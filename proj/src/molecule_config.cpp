#include "trisym/molecule_config.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace trisym {

namespace {

using Json = nlohmann::ordered_json;

// Band constants below are the fundamental vibrational energies of the
// candidate molecules. B and C are placeholder values (not physical
// constants); supply measured ones through a config file.
const std::map<std::string, std::string>& builtin_sources() {
  static const std::map<std::string, std::string> sources{
      {"fixture", R"({
  "name": "fixture", "point_group": "D3h", "nuclear_spin": "0", "B_cm1": 1.0, "C_cm1": 0.5,
  "bands": [ {"name": "par", "origin_cm1": 1000.0, "type": "parallel"},
             {"name": "perp", "origin_cm1": 1500.0, "type": "perpendicular"} ] })"},
      {"so3", R"({
  "name": "so3", "point_group": "D3h", "nuclear_spin": "0", "B_cm1": 0.35, "C_cm1": 0.175,
  "bands": [ {"name": "nu1", "origin_cm1": 1065.0, "type": "parallel"},
             {"name": "nu2", "origin_cm1": 498.0, "type": "parallel"},
             {"name": "nu3", "origin_cm1": 1391.0, "type": "perpendicular"},
             {"name": "nu4", "origin_cm1": 530.0, "type": "perpendicular"} ] })"},
      {"bh3", R"({
  "name": "bh3", "point_group": "D3h", "nuclear_spin": "1/2", "B_cm1": 3.5, "C_cm1": 1.75,
  "bands": [ {"name": "nu2", "origin_cm1": 1125.0, "type": "parallel"},
             {"name": "nu3", "origin_cm1": 2828.0, "type": "perpendicular"},
             {"name": "nu4", "origin_cm1": 1640.0, "type": "perpendicular"} ] })"},
      {"nh3", R"({
  "name": "nh3", "point_group": "C3v", "nuclear_spin": "1/2", "B_cm1": 10.0, "C_cm1": 6.0,
  "inversion_splitting_cm1": 0.8,
  "bands": [ {"name": "nu1", "origin_cm1": 3337.0, "type": "parallel"},
             {"name": "nu2", "origin_cm1": 950.0, "type": "parallel"},
             {"name": "nu3", "origin_cm1": 3444.0, "type": "perpendicular"},
             {"name": "nu4", "origin_cm1": 1627.0, "type": "perpendicular"} ] })"},
  };
  return sources;
}

const Json& require(const Json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(where + key, "missing");
  return *it;
}

std::string get_string(const Json& obj, const std::string& key, const std::string& where) {
  const Json& v = require(obj, key, where);
  if (!v.is_string()) throw ConfigError(where + key, "expected a string");
  return v.get<std::string>();
}

double get_number(const Json& obj, const std::string& key, const std::string& where) {
  const Json& v = require(obj, key, where);
  if (!v.is_number()) throw ConfigError(where + key, "expected a number");
  return v.get<double>();
}

void reject_unknown(const Json& obj, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!known.count(key)) throw ConfigError(where + key, "unknown field");
  }
}

template <typename Parse>
auto parse_enum(const Json& obj, const std::string& key, const std::string& where, Parse parse) {
  const std::string text = get_string(obj, key, where);
  try {
    return parse(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(where + key, e.what());
  }
}

}  // namespace

MoleculeSpec parse_molecule_config(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError("<document>", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("<document>", "expected a JSON object");
  reject_unknown(doc, {"name", "point_group", "nuclear_spin", "B_cm1", "C_cm1", "inversion_splitting_cm1", "bands"},
                 "");

  MoleculeSpec m;
  m.name = get_string(doc, "name", "");
  m.point_group = parse_enum(doc, "point_group", "", parse_point_group);
  m.nuclear_spin = parse_enum(doc, "nuclear_spin", "", parse_nuclear_spin);
  m.B_cm1 = get_number(doc, "B_cm1", "");
  m.C_cm1 = get_number(doc, "C_cm1", "");
  if (doc.contains("inversion_splitting_cm1")) m.inversion_splitting_cm1 = get_number(doc, "inversion_splitting_cm1", "");

  const Json& bands = require(doc, "bands", "");
  if (!bands.is_array()) throw ConfigError("bands", "expected an array");
  for (std::size_t i = 0; i < bands.size(); ++i) {
    const std::string where = "bands[" + std::to_string(i) + "].";
    const Json& b = bands[i];
    if (!b.is_object()) throw ConfigError("bands[" + std::to_string(i) + "]", "expected an object");
    reject_unknown(b, {"name", "origin_cm1", "type"}, where);
    m.bands.push_back({get_string(b, "name", where), get_number(b, "origin_cm1", where),
                       parse_enum(b, "type", where, parse_band_type)});
  }

  try {
    m.validate();
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    const auto colon = msg.find(':');
    throw ConfigError(msg.substr(0, colon), colon == std::string::npos ? msg : msg.substr(colon + 2));
  }
  return m;
}

MoleculeSpec load_molecule_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_molecule_config(buf.str());
}

std::string dump_molecule_config(const MoleculeSpec& molecule) {
  Json doc;
  doc["name"] = molecule.name;
  doc["point_group"] = to_string(molecule.point_group);
  doc["nuclear_spin"] = to_string(molecule.nuclear_spin);
  doc["B_cm1"] = molecule.B_cm1;
  doc["C_cm1"] = molecule.C_cm1;
  if (molecule.inversion_splitting_cm1) doc["inversion_splitting_cm1"] = *molecule.inversion_splitting_cm1;
  doc["bands"] = Json::array();
  for (const auto& b : molecule.bands) {
    doc["bands"].push_back({{"name", b.name}, {"origin_cm1", b.origin_cm1}, {"type", to_string(b.type)}});
  }
  return doc.dump(2) + "\n";
}

std::vector<std::string> builtin_molecule_names() {
  std::vector<std::string> names;
  for (const auto& [name, source] : builtin_sources()) names.push_back(name);
  return names;
}

MoleculeSpec builtin_molecule(const std::string& name) {
  auto it = builtin_sources().find(name);
  if (it == builtin_sources().end()) throw std::invalid_argument("molecule: unknown molecule '" + name + "'");
  return parse_molecule_config(it->second);
}

}  // namespace trisym
