#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "trisym/molecule.hpp"

namespace trisym {

/// Malformed molecule configuration. `field()` names the offending key,
/// e.g. "bands[1].origin_cm1".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Parses the JSON molecule format:
///
///   { "name": "nh3", "point_group": "C3v", "nuclear_spin": "1/2",
///     "B_cm1": 10.0, "C_cm1": 6.0, "inversion_splitting_cm1": 0.8,
///     "bands": [ { "name": "nu2", "origin_cm1": 950, "type": "parallel" } ] }
///
/// Unknown keys are rejected. Throws ConfigError.
MoleculeSpec parse_molecule_config(const std::string& text);
MoleculeSpec load_molecule_config(const std::string& path);

/// Inverse of parse_molecule_config; output is byte-stable.
std::string dump_molecule_config(const MoleculeSpec& molecule);

/// Names of the shipped molecules, sorted.
std::vector<std::string> builtin_molecule_names();
/// Throws std::invalid_argument for an unknown name.
MoleculeSpec builtin_molecule(const std::string& name);

}  // namespace trisym
