#pragma once

// Loader for tests/golden/classification_tables.csv, a literal
// transcription of the published classification tables (J <= 10).

#include <optional>
#include <string>
#include <vector>

#include "trisym/symmetry_classifier.hpp"

namespace trisym::golden {

struct Row {
  std::string table;  // "I", "III", "IV-0", "IV-1/2"
  int J = 0;
  int K = 0;
  InversionSpecies species = InversionSpecies::None;
  std::optional<TotalSpin> I;
  SubspaceSet subspaces;
  ForbiddenBy forbidden_by = ForbiddenBy::None;
};

std::vector<Row> load(const std::string& path);

/// Path of the shipped CSV (compiled in).
std::string default_path();

/// Runs the classifier entry point the row's table corresponds to.
SymmetryAssignment classify_row(const Row& row);

std::string describe(const Row& row);

}  // namespace trisym::golden
