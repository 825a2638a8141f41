#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "trisym/spectrum_engine.hpp"

namespace trisym {

inline constexpr const char* kLineCsvHeader =
    "band,freq_cm1,intensity,J_lo,K_lo,species_lo,J_up,K_up,species_up,sp_forbidden,ss_forbidden";

/// Floating-point text with 10 significant digits ("%.10g").
std::string format_number(double value);

/// CSV with kLineCsvHeader; booleans as true/false.
void write_lines_csv(const std::vector<SpectralLine>& lines, std::ostream& out);
/// JSON array of objects with the CSV column names as keys.
void write_lines_json(const std::vector<SpectralLine>& lines, std::ostream& out);

}  // namespace trisym
