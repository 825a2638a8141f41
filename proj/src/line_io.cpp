#include "trisym/line_io.hpp"

#include <string>

#include <fmt/format.h>
#include <json.hpp>

namespace trisym {

namespace {

// Rounds through the 10-digit text form so the JSON mirror carries the
// same digits as the CSV.
double rounded(double value) { return std::stod(format_number(value)); }

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_number(double value) { return fmt::format("{:.10g}", value); }

void write_lines_csv(const std::vector<SpectralLine>& lines, std::ostream& out) {
  out << kLineCsvHeader << '\n';
  for (const auto& l : lines) {
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", l.band, format_number(l.frequency_cm1),
                       format_number(l.intensity), l.lower.J, l.lower.K, to_string(l.lower.species), l.upper.J,
                       l.upper.K, to_string(l.upper.species), flag(l.sp_forbidden), flag(l.ss_forbidden));
  }
}

void write_lines_json(const std::vector<SpectralLine>& lines, std::ostream& out) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& l : lines) {
    doc.push_back({
        {"band", l.band},
        {"freq_cm1", rounded(l.frequency_cm1)},
        {"intensity", rounded(l.intensity)},
        {"J_lo", l.lower.J},
        {"K_lo", l.lower.K},
        {"species_lo", to_string(l.lower.species)},
        {"J_up", l.upper.J},
        {"K_up", l.upper.K},
        {"species_up", to_string(l.upper.species)},
        {"sp_forbidden", l.sp_forbidden},
        {"ss_forbidden", l.ss_forbidden},
    });
  }
  out << doc.dump(2) << '\n';
}

}  // namespace trisym
