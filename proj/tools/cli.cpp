#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "trisym/group_algebra.hpp"
#include "trisym/line_io.hpp"
#include "trisym/molecule_config.hpp"
#include "trisym/spectrum_engine.hpp"
#include "trisym/symmetry_classifier.hpp"

namespace trisym::cli {

namespace {

using Json = nlohmann::ordered_json;

// Bad flag values; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MoleculeSpec resolve_molecule(const std::string& name_or_path) {
  const auto names = builtin_molecule_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) return builtin_molecule(name_or_path);
  if (std::filesystem::exists(name_or_path)) return load_molecule_config(name_or_path);
  throw UsageError("molecule: unknown molecule '" + name_or_path + "' (see `trisym molecules`)");
}

template <typename F>
auto as_usage(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string complex_text(Complex z) {
  auto clean = [](double x) { return std::abs(x) < 5e-16 ? 0.0 : x; };
  const double re = clean(z.real());
  const double im = clean(z.imag());
  if (im == 0.0) return fmt::format("{:.6g}", re);
  if (re == 0.0) return fmt::format("{:.6g}i", im);
  return fmt::format("{:.6g}{:+.6g}i", re, im);
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json matrix_json(const RepMatrix& m, bool integral) {
  Json rows = Json::array();
  for (int r = 0; r < 6; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 6; ++c) {
      if (integral) {
        row.push_back(static_cast<int>(m(r, c).real()));
      } else {
        row.push_back(complex_json(m(r, c)));
      }
    }
    rows.push_back(row);
  }
  return rows;
}

void print_matrix(std::ostream& out, const RepMatrix& m) {
  for (int r = 0; r < 6; ++r) {
    std::string line;
    for (int c = 0; c < 6; ++c) line += fmt::format(" {:>12}", complex_text(m(r, c)));
    out << line << '\n';
  }
}

Json vector_json(const SymVector& v) {
  Json out = Json::array();
  for (int i = 0; i < 6; ++i) out.push_back(complex_json(v(i)));
  return out;
}

int show_group(const std::string& what, const std::string& format, std::ostream& out) {
  const auto& elements = all_permutations();
  const bool json = format == "json";
  Json doc;
  if (what == "table") {
    if (json) {
      Json table = Json::object();
      for (const auto& p : elements) {
        Json row = Json::object();
        for (const auto& q : elements) row[q.name()] = compose(p, q).name();
        table[p.name()] = row;
      }
      Json chars = Json::object();
      for (auto r : kIrreps) {
        chars[to_string(r)] = Json::array({character(r, ClassLabel::Identity), character(r, ClassLabel::Transposition),
                                           character(r, ClassLabel::ThreeCycle)});
      }
      doc = {{"multiplication", table},
             {"classes", Json::array({"identity", "transposition", "three-cycle"})},
             {"class_sizes", Json::array({1, 3, 2})},
             {"characters", chars}};
    } else {
      out << "multiplication table (row p, column q: apply q, then p)\n";
      std::string header = fmt::format("{:>9}", "");
      for (const auto& q : elements) header += fmt::format("{:>9}", q.name());
      out << header << '\n';
      for (const auto& p : elements) {
        std::string line = fmt::format("{:>9}", p.name());
        for (const auto& q : elements) line += fmt::format("{:>9}", compose(p, q).name());
        out << line << '\n';
      }
      out << "\ncharacters      identity  transposition  three-cycle\n";
      out << "class size             1              3            2\n";
      for (auto r : kIrreps) {
        out << fmt::format("{:<10}{:>14}{:>15}{:>13}\n", to_string(r), character(r, ClassLabel::Identity),
                           character(r, ClassLabel::Transposition), character(r, ClassLabel::ThreeCycle));
      }
    }
  } else if (what == "matrices") {
    for (const auto& p : elements) {
      if (json) {
        doc[p.name()] = matrix_json(regular_rep(p), true);
      } else {
        out << "P" << p.name() << " [" << to_string(class_of(p)) << "]\n";
        print_matrix(out, regular_rep(p));
        out << '\n';
      }
    }
  } else if (what == "eigenbasis") {
    for (const auto& e : cycle_eigenbasis()) {
      const Complex other = std::conj(e.eigenvalue);
      if (json) {
        doc[e.name] = {{"vector", vector_json(e.vector)},
                       {"eigenvalue_123", complex_json(e.eigenvalue)},
                       {"eigenvalue_321", complex_json(other)}};
      } else {
        std::string comps;
        for (int i = 0; i < 6; ++i) comps += (i ? ", " : "") + complex_text(e.vector(i));
        out << fmt::format("{:<3} eigenvalue (1,2,3): {:<22} (3,2,1): {:<22} [{}]\n", e.name,
                           complex_text(e.eigenvalue), complex_text(other), comps);
      }
    }
  } else if (what == "projectors") {
    const auto primes = invariant_projectors();
    const std::vector<std::pair<std::string, RepMatrix>> projectors{
        {"S", symmetrizer()}, {"A", antisymmetrizer()}, {"Pprime1", primes.prime1}, {"Pprime2", primes.prime2}};
    for (const auto& [name, m] : projectors) {
      if (json) {
        doc[name] = matrix_json(m, false);
      } else {
        out << name << '\n';
        print_matrix(out, m);
        out << '\n';
      }
    }
  } else {
    throw UsageError("--show: expected table, matrices, eigenbasis or projectors");
  }
  if (json) out << doc.dump(2) << '\n';
  return kExitOk;
}

Json assignment_json(const SymmetryAssignment& a) {
  auto labels = [](SubspaceSet s) {
    Json arr = Json::array();
    for (auto l : s.labels()) arr.push_back(to_string(l));
    return arr;
  };
  Json doc = {{"subspaces", labels(a.subspaces)}, {"forbidden_by", to_string(a.forbidden_by)}};
  if (!a.per_spin.empty()) {
    Json per = Json::array();
    for (const auto& p : a.per_spin) {
      per.push_back({{"I", to_string(p.I)}, {"subspaces", labels(p.subspaces)}, {"forbidden_by", to_string(p.forbidden_by)}});
    }
    doc["per_spin"] = per;
  }
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation-symmetry classification and forbidden-line spectra of molecules with three identical nuclei",
               "trisym"};
  app.require_subcommand(1, 1);

  std::string format;
  std::string molecule_name;

  auto* group = app.add_subcommand("group", "Show S3 group-algebra artifacts");
  std::string show = "table";
  group->add_option("--show", show, "table | matrices | eigenbasis | projectors")
      ->check(CLI::IsMember({"table", "matrices", "eigenbasis", "projectors"}));
  group->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* classify_cmd = app.add_subcommand("classify", "Assign a rotational state to its symmetry subspace");
  int J = 0;
  int K = 0;
  std::string spin_text;
  std::string species_text;
  classify_cmd->add_option("--molecule", molecule_name, "shipped molecule name or config path")->required();
  classify_cmd->add_option("--J", J, "rotational quantum number J")->required();
  classify_cmd->add_option("--K", K, "signed projection K")->required();
  classify_cmd->add_option("--I", spin_text, "total nuclear spin: 1/2 or 3/2");
  classify_cmd->add_option("--species", species_text, "inversion species: s or a (C3v only)");
  classify_cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* energies = app.add_subcommand("energies", "Print the rotational energy grid E(J,K)");
  int jmax = 30;
  energies->add_option("--molecule", molecule_name, "shipped molecule name or config path")->required();
  energies->add_option("--jmax", jmax, "highest J")->capture_default_str();
  energies->add_option("--format", format, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));

  auto* linelist = app.add_subcommand("linelist", "Generate a vibrational-band line list");
  std::string band_name;
  double temperature = 296.0;
  double beta = 0.0;
  std::string out_path;
  linelist->add_option("--molecule", molecule_name, "shipped molecule name or config path")->required();
  linelist->add_option("--band", band_name, "band name from the molecule config")->required();
  linelist->add_option("--jmax", jmax, "highest lower-state J")->capture_default_str();
  linelist->add_option("--temp", temperature, "temperature in K")->capture_default_str();
  linelist->add_option("--beta", beta, "population fraction of symmetry-violating molecules")->capture_default_str();
  linelist->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  linelist->add_option("--out", out_path, "output file (default: stdout)");

  auto* molecules = app.add_subcommand("molecules", "List shipped molecule configs");
  std::string dump_name;
  molecules->add_option("--dump", dump_name, "print the config of one molecule");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (group->parsed()) return show_group(show, format.empty() ? "text" : format, out);

    if (classify_cmd->parsed()) {
      const MoleculeSpec molecule = resolve_molecule(molecule_name);
      RotationalState state{J, K, InversionSpecies::None, {}};
      if (!spin_text.empty()) state.I = as_usage([&] { return parse_total_spin(spin_text); });
      if (!species_text.empty()) state.species = as_usage([&] { return parse_species(species_text); });
      as_usage([&] {
        validate_state(molecule, state);
        return 0;
      });
      const SymmetryAssignment a = classify(molecule, state);
      if (format == "json") {
        out << assignment_json(a).dump(2) << '\n';
      } else {
        out << to_string(a.subspaces) << "; forbidden by: " << to_string(a.forbidden_by) << '\n';
        for (const auto& p : a.per_spin) {
          out << "  I=" << to_string(p.I) << ": " << to_string(p.subspaces)
              << "; forbidden by: " << to_string(p.forbidden_by) << '\n';
        }
      }
      return kExitOk;
    }

    if (energies->parsed()) {
      const MoleculeSpec molecule = resolve_molecule(molecule_name);
      if (jmax < 0) throw UsageError("jmax: must be non-negative");
      const auto levels = rotational_levels(molecule, jmax);
      if (format == "json") {
        Json rows = Json::array();
        for (const auto& s : levels) {
          rows.push_back({{"J", s.J}, {"K", s.K}, {"species", to_string(s.species)},
                          {"E_cm1", std::stod(format_number(level_energy(molecule, s)))}});
        }
        out << rows.dump(2) << '\n';
      } else if (format == "csv") {
        out << "J,K,species,E_cm1\n";
        for (const auto& s : levels) {
          out << fmt::format("{},{},{},{}\n", s.J, s.K, to_string(s.species), format_number(level_energy(molecule, s)));
        }
      } else {
        out << fmt::format("{:>4} {:>4} {:>8} {:>18}\n", "J", "K", "species", "E_cm1");
        for (const auto& s : levels) {
          out << fmt::format("{:>4} {:>4} {:>8} {:>18}\n", s.J, s.K, to_string(s.species),
                             format_number(level_energy(molecule, s)));
        }
      }
      return kExitOk;
    }

    if (linelist->parsed()) {
      const MoleculeSpec molecule = resolve_molecule(molecule_name);
      const ThermalEnsemble ensemble{temperature, jmax};
      const ViolationModel violation{beta};
      as_usage([&] {
        molecule.band(band_name);
        ensemble.validate();
        violation.validate();
        return 0;
      });
      const auto lines = line_list(molecule, band_name, ensemble, violation);
      std::ostringstream body;
      if (format == "json") {
        write_lines_json(lines, body);
      } else {
        write_lines_csv(lines, body);
      }
      if (out_path.empty()) {
        out << body.str();
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw std::runtime_error("out: cannot open " + out_path + " for writing");
        file << body.str();
        const auto s = summarize(lines);
        out << fmt::format(
            "wrote {} lines to {}: {} allowed (total intensity {}), {} SP-forbidden (total {}), "
            "{} SS-forbidden (total {})\n",
            lines.size(), out_path, s.allowed_lines, format_number(s.allowed_intensity), s.sp_forbidden_lines,
            format_number(s.sp_forbidden_intensity), s.ss_forbidden_lines, format_number(s.ss_forbidden_intensity));
      }
      return kExitOk;
    }

    if (molecules->parsed()) {
      if (!dump_name.empty()) {
        out << dump_molecule_config(resolve_molecule(dump_name));
        return kExitOk;
      }
      for (const auto& name : builtin_molecule_names()) {
        const MoleculeSpec m = builtin_molecule(name);
        std::string bands;
        for (const auto& b : m.bands) {
          bands += fmt::format("{}{}={} ({})", bands.empty() ? "" : ", ", b.name, format_number(b.origin_cm1),
                               to_string(b.type));
        }
        out << fmt::format("{:<8} {} spin {:<4} B={} C={} (placeholder constants)  bands: {}\n", name,
                           to_string(m.point_group), to_string(m.nuclear_spin), format_number(m.B_cm1),
                           format_number(m.C_cm1), bands);
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace trisym::cli
