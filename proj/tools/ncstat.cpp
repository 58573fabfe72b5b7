// ncstat command-line front end.

#include <iostream>
#include <optional>
#include <string>
#include <string_view>

#include <CLI11.hpp>

#include "ncstat/cli/commands.hpp"
#include "ncstat/cli/manifest.hpp"
#include "ncstat/errors.hpp"

namespace {

using namespace ncstat::cli;

std::optional<std::string> find_manifest_flag(int argc, char** argv) {
  constexpr std::string_view kFlag = "--manifest";
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == kFlag && i + 1 < argc) return std::string(argv[i + 1]);
    if (arg.substr(0, kFlag.size() + 1) == "--manifest=") return std::string(arg.substr(kFlag.size() + 1));
  }
  return std::nullopt;
}

struct Raw {
  std::optional<std::string> mode, format, spacing, z_method, figure, derivative, alpha, methods, variant,
      ell_source, spectrum_case, ell_convention;
};

template <class F>
void apply_if_set(const std::optional<std::string>& v, F&& f) {
  if (v) f(*v);
}

}  // namespace

int main(int argc, char** argv) {
  RunManifest m;
  bool subcommand_from_manifest = false;
  try {
    if (auto path = find_manifest_flag(argc, argv)) {
      m = load_manifest(*path);
      subcommand_from_manifest = true;
    }
  } catch (const ncstat::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ncstat::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  }

  CLI::App app{"Spectra, partition functions and thermal functions of a non-central potential"};
  app.fallthrough();
  app.require_subcommand(subcommand_from_manifest ? 0 : 1, 1);

  Raw raw;
  std::string manifest_path, write_manifest;
  app.add_option("--manifest", manifest_path, "JSON run manifest supplying defaults");
  app.add_option("--write-manifest", write_manifest, "Save the effective run manifest to PATH");
  app.add_option("--a1", m.params.a1, "Oscillator coefficient a1 (> 0)");
  app.add_option("--a2", m.params.a2, "Coefficient a2 of 1/(r^2 sin^2 theta)");
  app.add_option("--a3", m.params.a3, "Coefficient a3 of cot^2 theta / r^2");
  app.add_option("--mass", m.params.mass, "Particle mass M (> 0)");
  app.add_option("--hbar", m.params.hbar, "Reduced Planck constant (> 0)");
  app.add_option("--mode", raw.mode, "Counting mode: 1d or 3d");
  app.add_option("--format", raw.format, "Output format: csv or json");
  app.add_option("--out", m.out, "Output path (default: standard output)");

  auto* spec = app.add_subcommand("spectrum", "Energy table E/xi");
  spec->add_option("--n-max", m.spectrum.n_max, "Largest radial quantum number");
  spec->add_option("--ell-max", m.spectrum.ell_max, "Largest integer ell (integer source)");
  spec->add_option("--s-max", m.spectrum.s_max, "Largest angular quantum number s (angular source)");
  spec->add_option("--m-max", m.spectrum.m_max, "Largest |m| (angular source)");
  spec->add_option("--ell-source", raw.ell_source, "integer or angular");
  spec->add_option("--case", raw.spectrum_case, "general, a2_only, a3_only or oscillator");
  spec->add_option("--ell-convention", raw.ell_convention, "effective (L + 1/2) or integer");

  auto* part = app.add_subcommand("partition", "Partition function by several methods");
  part->add_option("--alpha", raw.alpha, "alpha_bar values, comma separated");
  part->add_option("--methods", raw.methods, "direct,em,em_derived,em_paper,exact,em_series");
  part->add_option("--cutoff", m.partition.cutoff, "Direct-sum terms (0 = automatic)");
  part->add_option("--em-order", m.partition.em_order, "Euler-Maclaurin correction order");
  part->add_option("--variant", raw.variant, "1d Euler-Maclaurin variant: derived or paper");

  auto* sw = app.add_subcommand("sweep", "Thermal functions on an alpha_bar grid");
  sw->add_option("--alpha-min", m.sweep.alpha_min, "Grid lower bound");
  sw->add_option("--alpha-max", m.sweep.alpha_max, "Grid upper bound");
  sw->add_option("--points", m.sweep.points, "Number of grid points");
  sw->add_option("--spacing", raw.spacing, "lin or log");
  sw->add_option("--z-method", raw.z_method, "direct, em or exact (1d)");
  sw->add_option("--figure", raw.figure, "f1..f5 (f5 is the 1d panel)");
  sw->add_option("--derivative", raw.derivative, "analytic or fd");
  sw->add_option("--eta", m.sweep.eta, "Relative finite-difference step");
  sw->add_option("--jump-threshold", m.sweep.jump_threshold, "Continuity scan threshold");
  sw->add_option("--variant", raw.variant, "1d Euler-Maclaurin variant: derived or paper");

  auto* ver = app.add_subcommand("verify", "Run the built-in oracle checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (spec->parsed()) m.subcommand = Subcommand::spectrum;
    if (part->parsed()) m.subcommand = Subcommand::partition;
    if (sw->parsed()) m.subcommand = Subcommand::sweep;
    if (ver->parsed()) m.subcommand = Subcommand::verify;

    apply_if_set(raw.mode, [&](const std::string& s) { m.mode = parse_mode(s); });
    apply_if_set(raw.format, [&](const std::string& s) { m.format = parse_format(s); });
    apply_if_set(raw.ell_source, [&](const std::string& s) { m.spectrum.ell_source = parse_ell_source(s); });
    apply_if_set(raw.spectrum_case, [&](const std::string& s) { m.spectrum.spectrum_case = parse_spectrum_case(s); });
    apply_if_set(raw.ell_convention,
          [&](const std::string& s) { m.spectrum.ell_convention = parse_ell_convention(s); });
    apply_if_set(raw.alpha, [&](const std::string& s) { m.partition.alpha = parse_alpha_list(s); });
    apply_if_set(raw.methods, [&](const std::string& s) { m.partition.methods = parse_method_list(s); });
    apply_if_set(raw.variant, [&](const std::string& s) { m.partition.variant = parse_variant(s); });
    apply_if_set(raw.spacing, [&](const std::string& s) { m.sweep.spacing = parse_spacing(s); });
    apply_if_set(raw.z_method, [&](const std::string& s) { m.sweep.z_method = parse_z_method(s); });
    apply_if_set(raw.figure, [&](const std::string& s) { m.sweep.figure = parse_figure(s); });
    apply_if_set(raw.derivative, [&](const std::string& s) { m.sweep.derivative = parse_derivative(s); });

    if (!write_manifest.empty()) save_manifest(m, write_manifest);
  } catch (const ncstat::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ncstat::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  }

  return execute(m, std::cout, std::cerr);
}
