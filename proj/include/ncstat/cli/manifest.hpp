#pragma once

// Complete description of one CLI run. Every flag maps onto a field, so a
// manifest written by one run reproduces it exactly.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ncstat/cli/dataset.hpp"
#include "ncstat/partition.hpp"
#include "ncstat/spectrum.hpp"
#include "ncstat/thermo.hpp"

namespace ncstat::cli {

enum class Subcommand { spectrum, partition, sweep, verify };
enum class Format { csv, json };
enum class EllSource { integer, angular };
enum class SpectrumCase { general, a2_only, a3_only, oscillator };

struct SpectrumOptions {
  int n_max = 3;
  int ell_max = 3;  // used with ell_source = integer
  int s_max = 0;    // used with ell_source = angular
  int m_max = 0;
  EllSource ell_source = EllSource::integer;
  SpectrumCase spectrum_case = SpectrumCase::general;
  spectrum::EllConvention ell_convention = spectrum::EllConvention::effective;
  bool operator==(const SpectrumOptions&) const = default;
};

enum class PartitionMethod { direct, em, em_derived, em_paper, exact, em_series };

struct PartitionOptions {
  std::vector<double> alpha{1.0};
  std::vector<PartitionMethod> methods{PartitionMethod::direct, PartitionMethod::em};
  long cutoff = 0;
  int em_order = 2;
  partition::OneDVariant variant = partition::OneDVariant::derived;
  bool operator==(const PartitionOptions&) const = default;
};

struct SweepOptions {
  double alpha_min = 0.5;
  double alpha_max = 100.0;
  int points = 200;
  thermo::Spacing spacing = thermo::Spacing::log;
  thermo::ZMethod z_method = thermo::ZMethod::direct;
  std::optional<FigureId> figure;
  thermo::DerivativeScheme derivative = thermo::DerivativeScheme::analytic;
  double eta = thermo::kDefaultEta;
  double jump_threshold = 10.0;
  bool operator==(const SweepOptions&) const = default;
};

struct RunManifest {
  Subcommand subcommand = Subcommand::verify;
  spectrum::PotentialParams params;
  partition::Mode mode = partition::Mode::three_d;
  Format format = Format::csv;
  std::string out;  // empty means standard output
  SpectrumOptions spectrum;
  PartitionOptions partition;
  SweepOptions sweep;

  bool operator==(const RunManifest& o) const;
};

nlohmann::json to_json(const RunManifest& m);
/// Missing keys keep the defaults; unknown enum strings raise UsageError.
RunManifest manifest_from_json(const nlohmann::json& j, RunManifest base = {});
RunManifest load_manifest(const std::string& path);
void save_manifest(const RunManifest& m, const std::string& path);

std::string_view to_string(Subcommand v);
std::string_view to_string(Format v);
std::string_view to_string(EllSource v);
std::string_view to_string(SpectrumCase v);
std::string_view to_string(PartitionMethod v);
std::string_view to_string(spectrum::EllConvention v);
std::string_view to_string(thermo::Spacing v);
std::string_view to_string(thermo::ZMethod v);
std::string_view to_string(thermo::DerivativeScheme v);

Subcommand parse_subcommand(std::string_view s);
Format parse_format(std::string_view s);
partition::Mode parse_mode(std::string_view s);
EllSource parse_ell_source(std::string_view s);
SpectrumCase parse_spectrum_case(std::string_view s);
PartitionMethod parse_partition_method(std::string_view s);
std::vector<PartitionMethod> parse_method_list(std::string_view s);
std::vector<double> parse_alpha_list(std::string_view s);
partition::OneDVariant parse_variant(std::string_view s);
spectrum::EllConvention parse_ell_convention(std::string_view s);
thermo::Spacing parse_spacing(std::string_view s);
thermo::ZMethod parse_z_method(std::string_view s);
thermo::DerivativeScheme parse_derivative(std::string_view s);
FigureId parse_figure(std::string_view s);

}  // namespace ncstat::cli
