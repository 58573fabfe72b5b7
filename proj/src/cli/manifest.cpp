#include "ncstat/cli/manifest.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "ncstat/errors.hpp"

namespace ncstat::cli {

namespace {

template <class E, std::size_t N>
using Names = std::array<std::pair<E, std::string_view>, N>;

constexpr Names<Subcommand, 4> kSubcommands{{{Subcommand::spectrum, "spectrum"},
                                             {Subcommand::partition, "partition"},
                                             {Subcommand::sweep, "sweep"},
                                             {Subcommand::verify, "verify"}}};
constexpr Names<Format, 2> kFormats{{{Format::csv, "csv"}, {Format::json, "json"}}};
constexpr Names<partition::Mode, 2> kModes{{{partition::Mode::three_d, "3d"}, {partition::Mode::one_d, "1d"}}};
constexpr Names<EllSource, 2> kEllSources{{{EllSource::integer, "integer"}, {EllSource::angular, "angular"}}};
constexpr Names<SpectrumCase, 4> kCases{{{SpectrumCase::general, "general"},
                                         {SpectrumCase::a2_only, "a2_only"},
                                         {SpectrumCase::a3_only, "a3_only"},
                                         {SpectrumCase::oscillator, "oscillator"}}};
constexpr Names<PartitionMethod, 6> kMethods{{{PartitionMethod::direct, "direct"},
                                              {PartitionMethod::em, "em"},
                                              {PartitionMethod::em_derived, "em_derived"},
                                              {PartitionMethod::em_paper, "em_paper"},
                                              {PartitionMethod::exact, "exact"},
                                              {PartitionMethod::em_series, "em_series"}}};
constexpr Names<partition::OneDVariant, 2> kVariants{
    {{partition::OneDVariant::derived, "derived"}, {partition::OneDVariant::paper_literal, "paper"}}};
constexpr Names<spectrum::EllConvention, 2> kConventions{
    {{spectrum::EllConvention::effective, "effective"}, {spectrum::EllConvention::integer, "integer"}}};
constexpr Names<thermo::Spacing, 2> kSpacings{{{thermo::Spacing::linear, "lin"}, {thermo::Spacing::log, "log"}}};
constexpr Names<thermo::ZMethod, 3> kZMethods{
    {{thermo::ZMethod::direct, "direct"}, {thermo::ZMethod::euler_maclaurin, "em"}, {thermo::ZMethod::exact, "exact"}}};
constexpr Names<thermo::DerivativeScheme, 2> kSchemes{
    {{thermo::DerivativeScheme::analytic, "analytic"}, {thermo::DerivativeScheme::central_difference, "fd"}}};

template <class E, std::size_t N>
std::string_view name_of(const Names<E, N>& names, E v) {
  for (const auto& [e, s] : names) {
    if (e == v) return s;
  }
  return "?";
}

template <class E, std::size_t N>
E value_of(const Names<E, N>& names, std::string_view s, std::string_view what) {
  for (const auto& [e, n] : names) {
    if (n == s) return e;
  }
  std::string msg = "invalid " + std::string(what) + " '" + std::string(s) + "' (expected one of:";
  for (const auto& [e, n] : names) msg += " " + std::string(n);
  throw UsageError(msg + ")");
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto pos = s.find(',', start);
    const auto end = pos == std::string_view::npos ? s.size() : pos;
    if (end > start) out.push_back(s.substr(start, end - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
void read(const nlohmann::json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("manifest field '") + key + "': " + e.what());
  }
}

template <class E, std::size_t N>
void read_enum(const nlohmann::json& j, const char* key, const Names<E, N>& names, E& out) {
  if (!j.contains(key)) return;
  std::string s;
  read(j, key, s);
  out = value_of(names, s, key);
}

}  // namespace

std::string_view to_string(Subcommand v) { return name_of(kSubcommands, v); }
std::string_view to_string(Format v) { return name_of(kFormats, v); }
std::string_view to_string(EllSource v) { return name_of(kEllSources, v); }
std::string_view to_string(SpectrumCase v) { return name_of(kCases, v); }
std::string_view to_string(PartitionMethod v) { return name_of(kMethods, v); }
std::string_view to_string(spectrum::EllConvention v) { return name_of(kConventions, v); }
std::string_view to_string(thermo::Spacing v) { return name_of(kSpacings, v); }
std::string_view to_string(thermo::ZMethod v) { return name_of(kZMethods, v); }
std::string_view to_string(thermo::DerivativeScheme v) { return name_of(kSchemes, v); }

Subcommand parse_subcommand(std::string_view s) { return value_of(kSubcommands, s, "subcommand"); }
Format parse_format(std::string_view s) { return value_of(kFormats, s, "format"); }
partition::Mode parse_mode(std::string_view s) { return value_of(kModes, s, "mode"); }
EllSource parse_ell_source(std::string_view s) { return value_of(kEllSources, s, "ell source"); }
SpectrumCase parse_spectrum_case(std::string_view s) { return value_of(kCases, s, "case"); }
PartitionMethod parse_partition_method(std::string_view s) { return value_of(kMethods, s, "method"); }
partition::OneDVariant parse_variant(std::string_view s) { return value_of(kVariants, s, "variant"); }
spectrum::EllConvention parse_ell_convention(std::string_view s) {
  return value_of(kConventions, s, "ell convention");
}
thermo::Spacing parse_spacing(std::string_view s) { return value_of(kSpacings, s, "spacing"); }
thermo::ZMethod parse_z_method(std::string_view s) { return value_of(kZMethods, s, "z method"); }
thermo::DerivativeScheme parse_derivative(std::string_view s) {
  return value_of(kSchemes, s, "derivative scheme");
}

FigureId parse_figure(std::string_view s) {
  if (auto f = figure_from_string(s)) return *f;
  throw UsageError("invalid figure '" + std::string(s) + "' (expected one of: f1 f2 f3 f4 f5)");
}

std::vector<PartitionMethod> parse_method_list(std::string_view s) {
  std::vector<PartitionMethod> out;
  for (auto tok : split_commas(s)) out.push_back(parse_partition_method(tok));
  if (out.empty()) throw UsageError("empty method list");
  return out;
}

std::vector<double> parse_alpha_list(std::string_view s) {
  std::vector<double> out;
  for (auto tok : split_commas(s)) {
    double v = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
      throw UsageError("invalid alpha value '" + std::string(tok) + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty alpha list");
  return out;
}

bool RunManifest::operator==(const RunManifest& o) const {
  return subcommand == o.subcommand && params.a1 == o.params.a1 && params.a2 == o.params.a2 &&
         params.a3 == o.params.a3 && params.mass == o.params.mass && params.hbar == o.params.hbar &&
         mode == o.mode && format == o.format && out == o.out && spectrum == o.spectrum &&
         partition == o.partition && sweep == o.sweep;
}

nlohmann::json to_json(const RunManifest& m) {
  nlohmann::json j;
  j["subcommand"] = to_string(m.subcommand);
  j["params"] = {{"a1", m.params.a1},
                 {"a2", m.params.a2},
                 {"a3", m.params.a3},
                 {"mass", m.params.mass},
                 {"hbar", m.params.hbar}};
  j["mode"] = partition::to_string(m.mode);
  j["format"] = to_string(m.format);
  j["out"] = m.out;

  const auto& sp = m.spectrum;
  j["spectrum"] = {{"n_max", sp.n_max},
                   {"ell_max", sp.ell_max},
                   {"s_max", sp.s_max},
                   {"m_max", sp.m_max},
                   {"ell_source", to_string(sp.ell_source)},
                   {"case", to_string(sp.spectrum_case)},
                   {"ell_convention", to_string(sp.ell_convention)}};

  const auto& pp = m.partition;
  nlohmann::json methods = nlohmann::json::array();
  for (auto meth : pp.methods) methods.push_back(to_string(meth));
  j["partition"] = {{"alpha", pp.alpha},
                    {"methods", methods},
                    {"cutoff", pp.cutoff},
                    {"em_order", pp.em_order},
                    {"variant", partition::to_string(pp.variant)}};

  const auto& sw = m.sweep;
  j["sweep"] = {{"alpha_min", sw.alpha_min},
                {"alpha_max", sw.alpha_max},
                {"points", sw.points},
                {"spacing", to_string(sw.spacing)},
                {"z_method", to_string(sw.z_method)},
                {"figure", sw.figure ? nlohmann::json(to_string(*sw.figure)) : nlohmann::json(nullptr)},
                {"derivative", to_string(sw.derivative)},
                {"eta", sw.eta},
                {"jump_threshold", sw.jump_threshold}};
  return j;
}

RunManifest manifest_from_json(const nlohmann::json& j, RunManifest m) {
  if (!j.is_object()) throw UsageError("manifest must be a JSON object");
  read_enum(j, "subcommand", kSubcommands, m.subcommand);
  if (j.contains("params")) {
    const auto& p = j.at("params");
    read(p, "a1", m.params.a1);
    read(p, "a2", m.params.a2);
    read(p, "a3", m.params.a3);
    read(p, "mass", m.params.mass);
    read(p, "hbar", m.params.hbar);
  }
  read_enum(j, "mode", kModes, m.mode);
  read_enum(j, "format", kFormats, m.format);
  read(j, "out", m.out);

  if (j.contains("spectrum")) {
    const auto& s = j.at("spectrum");
    read(s, "n_max", m.spectrum.n_max);
    read(s, "ell_max", m.spectrum.ell_max);
    read(s, "s_max", m.spectrum.s_max);
    read(s, "m_max", m.spectrum.m_max);
    read_enum(s, "ell_source", kEllSources, m.spectrum.ell_source);
    read_enum(s, "case", kCases, m.spectrum.spectrum_case);
    read_enum(s, "ell_convention", kConventions, m.spectrum.ell_convention);
  }
  if (j.contains("partition")) {
    const auto& p = j.at("partition");
    read(p, "alpha", m.partition.alpha);
    if (p.contains("methods")) {
      std::vector<std::string> names;
      read(p, "methods", names);
      m.partition.methods.clear();
      for (const auto& n : names) m.partition.methods.push_back(parse_partition_method(n));
    }
    read(p, "cutoff", m.partition.cutoff);
    read(p, "em_order", m.partition.em_order);
    read_enum(p, "variant", kVariants, m.partition.variant);
  }
  if (j.contains("sweep")) {
    const auto& s = j.at("sweep");
    read(s, "alpha_min", m.sweep.alpha_min);
    read(s, "alpha_max", m.sweep.alpha_max);
    read(s, "points", m.sweep.points);
    read_enum(s, "spacing", kSpacings, m.sweep.spacing);
    read_enum(s, "z_method", kZMethods, m.sweep.z_method);
    if (s.contains("figure")) {
      if (s.at("figure").is_null()) {
        m.sweep.figure.reset();
      } else {
        std::string f;
        read(s, "figure", f);
        m.sweep.figure = parse_figure(f);
      }
    }
    read_enum(s, "derivative", kSchemes, m.sweep.derivative);
    read(s, "eta", m.sweep.eta);
    read(s, "jump_threshold", m.sweep.jump_threshold);
  }
  return m;
}

RunManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("manifest '" + path + "' is not valid JSON: " + e.what());
  }
  return manifest_from_json(j);
}

void save_manifest(const RunManifest& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write manifest '" + path + "'");
  out << to_json(m).dump(2) << '\n';
  if (!out) throw IoError("write failed for manifest '" + path + "'");
}

}  // namespace ncstat::cli
