#include "ncstat/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ncstat/errors.hpp"
#include "ncstat/partition.hpp"
#include "ncstat/spectrum.hpp"
#include "ncstat/thermo.hpp"
#include "ncstat/verify.hpp"

namespace ncstat::cli {

namespace {

using partition::Mode;

spectrum::SpecialCase to_special(SpectrumCase c) {
  switch (c) {
    case SpectrumCase::a2_only: return spectrum::SpecialCase::a2_only;
    case SpectrumCase::a3_only: return spectrum::SpecialCase::a3_only;
    default: return spectrum::SpecialCase::oscillator;
  }
}

void check_nonnegative(int v, const char* name) {
  if (v < 0) throw UsageError(std::string(name) + " must be >= 0");
}

const std::vector<std::string> kSpectrumColumns{"n", "s", "m", "ell", "Lambda", "L",
                                                "E_over_xi", "degeneracy", "status"};

}  // namespace

CommandOutput cmd_spectrum(const RunManifest& m) {
  m.params.validate();
  const auto& o = m.spectrum;
  check_nonnegative(o.n_max, "n_max");
  check_nonnegative(o.ell_max, "ell_max");
  check_nonnegative(o.s_max, "s_max");
  check_nonnegative(o.m_max, "m_max");

  CommandOutput res;
  res.table.columns = kSpectrumColumns;

  if (o.ell_source == EllSource::integer) {
    if (o.spectrum_case != SpectrumCase::general) {
      throw UsageError("case flags need the angular ell source");
    }
    for (int n = 0; n <= o.n_max; ++n) {
      for (int ell = 0; ell <= o.ell_max; ++ell) {
        const int n_prime = 2 * n + ell;
        res.table.rows.push_back({std::int64_t{n}, {}, {}, std::int64_t{ell}, {}, {},
                                  spectrum::reduced_energy(n, ell),
                                  std::int64_t{spectrum::degeneracy(n_prime)}, std::string("ok")});
      }
    }
  } else {
    for (int n = 0; n <= o.n_max; ++n) {
      for (int s = 0; s <= o.s_max; ++s) {
        for (int mm = 0; mm <= o.m_max; ++mm) {
          std::vector<Cell> row{std::int64_t{n}, std::int64_t{s}, std::int64_t{mm}};
          try {
            const spectrum::AngularSolution sol =
                o.spectrum_case == SpectrumCase::general
                    ? spectrum::angular_solution(m.params, s, mm)
                    : spectrum::special_case_angular(m.params, to_special(o.spectrum_case), s, mm);
            const double ell = o.ell_convention == spectrum::EllConvention::effective
                                   ? sol.ell_eff
                                   : double(sol.ell_integer);
            const double e_over_xi = spectrum::reduced_energy(n, ell);
            row.insert(row.end(), {ell, sol.Lambda, sol.L, e_over_xi, {}, std::string("ok")});
          } catch (const UsageError&) {
            throw;
          } catch (const std::exception& e) {
            row.insert(row.end(), {{}, {}, {}, {}, {}, std::string("error: ") + e.what()});
          }
          res.table.rows.push_back(std::move(row));
        }
      }
    }
  }
  return res;
}

namespace {

bool one_d_only(PartitionMethod meth) {
  return meth == PartitionMethod::em_derived || meth == PartitionMethod::em_paper ||
         meth == PartitionMethod::exact;
}

double evaluate(PartitionMethod meth, const RunManifest& m, double a) {
  const auto& o = m.partition;
  switch (meth) {
    case PartitionMethod::direct: {
      partition::PartitionSpec spec;
      spec.mode = m.mode;
      spec.alpha_bar = a;
      spec.cutoff = o.cutoff;
      spec.em_order = o.em_order;
      spec.variant = o.variant;
      return partition::partition_direct(spec).z;
    }
    case PartitionMethod::em:
      return m.mode == Mode::three_d ? partition::partition_em_3d(a).z
                                     : partition::partition_em_1d(a, o.variant).z;
    case PartitionMethod::em_derived:
      return partition::partition_em_1d(a, partition::OneDVariant::derived).z;
    case PartitionMethod::em_paper:
      return partition::partition_em_1d(a, partition::OneDVariant::paper_literal).z;
    case PartitionMethod::exact:
      return partition::partition_exact_1d(a).z;
    case PartitionMethod::em_series:
      return partition::partition_em_series(m.mode, a, o.em_order).z;
  }
  return NAN;
}

}  // namespace

CommandOutput cmd_partition(const RunManifest& m) {
  const auto& o = m.partition;
  if (o.alpha.empty()) throw UsageError("at least one alpha value is required");
  if (o.methods.empty()) throw UsageError("at least one method is required");
  if (o.cutoff < 0) throw UsageError("cutoff must be >= 0");
  for (double a : o.alpha) {
    if (!(a > 0.0) || !std::isfinite(a)) throw UsageError("alpha values must be finite and > 0");
  }
  for (auto meth : o.methods) {
    if (m.mode == Mode::three_d && one_d_only(meth)) {
      throw UsageError("method '" + std::string(to_string(meth)) + "' is only defined in 1d mode");
    }
  }

  CommandOutput res;
  auto& cols = res.table.columns;
  cols.push_back("alpha_bar");
  for (auto meth : o.methods) cols.push_back("Z_" + std::string(to_string(meth)));
  for (std::size_t i = 0; i < o.methods.size(); ++i) {
    for (std::size_t j = i + 1; j < o.methods.size(); ++j) {
      cols.push_back("reldiff_" + std::string(to_string(o.methods[i])) + "_" +
                     std::string(to_string(o.methods[j])));
    }
  }

  for (double a : o.alpha) {
    std::vector<double> z;
    for (auto meth : o.methods) z.push_back(evaluate(meth, m, a));
    std::vector<Cell> row{a};
    row.insert(row.end(), z.begin(), z.end());
    for (std::size_t i = 0; i < z.size(); ++i) {
      for (std::size_t j = i + 1; j < z.size(); ++j) row.push_back(std::abs(z[i] - z[j]) / std::abs(z[j]));
    }
    res.table.rows.push_back(std::move(row));
  }
  return res;
}

namespace {

std::string format_summary(const thermo::MonotonicitySummary& s, double c_bound,
                           const std::optional<thermo::ContinuityReport>& cont, std::size_t points) {
  std::ostringstream os;
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  os << "points: " << points << '\n'
     << "F_bar strictly decreasing: " << yes_no(s.f_decreasing) << '\n'
     << "U_bar strictly increasing: " << yes_no(s.u_increasing) << '\n'
     << "S_bar strictly increasing: " << yes_no(s.s_increasing) << '\n'
     << "C_bar non-decreasing: " << yes_no(s.c_nondecreasing) << '\n'
     << "C_bar max: " << format_real(s.c_max) << " (bound " << format_real(c_bound) << ", "
     << (s.c_max <= c_bound ? "within" : "exceeded") << ")\n";
  if (cont) {
    os << "C_bar continuity: max normalized jump " << format_real(cont->max_normalized_jump)
       << " at alpha_bar " << format_real(cont->at_alpha) << " (threshold "
       << format_real(cont->threshold) << ", " << (cont->passed ? "continuous" : "jump detected") << ")\n";
  } else {
    os << "C_bar continuity: skipped (needs at least " << thermo::kMinContinuityPoints << " points)\n";
  }
  return os.str();
}

}  // namespace

CommandOutput cmd_sweep(const RunManifest& m) {
  const auto& o = m.sweep;
  const bool one_d_panel = o.figure == FigureId::f5_one_d_panel;
  const Mode mode = one_d_panel ? Mode::one_d : m.mode;
  if (!(o.jump_threshold > 0.0)) throw UsageError("jump threshold must be > 0");

  thermo::SweepSpec spec;
  spec.grid = thermo::make_grid(o.alpha_min, o.alpha_max, o.points, o.spacing);
  spec.mode = mode;
  spec.z_method = o.z_method;
  spec.scheme = o.derivative;
  spec.eta = o.eta;
  spec.variant = m.partition.variant;
  const auto result = thermo::sweep(spec);

  FigureDataset data;
  data.figure = o.figure;
  data.columns = figure_columns(o.figure);
  for (const auto& p : result.points) {
    std::vector<double> row{p.alpha_bar};
    for (std::size_t c = 1; c < data.columns.size(); ++c) {
      const auto& name = data.columns[c];
      if (name == "Z") row.push_back(p.Z);
      else if (name == "F_bar") row.push_back(p.F_bar);
      else if (name == "U_bar") row.push_back(p.U_bar);
      else if (name == "S_bar") row.push_back(p.S_bar);
      else row.push_back(p.C_bar);
    }
    data.rows.push_back(std::move(row));
  }
  data.validate();

  CommandOutput res;
  res.table = data.to_table();
  res.meta["mode"] = partition::to_string(mode);
  res.meta["figure"] = o.figure ? nlohmann::json(to_string(*o.figure)) : nlohmann::json(nullptr);
  if (!result.summary) {
    res.summary = "summary skipped: single-point grid\n";
    res.meta["summary"] = nullptr;
    return res;
  }

  std::optional<thermo::ContinuityReport> cont;
  if (result.points.size() >= thermo::kMinContinuityPoints) {
    std::vector<double> c;
    for (const auto& p : result.points) c.push_back(p.C_bar);
    cont = thermo::continuity_scan(spec.grid, c, o.jump_threshold);
  }
  const double c_bound = (mode == Mode::three_d ? 3.0 : 1.0) + 1e-2;
  const auto& s = *result.summary;
  res.summary = format_summary(s, c_bound, cont, result.points.size());
  res.meta["summary"] = {{"F_bar_strictly_decreasing", s.f_decreasing},
                         {"U_bar_strictly_increasing", s.u_increasing},
                         {"S_bar_strictly_increasing", s.s_increasing},
                         {"C_bar_nondecreasing", s.c_nondecreasing},
                         {"C_bar_max", s.c_max},
                         {"C_bar_bound", c_bound}};
  if (cont) {
    res.meta["summary"]["continuity"] = {{"max_normalized_jump", cont->max_normalized_jump},
                                         {"at_alpha_bar", cont->at_alpha},
                                         {"threshold", cont->threshold},
                                         {"passed", cont->passed}};
  }
  return res;
}

CommandOutput cmd_verify(const RunManifest&) {
  const auto report = verify::run();
  CommandOutput res;
  res.table.columns = {"check", "status", "measured", "tolerance", "detail"};
  for (const auto& c : report.checks) {
    const std::string status = c.informational ? "info" : (c.passed ? "pass" : "fail");
    res.table.rows.push_back({c.name, status, c.measured, c.tolerance, c.detail});
  }
  res.summary = verify::format_report(report);
  res.failed = !report.all_passed();
  return res;
}

namespace {

CommandOutput dispatch(const RunManifest& m) {
  switch (m.subcommand) {
    case Subcommand::spectrum: return cmd_spectrum(m);
    case Subcommand::partition: return cmd_partition(m);
    case Subcommand::sweep: return cmd_sweep(m);
    case Subcommand::verify: return cmd_verify(m);
  }
  throw UsageError("unknown subcommand");
}

void emit(const RunManifest& m, const CommandOutput& res, std::ostream& os) {
  if (m.format == Format::csv) {
    write_csv(os, res.table);
    return;
  }
  nlohmann::json meta = res.meta;
  meta["manifest"] = to_json(m);
  write_json(os, res.table, meta);
}

}  // namespace

int execute(const RunManifest& m, std::ostream& out, std::ostream& err) {
  try {
    const CommandOutput res = dispatch(m);
    // Verify prints its report as the primary output in CSV mode.
    if (m.subcommand == Subcommand::verify && m.format == Format::csv && m.out.empty()) {
      out << res.summary;
      return res.failed ? kExitCheckFailed : kExitOk;
    }
    if (m.out.empty()) {
      emit(m, res, out);
      err << res.summary;
    } else {
      std::ostringstream buf;
      emit(m, res, buf);
      std::ofstream file(m.out, std::ios::binary);
      if (!file) throw IoError("cannot open output file '" + m.out + "'");
      file << buf.str();
      file.close();
      if (!file) throw IoError("write failed for output file '" + m.out + "'");
      out << res.summary;
    }
    return res.failed ? kExitCheckFailed : kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << " (suggested cutoff " << e.suggested_cutoff() << ")\n";
    return kExitDomain;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::out_of_range& e) {
    err << "range error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace ncstat::cli
