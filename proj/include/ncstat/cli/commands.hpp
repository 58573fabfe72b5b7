#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "ncstat/cli/dataset.hpp"
#include "ncstat/cli/manifest.hpp"

namespace ncstat::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitDomain = 3,
  kExitIo = 4,
};

struct CommandOutput {
  Table table;
  nlohmann::json meta;  // emitted only in JSON output
  std::string summary;  // human-readable; empty when there is nothing to report
  bool failed = false;
};

CommandOutput cmd_spectrum(const RunManifest& m);
CommandOutput cmd_partition(const RunManifest& m);
CommandOutput cmd_sweep(const RunManifest& m);
CommandOutput cmd_verify(const RunManifest& m);

/// Runs the manifest, writes data to `m.out` (or `out` when empty) and the
/// summary to `out` when data goes to a file, otherwise to `err`.
/// Errors are reported on `err`; the return value is an ExitCode.
int execute(const RunManifest& m, std::ostream& out, std::ostream& err);

}  // namespace ncstat::cli
