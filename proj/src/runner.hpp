#pragma once

#include "config.hpp"

namespace lvx {

struct RunResult {
  int exit_code = 0;
  std::string summary;      // human-readable outcome, one line per stage
  std::string output_dir;
  std::string report_path;  // empty on failure
};

// Full pipeline: exhaustion solves for the requested model(s), sandwich
// checks, decay fits, field dumps, series files, report.json. Timings go
// to a separate timings.json so the primary artifacts are byte-stable.
// Failures are written to error.json with the failing stage and reflected
// in the exit code; this function throws only on I/O errors while
// reporting a failure.
RunResult run(const RunConfig& cfg);

struct VerifyResult {
  int checks = 0;
  int failures = 0;
  std::string table;  // one PASS/FAIL line per property
};

// Property battery on small instances: Green identity, maximum-principle
// probes, GNS/isoperimetric sampling, barrier margins, dense-oracle
// comparisons. No artifacts are written.
VerifyResult verify(const RunConfig& cfg);

}  // namespace lvx
