// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0
//
// Batch front-end: read a job specification, build the requested symmetry
// projectors and emit a machine-readable sector report.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "symproj/job.hpp"

int main(int argc, char** argv) {
  CLI::App app{"symproj: projection operators as functions of symmetry operators"};
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand("run", "execute a job specification file");
  std::string spec_path;
  symproj::JobOptions options;
  run->add_option("spec", spec_path, "job specification (JSON)")->required();
  run->add_flag("--oracle", options.oracle,
                "compare each projector against the eigendecomposition oracle");
  run->add_option("--dump-matrices", options.dump_dir,
                  "directory for the projector matrices (operator text format)");
  run->add_option("--tolerance", options.tolerance,
                  "residual threshold for the converged flag (default 1e-6)");
  run->add_option("--report", options.report_override,
                  "write the report here instead of the spec's outputs.report");

  CLI11_PARSE(app, argc, argv);

  try {
    const symproj::SectorReport report = symproj::run_job_file(spec_path, options);
    const std::string text = symproj::report_to_text(report);
    if (report.report_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(report.report_path);
      if (!out) {
        std::cerr << "error: cannot write report to " << report.report_path << "\n";
        return 2;
      }
      out << text;
      std::cout << "report written to " << report.report_path
                << (report.all_converged ? "" : " (with non-converged requests)") << "\n";
    }
    return report.all_converged ? 0 : 1;
  } catch (const symproj::JobValidationError& e) {
    std::cerr << "invalid job specification:\n";
    for (const std::string& issue : e.issues()) std::cerr << "  " << issue << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
