// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symproj/projector.hpp"

namespace symproj {

/// All field-level problems found while validating a job specification,
/// reported before any numerics run.
class JobValidationError : public std::runtime_error {
public:
  explicit JobValidationError(std::vector<std::string> issues);
  const std::vector<std::string>& issues() const { return issues_; }

private:
  std::vector<std::string> issues_;
};

struct JobOptions {
  bool oracle = false;           ///< add side-by-side oracle deviations
  std::string dump_dir;          ///< non-empty: write projector matrices here
  double tolerance = 1e-6;       ///< residual threshold for the converged flag
  std::string report_override;   ///< non-empty: report destination override
};

/// One projector request evaluated: diagnostics plus the matrix itself.
struct SectorEntry {
  std::string name;
  ProjectorMethod method;
  double trace = 0;
  long sector_dimension = 0;
  double idempotency_residual = 0;
  double hermiticity_residual = 0;
  double commutator_residual = 0;  ///< max ||[P, O]|| over the source operators
  SpectrumSpec::Source spectrum_source = SpectrumSpec::Source::Declared;
  bool converged = false;
  bool trivial = false;
  std::optional<double> aliasing_residual;
  std::optional<double> order_residual;
  std::optional<double> sector_ground_energy;  ///< lowest eigenvalue of P H P in the sector
  std::optional<double> oracle_deviation;
  std::optional<std::string> error;  ///< set when the request failed outright
  std::optional<Operator> matrix;    ///< absent when the request failed
  std::string matrix_file;           ///< set when dumped
};

struct SectorReport {
  std::string job_name;
  std::string source_description;
  Index dim = 0;
  double tolerance = 1e-6;
  bool oracle_comparison = false;
  std::vector<SectorEntry> entries;
  bool all_converged = false;
  std::string report_path;  ///< resolved destination; empty means stdout only
};

/// Executes a job specification (JSON text). Validation problems throw
/// JobValidationError before any numerics; per-request numeric failures are
/// recorded in the report instead of thrown.
SectorReport run_job(const std::string& spec_text, const JobOptions& options = {});
SectorReport run_job_file(const std::string& spec_path, const JobOptions& options = {});

/// Deterministic JSON rendering with a stable key order and 17-digit floats:
/// equal reports serialize byte-identically.
std::string report_to_text(const SectorReport& report);

}  // namespace symproj
