// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "symproj/core_ops.hpp"
#include "symproj/job.hpp"
#include "symproj/models.hpp"

using namespace symproj;

TEST_CASE("heisenberg job: lagrange middle sector") {
  const char* spec = R"({
    "name": "heisenberg4-sz0",
    "source": {"model": "heisenberg_chain", "params": {"n": 4, "J": 1.0, "periodic": true}},
    "requests": [
      {"constructor": "lagrange", "operator": "Sz_total", "target": 0.0}
    ]
  })";
  const SectorReport report = run_job(spec);
  REQUIRE(report.entries.size() == 1);
  const SectorEntry& e = report.entries[0];
  REQUIRE_FALSE(e.error.has_value());
  CHECK(e.sector_dimension == 6);  // C(4, 2)
  CHECK(e.converged);
  CHECK(e.spectrum_source == SpectrumSpec::Source::Declared);
  CHECK(e.commutator_residual <= 1e-9);
  REQUIRE(e.sector_ground_energy.has_value());
  // The singlet ground state of the periodic 4-chain lives in this sector.
  const EigenSystem sys = hermitian_eigensystem(heisenberg_chain(4, 1.0, true));
  CHECK(*e.sector_ground_energy == doctest::Approx(sys.eigenvalues(0)).epsilon(1e-10));
  CHECK(report.all_converged);
}

TEST_CASE("hubbard dimer job: composite half-filled Sz=0 sector") {
  const char* spec = R"({
    "name": "hubbard-dimer",
    "source": {"model": "hubbard_model", "params": {"n_sites": 2, "t": 1.0, "U": 4.0}},
    "requests": [
      {"constructor": "composite", "parts": [
        {"constructor": "lagrange", "operator": "N", "target": 2.0},
        {"constructor": "lagrange", "operator": "Sz_total", "target": 0.0}
      ]}
    ]
  })";
  const SectorReport report = run_job(spec);
  REQUIRE(report.entries.size() == 1);
  const SectorEntry& e = report.entries[0];
  REQUIRE_FALSE(e.error.has_value());
  CHECK(e.sector_dimension == 4);  // one up and one down electron on two sites
  CHECK(e.converged);
  CHECK_FALSE(e.trivial);
  REQUIRE(e.sector_ground_energy.has_value());
  CHECK(*e.sector_ground_energy == doctest::Approx(2.0 - std::sqrt(8.0)).epsilon(1e-10));
}

TEST_CASE("two-spin job: incompatible composite is trivial, not an error") {
  const char* spec = R"({
    "name": "trivial-pairing",
    "source": {"model": "spin_system", "params": {"n_sites": 2}},
    "requests": [
      {"constructor": "composite", "parts": [
        {"constructor": "lagrange", "operator": "S2_total", "target": 0.0},
        {"constructor": "lagrange", "operator": "Sz_total", "target": 1.0}
      ]}
    ]
  })";
  const SectorReport report = run_job(spec);
  REQUIRE(report.entries.size() == 1);
  const SectorEntry& e = report.entries[0];
  CHECK(e.trivial);
  CHECK(e.converged);
  CHECK(e.sector_dimension == 0);
  REQUIRE(e.matrix.has_value());
  CHECK(e.matrix->frobenius_norm() <= 1e-10);
  CHECK(report.all_converged);
}

TEST_CASE("sector dimensions over a complete label set sum to the dimension") {
  const char* spec = R"({
    "source": {"model": "spin_system", "params": {"n_sites": 3}},
    "requests": [
      {"constructor": "lagrange", "operator": "Sz_total", "target": -1.5},
      {"constructor": "lagrange", "operator": "Sz_total", "target": -0.5},
      {"constructor": "lagrange", "operator": "Sz_total", "target": 0.5},
      {"constructor": "lagrange", "operator": "Sz_total", "target": 1.5}
    ]
  })";
  const SectorReport report = run_job(spec);
  long total = 0;
  for (const SectorEntry& e : report.entries) total += e.sector_dimension;
  CHECK(total == report.dim);
}

TEST_CASE("reports are byte identical across reruns and carry oracle deviations") {
  const char* spec = R"({
    "name": "determinism",
    "source": {"model": "heisenberg_chain", "params": {"n": 4, "J": 1.0, "periodic": true}},
    "requests": [
      {"constructor": "fourier_equidistant", "operator": "Sz_total", "target": 0.0,
       "spacing": 1.0, "terms": 5},
      {"constructor": "cyclic_quadrature", "operator": "Sz_total", "target": 1.0, "nodes": 8},
      {"constructor": "riesz", "operator": "Sz_total", "target": 0.0, "radius": 0.5},
      {"constructor": "angular_momentum", "operator": "Sy_total", "j": 0.0, "m": 0.0},
      {"constructor": "oracle", "operator": "S2_total", "target": 2.0}
    ]
  })";
  JobOptions options;
  options.oracle = true;
  const SectorReport a = run_job(spec, options);
  const SectorReport b = run_job(spec, options);
  CHECK(report_to_text(a) == report_to_text(b));
  CHECK(a.all_converged);
  for (const SectorEntry& e : a.entries) {
    REQUIRE(e.oracle_deviation.has_value());
    CHECK(*e.oracle_deviation <= 1e-8);
  }
}

TEST_CASE("validation failures are collected before any numerics") {
  const char* spec = R"({
    "source": {"model": "heisenberg_chain", "params": {"n": 3}},
    "requests": [
      {"constructor": "lagrange", "operator": "Sz_total", "target": 0.25},
      {"constructor": "riesz", "operator": "Q", "target": 0.0, "radius": 0.5},
      {"constructor": "fourier_equidistant", "operator": "Sz_total", "target": 0.5,
       "spacing": -1.0, "terms": 3},
      {"constructor": "warp", "operator": "Sz_total", "target": 0.5}
    ]
  })";
  try {
    run_job(spec);
    FAIL("expected JobValidationError");
  } catch (const JobValidationError& e) {
    REQUIRE(e.issues().size() == 4);
    CHECK(e.issues()[0].find("requests[0].target") != std::string::npos);
    CHECK(e.issues()[1].find("requests[1].operator") != std::string::npos);
    CHECK(e.issues()[2].find("requests[2].spacing") != std::string::npos);
    CHECK(e.issues()[3].find("requests[3].constructor") != std::string::npos);
  }
}

TEST_CASE("numeric failures stay per-request") {
  // The riesz circle of radius 2 swallows the neighbouring eigenvalues; the
  // error is recorded for that request while the other one still runs.
  const char* spec = R"({
    "source": {"model": "spin_system", "params": {"n_sites": 2}},
    "requests": [
      {"constructor": "riesz", "operator": "Sz_total", "target": 0.0, "radius": 2.0},
      {"constructor": "lagrange", "operator": "Sz_total", "target": 0.0}
    ]
  })";
  const SectorReport report = run_job(spec);
  REQUIRE(report.entries.size() == 2);
  REQUIRE(report.entries[0].error.has_value());
  CHECK(report.entries[0].error->find("encloses") != std::string::npos);
  CHECK_FALSE(report.entries[0].converged);
  CHECK(report.entries[1].converged);
  CHECK_FALSE(report.all_converged);
}

TEST_CASE("aliasing marks the job as not fully converged") {
  const char* spec = R"({
    "source": {"model": "spin_system", "params": {"n_sites": 2}},
    "requests": [
      {"constructor": "fourier_equidistant", "operator": "Sz_total", "target": 1.0,
       "spacing": 1.0, "terms": 2}
    ]
  })";
  const SectorReport report = run_job(spec);
  CHECK_FALSE(report.all_converged);
  REQUIRE(report.entries[0].aliasing_residual.has_value());
  CHECK(*report.entries[0].aliasing_residual > 0.5);
}

TEST_CASE("matrix dumps round-trip through the operator text format") {
  const char* spec = R"({
    "source": {"model": "spin_system", "params": {"n_sites": 2}},
    "requests": [
      {"constructor": "lagrange", "operator": "S2_total", "target": 0.0}
    ]
  })";
  const std::string dir = (std::filesystem::temp_directory_path() / "symproj_dump_test").string();
  std::filesystem::remove_all(dir);
  JobOptions options;
  options.dump_dir = dir;
  const SectorReport report = run_job(spec, options);
  REQUIRE(report.entries[0].matrix_file == "request_0.json");
  const Operator loaded = load_operator(dir + "/request_0.json");
  CHECK((loaded.entries() - report.entries[0].matrix->entries()).norm() == 0.0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("operator file sources work end to end") {
  const TotalSpinOperators ops = total_spin_operators(SpinSystem::make(2));
  const std::string path =
      (std::filesystem::temp_directory_path() / "symproj_sz_source.json").string();
  save_operator(ops.sz, path);

  const std::string spec = std::string(R"({
    "source": {"operator_file": ")") + path + R"("},
    "requests": [
      {"constructor": "lagrange", "operator": "O", "target": 0.0}
    ]
  })";
  const SectorReport report = run_job(spec);
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].sector_dimension == 2);
  CHECK(report.entries[0].spectrum_source == SpectrumSpec::Source::Oracle);
  std::remove(path.c_str());
}
