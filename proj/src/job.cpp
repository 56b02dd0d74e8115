// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#include "symproj/job.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "format17.hpp"
#include "symproj/models.hpp"

namespace symproj {

namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

JobValidationError::JobValidationError(std::vector<std::string> issues)
    : std::runtime_error("job validation failed:\n  " + join(issues, "\n  ")),
      issues_(std::move(issues)) {}

namespace {

// ---------------------------------------------------------------------------
// Source construction

struct OperatorEntry {
  Operator op;
  std::optional<SpectrumSpec> declared;
};

struct Workspace {
  std::string description;
  std::map<std::string, OperatorEntry> operators;
  std::optional<Operator> hamiltonian;
  Index dim = 0;
};

void add_spin_operators(Workspace& ws, int n_sites) {
  TotalSpinOperators ops = total_spin_operators(SpinSystem::make(n_sites));
  const SpectrumSpec axis = sz_total_spectrum(n_sites);
  ws.operators.insert({"Sx_total", {std::move(ops.sx), axis}});
  ws.operators.insert({"Sy_total", {std::move(ops.sy), axis}});
  ws.operators.insert({"Sz_total", {std::move(ops.sz), axis}});
  ws.operators.insert({"S2_total", {std::move(ops.s_squared), s_squared_spectrum(n_sites)}});
}

void add_hubbard_operators(Workspace& ws, int n_sites) {
  TotalSpinOperators ops = hubbard_spin_operators(n_sites);
  const SpectrumSpec axis = hubbard_sz_spectrum(n_sites);
  ws.operators.insert({"Sx_total", {std::move(ops.sx), axis}});
  ws.operators.insert({"Sy_total", {std::move(ops.sy), axis}});
  ws.operators.insert({"Sz_total", {std::move(ops.sz), axis}});
  ws.operators.insert(
      {"S2_total", {std::move(ops.s_squared), hubbard_s_squared_spectrum(n_sites)}});
  ws.operators.insert({"N", {hubbard_number_operator(n_sites), number_spectrum(2 * n_sites)}});
}

int require_int(const json& params, const std::string& key, int fallback, bool required,
                const std::string& path, std::vector<std::string>& issues) {
  if (!params.contains(key)) {
    if (required) issues.push_back(path + "." + key + ": required");
    return fallback;
  }
  if (!params.at(key).is_number_integer()) {
    issues.push_back(path + "." + key + ": must be an integer");
    return fallback;
  }
  return params.at(key).get<int>();
}

double require_number(const json& params, const std::string& key, double fallback, bool required,
                      const std::string& path, std::vector<std::string>& issues) {
  if (!params.contains(key)) {
    if (required) issues.push_back(path + "." + key + ": required");
    return fallback;
  }
  if (!params.at(key).is_number()) {
    issues.push_back(path + "." + key + ": must be a number");
    return fallback;
  }
  return params.at(key).get<double>();
}

std::optional<Workspace> build_source(const json& spec, std::vector<std::string>& issues) {
  if (!spec.contains("source") || !spec.at("source").is_object()) {
    issues.push_back("source: required object");
    return std::nullopt;
  }
  const json& source = spec.at("source");

  try {
    if (source.contains("operator_file")) {
      if (!source.at("operator_file").is_string()) {
        issues.push_back("source.operator_file: must be a string path");
        return std::nullopt;
      }
      const std::string path = source.at("operator_file").get<std::string>();
      Workspace ws;
      ws.description = "operator_file(" + path + ")";
      Operator op = load_operator(path);
      ws.dim = op.dim();
      ws.operators.insert({"O", {std::move(op), std::nullopt}});
      return ws;
    }

    if (!source.contains("model") || !source.at("model").is_string()) {
      issues.push_back("source.model: required string (or source.operator_file)");
      return std::nullopt;
    }
    const std::string model = source.at("model").get<std::string>();
    const json params = source.contains("params") ? source.at("params") : json::object();
    const std::size_t before = issues.size();
    Workspace ws;

    if (model == "spin_system") {
      const int n = require_int(params, "n_sites", 2, true, "source.params", issues);
      if (issues.size() > before) return std::nullopt;
      ws.description = "spin_system(n_sites=" + std::to_string(n) + ")";
      add_spin_operators(ws, n);
    } else if (model == "heisenberg_chain") {
      const int n = require_int(params, "n", 4, true, "source.params", issues);
      const double coupling = require_number(params, "J", 1.0, false, "source.params", issues);
      bool periodic = false;
      if (params.contains("periodic")) {
        if (!params.at("periodic").is_boolean()) {
          issues.push_back("source.params.periodic: must be a boolean");
        } else {
          periodic = params.at("periodic").get<bool>();
        }
      }
      if (issues.size() > before) return std::nullopt;
      ws.description = "heisenberg_chain(n=" + std::to_string(n) + ", J=" + detail::g17(coupling) +
                       ", periodic=" + (periodic ? "true" : "false") + ")";
      Operator h = heisenberg_chain(n, coupling, periodic);
      ws.hamiltonian = h;
      ws.operators.insert({"H", {std::move(h), std::nullopt}});
      add_spin_operators(ws, n);
    } else if (model == "fermion_system") {
      const int n = require_int(params, "n_modes", 2, true, "source.params", issues);
      if (issues.size() > before) return std::nullopt;
      ws.description = "fermion_system(n_modes=" + std::to_string(n) + ")";
      ws.operators.insert({"N", {number_operator(FermionSystem::make(n)), number_spectrum(n)}});
    } else if (model == "hubbard_model") {
      const int n = require_int(params, "n_sites", 2, true, "source.params", issues);
      const double t = require_number(params, "t", 1.0, false, "source.params", issues);
      const double u = require_number(params, "U", 0.0, false, "source.params", issues);
      if (issues.size() > before) return std::nullopt;
      ws.description = "hubbard_model(n_sites=" + std::to_string(n) + ", t=" + detail::g17(t) +
                       ", U=" + detail::g17(u) + ")";
      Operator h = hubbard_model(n, t, u);
      ws.hamiltonian = h;
      ws.operators.insert({"H", {std::move(h), std::nullopt}});
      add_hubbard_operators(ws, n);
    } else {
      issues.push_back("source.model: unknown model '" + model +
                       "' (available: spin_system, heisenberg_chain, fermion_system, "
                       "hubbard_model)");
      return std::nullopt;
    }
    ws.dim = ws.operators.begin()->second.op.dim();
    return ws;
  } catch (const std::exception& e) {
    issues.push_back("source: " + std::string(e.what()));
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Request validation

struct Request {
  std::string constructor;
  std::string op_name;
  double target = 0;
  double spacing = 0;
  int terms = 0;
  int nodes = 0;
  double rescale = 0;
  double radius = 0;
  double j = 0, m = 0;
  double cluster_tol = kClusterTol;
  std::string spectrum_mode;  // "", "declared" or "oracle"
  std::vector<Request> parts;
  std::string display;
};

constexpr const char* kConstructors[] = {"lagrange",         "fourier_equidistant",
                                         "cyclic_quadrature", "riesz",
                                         "angular_momentum",  "oracle",
                                         "composite"};

bool half_integer(double x) { return std::abs(2 * x - std::round(2 * x)) <= 1e-9; }

std::optional<Request> validate_request(const json& node, const std::string& path,
                                        const Workspace& ws, std::vector<std::string>& issues,
                                        bool allow_composite) {
  const std::size_t before = issues.size();
  if (!node.is_object()) {
    issues.push_back(path + ": must be an object");
    return std::nullopt;
  }
  Request req;
  if (!node.contains("constructor") || !node.at("constructor").is_string()) {
    issues.push_back(path + ".constructor: required string");
    return std::nullopt;
  }
  req.constructor = node.at("constructor").get<std::string>();
  bool known = false;
  for (const char* c : kConstructors) known |= req.constructor == c;
  if (!known) {
    issues.push_back(path + ".constructor: unknown '" + req.constructor +
                     "' (available: lagrange, fourier_equidistant, cyclic_quadrature, riesz, "
                     "angular_momentum, oracle, composite)");
    return std::nullopt;
  }

  if (node.contains("spectrum")) {
    if (!node.at("spectrum").is_string() ||
        (node.at("spectrum") != "declared" && node.at("spectrum") != "oracle")) {
      issues.push_back(path + ".spectrum: must be \"declared\" or \"oracle\"");
    } else {
      req.spectrum_mode = node.at("spectrum").get<std::string>();
    }
  }

  if (req.constructor == "composite") {
    if (!allow_composite) {
      issues.push_back(path + ".constructor: composite parts cannot nest");
      return std::nullopt;
    }
    if (!node.contains("parts") || !node.at("parts").is_array() || node.at("parts").empty()) {
      issues.push_back(path + ".parts: required non-empty array");
      return std::nullopt;
    }
    std::vector<std::string> part_names;
    std::size_t idx = 0;
    for (const json& part : node.at("parts")) {
      auto sub = validate_request(part, path + ".parts[" + std::to_string(idx) + "]", ws, issues,
                                  false);
      if (sub) {
        part_names.push_back(sub->display);
        req.parts.push_back(std::move(*sub));
      }
      ++idx;
    }
    if (issues.size() > before) return std::nullopt;
    req.display = "composite(" + join(part_names, " * ") + ")";
    return req;
  }

  // Single-operator constructors.
  if (!node.contains("operator") || !node.at("operator").is_string()) {
    issues.push_back(path + ".operator: required string");
    return std::nullopt;
  }
  req.op_name = node.at("operator").get<std::string>();
  const auto it = ws.operators.find(req.op_name);
  if (it == ws.operators.end()) {
    std::vector<std::string> names;
    for (const auto& [name, entry] : ws.operators) names.push_back(name);
    issues.push_back(path + ".operator: '" + req.op_name + "' not provided by this source (have: " +
                     join(names, ", ") + ")");
    return std::nullopt;
  }

  if (req.constructor == "angular_momentum") {
    req.j = require_number(node, "j", 0, true, path, issues);
    req.m = require_number(node, "m", 0, true, path, issues);
    req.nodes = require_int(node, "nodes", 32, false, path, issues);
    if (issues.size() > before) return std::nullopt;
    if (!half_integer(req.j) || req.j < 0 || !half_integer(req.m) ||
        std::abs(req.j - req.m - std::round(req.j - req.m)) > 1e-9 || std::abs(req.m) > req.j) {
      issues.push_back(path + ": (j, m) = (" + detail::g17(req.j) + ", " + detail::g17(req.m) +
                       ") is not a valid angular momentum pair");
    }
    if (req.nodes < 16) issues.push_back(path + ".nodes: need at least 16");
    if (req.op_name != "Sy_total") {
      issues.push_back(path + ".operator: angular_momentum expects the Sy_total generator");
    }
    if (ws.operators.find("Sz_total") == ws.operators.end()) {
      issues.push_back(path + ": source provides no Sz_total for the m-sector projector");
    }
    if (issues.size() > before) return std::nullopt;
    req.display = "angular_momentum(" + req.op_name + ", j=" + detail::g17(req.j) +
                  ", m=" + detail::g17(req.m) + ", nodes=" + std::to_string(req.nodes) + ")";
    return req;
  }

  req.target = require_number(node, "target", 0, true, path, issues);
  if (req.constructor == "fourier_equidistant") {
    req.spacing = require_number(node, "spacing", 0, true, path, issues);
    req.terms = require_int(node, "terms", 0, true, path, issues);
    if (req.spacing <= 0 && issues.size() == before) {
      issues.push_back(path + ".spacing: must be positive");
    }
    if (req.terms < 1 && issues.size() == before) {
      issues.push_back(path + ".terms: need at least one term");
    }
  } else if (req.constructor == "cyclic_quadrature") {
    req.nodes = require_int(node, "nodes", 0, true, path, issues);
    req.rescale = require_number(node, "rescale", 1.0, false, path, issues);
    if (req.nodes < 1 && issues.size() == before) issues.push_back(path + ".nodes: need at least one");
    if (req.rescale <= 0 && issues.size() == before) {
      issues.push_back(path + ".rescale: must be positive");
    }
  } else if (req.constructor == "riesz") {
    req.radius = require_number(node, "radius", 0, true, path, issues);
    req.nodes = require_int(node, "nodes", 64, false, path, issues);
    if (req.radius <= 0 && issues.size() == before) issues.push_back(path + ".radius: must be positive");
    if (req.nodes < 4 && issues.size() == before) issues.push_back(path + ".nodes: need at least four");
  } else if (req.constructor == "oracle") {
    req.cluster_tol = require_number(node, "cluster_tol", kClusterTol, false, path, issues);
    if (req.cluster_tol <= 0 && issues.size() == before) {
      issues.push_back(path + ".cluster_tol: must be positive");
    }
  }
  if (issues.size() > before) return std::nullopt;

  // With a declared spectrum at hand the target can be checked before any
  // numerics run.
  if (req.spectrum_mode != "oracle" && it->second.declared &&
      !it->second.declared->contains(req.target)) {
    issues.push_back(path + ".target: " + detail::g17(req.target) +
                     " is not in the declared spectrum of " + req.op_name);
    return std::nullopt;
  }

  std::string extras;
  if (req.constructor == "fourier_equidistant") {
    extras = ", spacing=" + detail::g17(req.spacing) + ", terms=" + std::to_string(req.terms);
  } else if (req.constructor == "cyclic_quadrature") {
    extras = ", nodes=" + std::to_string(req.nodes) + ", rescale=" + detail::g17(req.rescale);
  } else if (req.constructor == "riesz") {
    extras = ", radius=" + detail::g17(req.radius) + ", nodes=" + std::to_string(req.nodes);
  }
  req.display = req.constructor + "(" + req.op_name + ", target=" + detail::g17(req.target) +
                extras + ")";
  return req;
}

// ---------------------------------------------------------------------------
// Execution

SpectrumSpec resolve_spectrum(const Workspace& ws, const Request& req) {
  const OperatorEntry& entry = ws.operators.at(req.op_name);
  if (req.spectrum_mode != "oracle" && entry.declared) return *entry.declared;
  return oracle_spectrum(entry.op);
}

ProjectorReport build_projector(const Workspace& ws, const Request& req) {
  const Operator& op = ws.operators.at(req.op_name).op;
  if (req.constructor == "lagrange") {
    const SpectrumSpec spec = resolve_spectrum(ws, req);
    return lagrange_projector(op, spec, spec.index_of(req.target));
  }
  if (req.constructor == "fourier_equidistant") {
    return equidistant_fourier_projector(op, req.target, req.spacing, req.terms,
                                         resolve_spectrum(ws, req));
  }
  if (req.constructor == "cyclic_quadrature") {
    return cyclic_quadrature_projector(op, req.target, req.nodes, req.rescale,
                                       resolve_spectrum(ws, req));
  }
  if (req.constructor == "riesz") {
    return riesz_projector(op, resolve_spectrum(ws, req), req.target, req.radius, req.nodes);
  }
  if (req.constructor == "angular_momentum") {
    const OperatorEntry& jz = ws.operators.at("Sz_total");
    const SpectrumSpec jz_spec = (req.spectrum_mode != "oracle" && jz.declared)
                                     ? *jz.declared
                                     : oracle_spectrum(jz.op);
    return angular_momentum_sector_projector(op, jz.op, jz_spec, req.j, req.m, req.nodes);
  }
  if (req.constructor == "oracle") {
    return oracle_projector_report(op, req.target, req.cluster_tol);
  }
  throw std::logic_error("build_projector: unexpected constructor " + req.constructor);
}

bool converged_with(const ProjectorReport& r, double tol) {
  const double nearest = std::round(r.trace);
  bool ok = r.idempotency_residual <= tol && r.hermiticity_residual <= tol && nearest >= 0.0 &&
            std::abs(r.trace - nearest) <= tol;
  if (r.aliasing_residual && *r.aliasing_residual > 1e-8) ok = false;
  if (r.order_residual && *r.order_residual > 1e-10) ok = false;
  return ok;
}

void collect_source_names(const Request& req, std::vector<std::string>& names) {
  if (req.constructor == "composite") {
    for (const Request& part : req.parts) collect_source_names(part, names);
  } else if (req.constructor == "angular_momentum") {
    if (std::find(names.begin(), names.end(), "Sz_total") == names.end()) {
      names.push_back("Sz_total");
    }
    if (std::find(names.begin(), names.end(), "S2_total") == names.end()) {
      names.push_back("S2_total");
    }
  } else if (std::find(names.begin(), names.end(), req.op_name) == names.end()) {
    names.push_back(req.op_name);
  }
}

Operator oracle_counterpart(const Workspace& ws, const Request& req) {
  if (req.constructor == "composite") {
    Matrix prod = Matrix::Identity(ws.dim, ws.dim);
    for (const Request& part : req.parts) {
      prod = prod * oracle_counterpart(ws, part).entries();
    }
    return Operator(std::move(prod));
  }
  if (req.constructor == "angular_momentum") {
    const Operator p_sq =
        spectral_projector_oracle(ws.operators.at("S2_total").op, req.j * (req.j + 1));
    const Operator p_m = spectral_projector_oracle(ws.operators.at("Sz_total").op, req.m);
    return Operator(Matrix(p_sq.entries() * p_m.entries()));
  }
  return spectral_projector_oracle(ws.operators.at(req.op_name).op, req.target);
}

std::optional<double> sector_ground_energy(const Operator& projector, const Operator& h,
                                           long rank) {
  if (rank < 1) return std::nullopt;
  const Matrix sym = 0.5 * (projector.entries() + projector.entries().adjoint());
  const EigenSystem es = hermitian_eigensystem(Operator(sym, Hermiticity::Yes));
  std::vector<Index> range_cols;
  for (Index i = 0; i < sym.rows(); ++i) {
    if (es.eigenvalues(i) > 0.5) range_cols.push_back(i);
  }
  if (range_cols.empty()) return std::nullopt;
  Matrix q(sym.rows(), static_cast<Index>(range_cols.size()));
  for (std::size_t c = 0; c < range_cols.size(); ++c) q.col(c) = es.eigenvectors.col(range_cols[c]);
  const Matrix restricted = q.adjoint() * h.entries() * q;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (restricted + restricted.adjoint()));
  return solver.eigenvalues().minCoeff();
}

SectorEntry run_request(const Workspace& ws, const Request& req, const JobOptions& options) {
  SectorEntry entry;
  entry.name = req.display;
  try {
    ProjectorReport report = [&] {
      if (req.constructor != "composite") return build_projector(ws, req);
      std::vector<Operator> parts;
      for (const Request& part : req.parts) parts.push_back(build_projector(ws, part).matrix);
      return composite_projector(parts);
    }();

    entry.method = report.method;
    entry.trace = report.trace;
    entry.sector_dimension = std::lround(report.trace);
    entry.idempotency_residual = report.idempotency_residual;
    entry.hermiticity_residual = report.hermiticity_residual;
    entry.spectrum_source = report.spectrum_source;
    entry.trivial = report.trivial;
    entry.aliasing_residual = report.aliasing_residual;
    entry.order_residual = report.order_residual;
    entry.converged = converged_with(report, options.tolerance);

    std::vector<std::string> source_names;
    collect_source_names(req, source_names);
    double worst_comm = 0;
    for (const std::string& name : source_names) {
      worst_comm = std::max(
          worst_comm, commutator(report.matrix, ws.operators.at(name).op).frobenius_norm());
    }
    entry.commutator_residual = worst_comm;

    if (ws.hamiltonian && entry.converged && !entry.trivial) {
      entry.sector_ground_energy =
          sector_ground_energy(report.matrix, *ws.hamiltonian, entry.sector_dimension);
    }
    if (options.oracle) {
      const Operator oracle = oracle_counterpart(ws, req);
      entry.oracle_deviation = (report.matrix.entries() - oracle.entries()).norm();
    }
    entry.matrix = std::move(report.matrix);
  } catch (const std::exception& e) {
    entry.error = e.what();
    entry.converged = false;
  }
  return entry;
}

// ---------------------------------------------------------------------------
// Deterministic report rendering

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

const char* to_string(SpectrumSpec::Source source) {
  return source == SpectrumSpec::Source::Declared ? "declared" : "oracle";
}

}  // namespace

std::string report_to_text(const SectorReport& report) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"job\": \"" << escape(report.job_name) << "\",\n";
  out << "  \"source\": \"" << escape(report.source_description) << "\",\n";
  out << "  \"dim\": " << report.dim << ",\n";
  out << "  \"tolerance\": " << detail::g17(report.tolerance) << ",\n";
  out << "  \"oracle_comparison\": " << (report.oracle_comparison ? "true" : "false") << ",\n";
  out << "  \"all_converged\": " << (report.all_converged ? "true" : "false") << ",\n";
  out << "  \"requests\": [";
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const SectorEntry& e = report.entries[i];
    out << (i ? ",\n" : "\n") << "    {\n";
    out << "      \"name\": \"" << escape(e.name) << "\",\n";
    if (e.error) {
      out << "      \"error\": \"" << escape(*e.error) << "\",\n";
      out << "      \"converged\": false\n    }";
      continue;
    }
    out << "      \"method\": \"" << symproj::to_string(e.method) << "\",\n";
    out << "      \"trace\": " << detail::g17(e.trace) << ",\n";
    out << "      \"sector_dimension\": " << e.sector_dimension << ",\n";
    out << "      \"idempotency_residual\": " << detail::g17(e.idempotency_residual) << ",\n";
    out << "      \"hermiticity_residual\": " << detail::g17(e.hermiticity_residual) << ",\n";
    out << "      \"commutator_residual\": " << detail::g17(e.commutator_residual) << ",\n";
    out << "      \"spectrum_source\": \"" << to_string(e.spectrum_source) << "\",\n";
    if (e.aliasing_residual) {
      out << "      \"aliasing_residual\": " << detail::g17(*e.aliasing_residual) << ",\n";
    }
    if (e.order_residual) {
      out << "      \"order_residual\": " << detail::g17(*e.order_residual) << ",\n";
    }
    if (e.sector_ground_energy) {
      out << "      \"sector_ground_energy\": " << detail::g17(*e.sector_ground_energy) << ",\n";
    }
    if (e.oracle_deviation) {
      out << "      \"oracle_deviation\": " << detail::g17(*e.oracle_deviation) << ",\n";
    }
    if (!e.matrix_file.empty()) {
      out << "      \"matrix_file\": \"" << escape(e.matrix_file) << "\",\n";
    }
    out << "      \"trivial\": " << (e.trivial ? "true" : "false") << ",\n";
    out << "      \"converged\": " << (e.converged ? "true" : "false") << "\n    }";
  }
  out << "\n  ]\n}\n";
  return out.str();
}

SectorReport run_job(const std::string& spec_text, const JobOptions& options) {
  json spec;
  try {
    spec = json::parse(spec_text);
  } catch (const json::exception& e) {
    throw JobValidationError({std::string("spec: not valid JSON: ") + e.what()});
  }

  std::vector<std::string> issues;
  std::optional<Workspace> ws = build_source(spec, issues);

  std::vector<Request> requests;
  if (!spec.contains("requests") || !spec.at("requests").is_array() ||
      spec.at("requests").empty()) {
    issues.push_back("requests: required non-empty array");
  } else if (ws) {
    std::size_t idx = 0;
    for (const json& node : spec.at("requests")) {
      auto req =
          validate_request(node, "requests[" + std::to_string(idx) + "]", *ws, issues, true);
      if (req) requests.push_back(std::move(*req));
      ++idx;
    }
  }

  std::string report_path = options.report_override;
  std::string dump_dir = options.dump_dir;
  if (spec.contains("outputs")) {
    const json& outputs = spec.at("outputs");
    if (!outputs.is_object()) {
      issues.push_back("outputs: must be an object");
    } else {
      if (outputs.contains("report")) {
        if (!outputs.at("report").is_string()) {
          issues.push_back("outputs.report: must be a string path");
        } else if (report_path.empty()) {
          report_path = outputs.at("report").get<std::string>();
        }
      }
      if (outputs.contains("dump_matrices")) {
        if (!outputs.at("dump_matrices").is_string()) {
          issues.push_back("outputs.dump_matrices: must be a string path");
        } else if (dump_dir.empty()) {
          dump_dir = outputs.at("dump_matrices").get<std::string>();
        }
      }
    }
  }
  if (!issues.empty()) throw JobValidationError(std::move(issues));

  SectorReport report;
  report.job_name = spec.contains("name") && spec.at("name").is_string()
                        ? spec.at("name").get<std::string>()
                        : "job";
  report.source_description = ws->description;
  report.dim = ws->dim;
  report.tolerance = options.tolerance;
  report.oracle_comparison = options.oracle;
  report.report_path = report_path;

  for (const Request& req : requests) {
    report.entries.push_back(run_request(*ws, req, options));
  }

  if (!dump_dir.empty()) {
    std::filesystem::create_directories(dump_dir);
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
      SectorEntry& entry = report.entries[i];
      if (!entry.matrix) continue;
      entry.matrix_file = "request_" + std::to_string(i) + ".json";
      save_operator(*entry.matrix,
                    (std::filesystem::path(dump_dir) / entry.matrix_file).string());
    }
  }

  report.all_converged = !report.entries.empty();
  for (const SectorEntry& entry : report.entries) {
    report.all_converged = report.all_converged && entry.converged;
  }
  return report;
}

SectorReport run_job_file(const std::string& spec_path, const JobOptions& options) {
  std::ifstream f(spec_path);
  if (!f) throw JobValidationError({"spec: cannot open " + spec_path});
  std::ostringstream buf;
  buf << f.rdbuf();
  return run_job(buf.str(), options);
}

}  // namespace symproj
