// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#include "symproj/projector.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "format17.hpp"
#include "symproj/quadrature.hpp"

namespace symproj {

namespace {

void require_hermitian(const Operator& o, const char* context) {
  const double v = o.hermiticity_violation();
  if (v > 1e-10) {
    throw std::invalid_argument(std::string(context) + ": operator not Hermitian, max|A - A^dag| = " +
                                detail::g17(v));
  }
}

ProjectorReport make_report(Matrix p, ProjectorMethod method, SpectrumSpec::Source source,
                            std::optional<double> aliasing = std::nullopt,
                            std::optional<double> order = std::nullopt) {
  Operator op(std::move(p));
  const Matrix& m = op.entries();
  const double idem = (m * m - m).norm();
  const double herm = (m - m.adjoint()).norm();
  const double trace = m.trace().real();
  const double nearest = std::round(trace);
  bool converged = idem <= 1e-6 && herm <= 1e-6 && nearest >= 0.0 &&
                   std::abs(trace - nearest) <= 1e-6;
  if (aliasing && *aliasing > 1e-8) converged = false;
  if (order && *order > 1e-10) converged = false;
  const bool trivial = m.norm() <= 1e-10;
  return ProjectorReport{std::move(op), idem,      herm,    trace,   method,
                         source,        converged, trivial, aliasing, order};
}

}  // namespace

const char* to_string(ProjectorMethod method) {
  switch (method) {
    case ProjectorMethod::Lagrange: return "lagrange";
    case ProjectorMethod::FourierEquidistant: return "fourier_equidistant";
    case ProjectorMethod::CyclicQuadrature: return "cyclic_quadrature";
    case ProjectorMethod::Riesz: return "riesz";
    case ProjectorMethod::GroupCharacter: return "group_character";
    case ProjectorMethod::AngularMomentum: return "angular_momentum";
    case ProjectorMethod::Composite: return "composite";
    case ProjectorMethod::Oracle: return "oracle";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Character tables and group representations

CharacterTable CharacterTable::make(std::vector<Irrep> irreps, std::size_t group_order,
                                    bool complete) {
  if (irreps.empty() || group_order == 0) {
    throw std::invalid_argument("CharacterTable: empty table");
  }
  std::set<std::string> labels;
  std::size_t dim_sq = 0;
  for (const Irrep& irrep : irreps) {
    if (!labels.insert(irrep.label).second) {
      throw std::invalid_argument("CharacterTable: duplicate irrep label '" + irrep.label + "'");
    }
    if (irrep.dimension < 1) {
      throw std::invalid_argument("CharacterTable: irrep '" + irrep.label +
                                  "' has non-positive dimension");
    }
    if (irrep.characters.size() != group_order) {
      throw std::invalid_argument("CharacterTable: irrep '" + irrep.label + "' has " +
                                  std::to_string(irrep.characters.size()) +
                                  " characters for group order " + std::to_string(group_order));
    }
    dim_sq += static_cast<std::size_t>(irrep.dimension) * irrep.dimension;
  }
  for (std::size_t a = 0; a < irreps.size(); ++a) {
    for (std::size_t b = 0; b < irreps.size(); ++b) {
      Complex inner(0, 0);
      for (std::size_t k = 0; k < group_order; ++k) {
        inner += std::conj(irreps[a].characters[k]) * irreps[b].characters[k];
      }
      const Complex expected = a == b ? Complex(double(group_order), 0) : Complex(0, 0);
      if (std::abs(inner - expected) > 1e-10) {
        throw std::invalid_argument("CharacterTable: row orthogonality violated between '" +
                                    irreps[a].label + "' and '" + irreps[b].label + "' (" +
                                    detail::g17(std::abs(inner - expected)) + ")");
      }
    }
  }
  if (complete && dim_sq != group_order) {
    throw std::invalid_argument("CharacterTable: complete table must satisfy sum d^2 = |G|, got " +
                                std::to_string(dim_sq) + " vs " + std::to_string(group_order));
  }
  CharacterTable t;
  t.irreps_ = std::move(irreps);
  t.group_order_ = group_order;
  t.complete_ = complete;
  return t;
}

const Irrep& CharacterTable::find(const std::string& label) const {
  for (const Irrep& irrep : irreps_) {
    if (irrep.label == label) return irrep;
  }
  throw std::invalid_argument("CharacterTable: unknown irrep label '" + label + "'");
}

CharacterTable builtin_character_table(const std::string& name) {
  if (name.size() == 2 && name[0] == 'Z' && name[1] >= '2' && name[1] <= '8') {
    const int n = name[1] - '0';
    std::vector<Irrep> irreps;
    for (int p = 0; p < n; ++p) {
      Irrep irrep{"k" + std::to_string(p), 1, {}};
      for (int m = 0; m < n; ++m) {
        irrep.characters.push_back(std::exp(Complex(0, 2 * M_PI * p * m / n)));
      }
      irreps.push_back(std::move(irrep));
    }
    return CharacterTable::make(std::move(irreps), n, true);
  }
  if (name == "S3") {
    // Elements ordered e, (01), (02), (12), (012), (021).
    std::vector<Irrep> irreps{
        {"trivial", 1, {1, 1, 1, 1, 1, 1}},
        {"sign", 1, {1, -1, -1, -1, 1, 1}},
        {"standard", 2, {2, 0, 0, 0, -1, -1}},
    };
    return CharacterTable::make(std::move(irreps), 6, true);
  }
  throw std::invalid_argument("builtin_character_table: unknown table '" + name +
                              "' (available: Z2..Z8, S3)");
}

GroupRep GroupRep::make(std::vector<Operator> elements, std::vector<std::string> element_labels,
                        CharacterTable table) {
  if (elements.empty()) throw std::invalid_argument("GroupRep: no elements");
  if (element_labels.size() != elements.size() || table.group_order() != elements.size()) {
    throw std::invalid_argument("GroupRep: element/label/table size mismatch");
  }
  const Index dim = elements.front().dim();
  for (const Operator& e : elements) require_same_dim(elements.front(), e, "GroupRep");

  constexpr double tol = 1e-10;
  const auto match = [&](const Matrix& m) -> int {
    for (std::size_t k = 0; k < elements.size(); ++k) {
      if ((m - elements[k].entries()).norm() <= tol) return static_cast<int>(k);
    }
    return -1;
  };

  bool has_identity = false;
  for (const Operator& e : elements) {
    if ((e.entries() - Matrix::Identity(dim, dim)).norm() <= tol) has_identity = true;
  }
  if (!has_identity) throw std::invalid_argument("GroupRep: no identity element");

  for (std::size_t i = 0; i < elements.size(); ++i) {
    bool has_inverse = false;
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const Matrix prod = elements[i].entries() * elements[j].entries();
      if (match(prod) < 0) {
        throw std::invalid_argument("GroupRep: product of elements " + std::to_string(i) + " and " +
                                    std::to_string(j) + " is not in the list (closure violated)");
      }
      if ((prod - Matrix::Identity(dim, dim)).norm() <= tol) has_inverse = true;
    }
    if (!has_inverse) {
      throw std::invalid_argument("GroupRep: element " + std::to_string(i) + " has no inverse");
    }
  }
  return GroupRep(std::move(elements), std::move(element_labels), std::move(table));
}

// ---------------------------------------------------------------------------
// Constructors

ProjectorReport lagrange_projector(const Operator& o, const SpectrumSpec& spectrum,
                                   std::size_t target_index) {
  require_hermitian(o, "lagrange_projector");
  if (target_index >= spectrum.size()) {
    throw std::invalid_argument("lagrange_projector: target index " +
                                std::to_string(target_index) + " out of range for " +
                                std::to_string(spectrum.size()) + " spectrum values");
  }
  spectrum.validate_against_dim(o.dim());
  const auto& values = spectrum.values();
  const double target = values[target_index];
  const Index n = o.dim();
  Matrix p = Matrix::Identity(n, n);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k == target_index) continue;
    p = p * ((o.entries() - values[k] * Matrix::Identity(n, n)) / (target - values[k]));
  }
  return make_report(std::move(p), ProjectorMethod::Lagrange, spectrum.source());
}

ProjectorReport lagrange_projector(const Operator& o, double target) {
  const SpectrumSpec spectrum = oracle_spectrum(o);
  return lagrange_projector(o, spectrum, spectrum.index_of(target));
}

namespace {

/// Largest scalar orthogonality defect of the discrete exponential sum over
/// the non-target spectrum values.
double exponential_sum_defect(const SpectrumSpec& spectrum, double target, double unit, int terms,
                              int first_term) {
  double worst = 0.0;
  for (double v : spectrum.values()) {
    if (std::abs(v - target) <= kClusterTol) continue;
    Complex sum(0, 0);
    for (int k = first_term; k < first_term + terms; ++k) {
      sum += std::exp(Complex(0, 2 * M_PI * k * (v - target) / (unit * terms)));
    }
    worst = std::max(worst, std::abs(sum) / terms);
  }
  return worst;
}

}  // namespace

ProjectorReport equidistant_fourier_projector(const Operator& o, double target, double spacing,
                                              int terms,
                                              const std::optional<SpectrumSpec>& spectrum) {
  require_hermitian(o, "equidistant_fourier_projector");
  if (spacing <= 0) throw std::invalid_argument("equidistant_fourier_projector: spacing must be positive");
  if (terms < 1) throw std::invalid_argument("equidistant_fourier_projector: need at least one term");

  std::optional<double> aliasing;
  SpectrumSpec::Source source = SpectrumSpec::Source::Declared;
  if (spectrum) {
    spectrum->validate_against_dim(o.dim());
    if (!spectrum->contains(target)) {
      throw std::invalid_argument("equidistant_fourier_projector: target " + detail::g17(target) +
                                  " not in the supplied spectrum");
    }
    aliasing = exponential_sum_defect(*spectrum, target, spacing, terms, 1);
    source = spectrum->source();
  }

  const Index n = o.dim();
  const Operator shifted(Matrix(o.entries() - target * Matrix::Identity(n, n)));
  Matrix p = Matrix::Zero(n, n);
  for (int k = 1; k <= terms; ++k) {
    p += matrix_exponential(shifted, Complex(0, 2 * M_PI * k / (spacing * terms))).entries();
  }
  p /= static_cast<double>(terms);
  return make_report(std::move(p), ProjectorMethod::FourierEquidistant, source, aliasing);
}

ProjectorReport cyclic_quadrature_projector(const Operator& o, double target, int nodes,
                                            double rescale,
                                            const std::optional<SpectrumSpec>& spectrum) {
  require_hermitian(o, "cyclic_quadrature_projector");
  if (rescale <= 0) throw std::invalid_argument("cyclic_quadrature_projector: rescale must be positive");
  if (nodes < 1) throw std::invalid_argument("cyclic_quadrature_projector: need at least one node");

  std::optional<double> aliasing;
  SpectrumSpec::Source source = SpectrumSpec::Source::Declared;
  if (spectrum) {
    spectrum->validate_against_dim(o.dim());
    if (!spectrum->contains(target)) {
      throw std::invalid_argument("cyclic_quadrature_projector: target " + detail::g17(target) +
                                  " not in the supplied spectrum");
    }
    aliasing = exponential_sum_defect(*spectrum, target, rescale, nodes, 0);
    source = spectrum->source();
  }

  const Index n = o.dim();
  const Operator shifted(Matrix(o.entries() - target * Matrix::Identity(n, n)));
  Matrix p = Matrix::Zero(n, n);
  for (int m = 0; m < nodes; ++m) {
    const double phi = 2 * M_PI * m / nodes;
    p += matrix_exponential(shifted, Complex(0, phi / rescale)).entries();
  }
  p /= static_cast<double>(nodes);
  return make_report(std::move(p), ProjectorMethod::CyclicQuadrature, source, aliasing);
}

ProjectorReport riesz_projector(const Operator& o, const SpectrumSpec& spectrum, double target,
                                double radius, int nodes) {
  require_hermitian(o, "riesz_projector");
  if (radius <= 0) throw std::invalid_argument("riesz_projector: radius must be positive");
  if (nodes < 4) throw std::invalid_argument("riesz_projector: need at least four nodes");
  if (!spectrum.contains(target)) {
    throw std::invalid_argument("riesz_projector: target " + detail::g17(target) +
                                " not in the spectrum");
  }
  for (double v : spectrum.values()) {
    const double dist = std::abs(v - target);
    if (dist <= kClusterTol) continue;  // the target cluster, inside by construction
    if (std::abs(dist - radius) <= 1e-10 * std::max(1.0, radius)) {
      throw std::invalid_argument("riesz_projector: contour of radius " + detail::g17(radius) +
                                  " crosses the eigenvalue " + detail::g17(v));
    }
    if (dist < radius) {
      throw std::invalid_argument("riesz_projector: contour of radius " + detail::g17(radius) +
                                  " encloses the foreign eigenvalue " + detail::g17(v));
    }
  }

  const Index n = o.dim();
  const Matrix id = Matrix::Identity(n, n);
  Matrix p = Matrix::Zero(n, n);
  for (int m = 0; m < nodes; ++m) {
    const double theta = 2 * M_PI * m / nodes;
    const Complex e = std::polar(1.0, theta);
    const Complex z = target + radius * e;
    for (double v : spectrum.values()) {
      if (std::abs(z - v) <= 1e-12) {
        throw std::invalid_argument("riesz_projector: quadrature node hits the eigenvalue " +
                                    detail::g17(v) + "; change the radius or node count");
      }
    }
    const Matrix shifted = z * id - o.entries();
    p += (radius / nodes) * e * shifted.partialPivLu().solve(id);
  }
  return make_report(std::move(p), ProjectorMethod::Riesz, spectrum.source());
}

ProjectorReport riesz_projector(const Operator& o, double target, double radius, int nodes) {
  return riesz_projector(o, oracle_spectrum(o), target, radius, nodes);
}

ProjectorReport finite_group_projector(const GroupRep& rep, const std::string& irrep_label) {
  const Irrep& irrep = rep.table().find(irrep_label);
  const Index n = rep.elements().front().dim();
  Matrix p = Matrix::Zero(n, n);
  for (std::size_t k = 0; k < rep.order(); ++k) {
    p += std::conj(irrep.characters[k]) * rep.elements()[k].entries();
  }
  p *= static_cast<double>(irrep.dimension) / static_cast<double>(rep.order());
  return make_report(std::move(p), ProjectorMethod::GroupCharacter,
                     SpectrumSpec::Source::Declared);
}

// ---------------------------------------------------------------------------
// Angular momentum

namespace {

int su2_index(double j, double m, const char* context) {
  const double two_j = 2 * j;
  if (j < 0 || std::abs(two_j - std::round(two_j)) > 1e-9) {
    throw std::invalid_argument(std::string(context) + ": j = " + detail::g17(j) +
                                " is not a non-negative half-integer");
  }
  const double idx = j - m;
  if (std::abs(idx - std::round(idx)) > 1e-9 || m < -j - 1e-9 || m > j + 1e-9) {
    throw std::invalid_argument(std::string(context) + ": m = " + detail::g17(m) +
                                " is not one of j, j-1, ..., -j for j = " + detail::g17(j));
  }
  return static_cast<int>(std::round(idx));
}

}  // namespace

Su2Generators su2_irrep_generators(double j) {
  su2_index(j, j, "su2_irrep_generators");
  const Index dim = static_cast<Index>(std::round(2 * j)) + 1;
  Matrix jplus = Matrix::Zero(dim, dim);
  Matrix jz = Matrix::Zero(dim, dim);
  for (Index a = 0; a < dim; ++a) {
    const double m = j - static_cast<double>(a);
    jz(a, a) = m;
    if (a >= 1) jplus(a - 1, a) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  Matrix jx = 0.5 * (jplus + jplus.adjoint().eval());
  Matrix jy = Complex(0, -0.5) * (jplus - jplus.adjoint().eval());
  return {Operator(std::move(jx), Hermiticity::Yes), Operator(std::move(jy), Hermiticity::Yes),
          Operator(std::move(jz), Hermiticity::Yes)};
}

Complex wigner_character(double j, double m, double beta) {
  const int idx = su2_index(j, m, "wigner_character");
  const Su2Generators gen = su2_irrep_generators(j);
  const Operator e = matrix_exponential(gen.jy, Complex(0, beta));
  return e.entries()(idx, idx);
}

ProjectorReport angular_momentum_projector(const Operator& jy_total, double j, double m,
                                           int nodes) {
  require_hermitian(jy_total, "angular_momentum_projector");
  su2_index(j, m, "angular_momentum_projector");
  if (nodes < 16) {
    throw std::invalid_argument("angular_momentum_projector: need at least 16 quadrature nodes");
  }
  const Index n = jy_total.dim();
  Matrix p = Matrix::Zero(n, n);
  for (const QuadratureNode& node : gauss_legendre(nodes)) {
    const double beta = 0.5 * M_PI * (node.x + 1.0);
    const double weight = 0.5 * M_PI * node.w;
    const double character = wigner_character(j, m, beta).real();
    p += (j + 0.5) * weight * std::sin(beta) * character *
         matrix_exponential(jy_total, Complex(0, beta)).entries();
  }
  return make_report(std::move(p), ProjectorMethod::AngularMomentum,
                     SpectrumSpec::Source::Declared);
}

ProjectorReport angular_momentum_sector_projector(const Operator& jy_total,
                                                  const Operator& jz_total,
                                                  const SpectrumSpec& jz_spectrum, double j,
                                                  double m, int nodes) {
  require_same_dim(jy_total, jz_total, "angular_momentum_sector_projector");
  const ProjectorReport raw = angular_momentum_projector(jy_total, j, m, nodes);
  const ProjectorReport jz_proj =
      lagrange_projector(jz_total, jz_spectrum, jz_spectrum.index_of(m));
  // The Jz projector applied on both sides realizes the two azimuthal
  // integrals dropped by the single-angle reduction; one-sided products
  // retain couplings between different Jz sectors.
  Matrix combined =
      jz_proj.matrix.entries() * raw.matrix.entries() * jz_proj.matrix.entries();
  return make_report(std::move(combined), ProjectorMethod::AngularMomentum,
                     jz_spectrum.source());
}

ProjectorReport angular_momentum_sector_projector(const Operator& jy_total,
                                                  const Operator& jz_total, double j, double m,
                                                  int nodes) {
  return angular_momentum_sector_projector(jy_total, jz_total, oracle_spectrum(jz_total), j, m,
                                           nodes);
}

// ---------------------------------------------------------------------------
// Composite products

ProjectorReport composite_projector(const std::vector<Operator>& parts) {
  if (parts.empty()) throw std::invalid_argument("composite_projector: no parts");
  const Index n = parts.front().dim();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    require_same_dim(parts.front(), parts[i], "composite_projector");
    const Matrix& m = parts[i].entries();
    const double idem = (m * m - m).norm();
    const double herm = (m - m.adjoint()).norm();
    if (idem > 1e-8 || herm > 1e-8) {
      throw std::invalid_argument("composite_projector: part " + std::to_string(i) +
                                  " is not a projector (idempotency " + detail::g17(idem) +
                                  ", hermiticity " + detail::g17(herm) + ")");
    }
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t k = i + 1; k < parts.size(); ++k) {
      const double comm = commutator(parts[i], parts[k]).frobenius_norm();
      if (comm > 1e-8) {
        throw std::invalid_argument("composite_projector: parts " + std::to_string(i) + " and " +
                                    std::to_string(k) + " do not commute, ||[P_i, P_k]|| = " +
                                    detail::g17(comm));
      }
    }
  }

  Matrix forward = Matrix::Identity(n, n);
  for (const Operator& part : parts) forward = forward * part.entries();
  Matrix reversed = Matrix::Identity(n, n);
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) reversed = reversed * it->entries();
  const double order_residual = (forward - reversed).norm();

  return make_report(std::move(forward), ProjectorMethod::Composite,
                     SpectrumSpec::Source::Declared, std::nullopt, order_residual);
}

ProjectorReport oracle_projector_report(const Operator& o, double target, double cluster_tol) {
  Operator p = spectral_projector_oracle(o, target, cluster_tol);
  return make_report(Matrix(p.entries()), ProjectorMethod::Oracle, SpectrumSpec::Source::Oracle);
}

}  // namespace symproj
