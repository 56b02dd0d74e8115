// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#include "symproj/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "format17.hpp"

namespace symproj {

namespace {

void validate(const std::vector<double>& values,
              const std::optional<std::vector<int>>& degeneracies,
              const std::optional<double>& spacing, double cluster_tol) {
  if (values.empty()) throw std::invalid_argument("SpectrumSpec: empty value list");
  for (std::size_t k = 0; k + 1 < values.size(); ++k) {
    const double gap = values[k + 1] - values[k];
    if (gap < cluster_tol) {
      throw std::invalid_argument("SpectrumSpec: values must be strictly increasing with gaps >= " +
                                  detail::g17(cluster_tol) + "; gap " + detail::g17(gap) +
                                  " between entries " + std::to_string(k) + " and " +
                                  std::to_string(k + 1));
    }
    if (spacing && std::abs(gap - *spacing) > 1e-10) {
      throw std::invalid_argument("SpectrumSpec: gap " + detail::g17(gap) + " at index " +
                                  std::to_string(k) + " differs from declared spacing " +
                                  detail::g17(*spacing));
    }
  }
  if (spacing && *spacing <= 0) {
    throw std::invalid_argument("SpectrumSpec: spacing must be positive");
  }
  if (degeneracies) {
    if (degeneracies->size() != values.size()) {
      throw std::invalid_argument("SpectrumSpec: degeneracy list length mismatch");
    }
    for (int d : *degeneracies) {
      if (d < 1) throw std::invalid_argument("SpectrumSpec: degeneracies must be positive");
    }
  }
}

}  // namespace

SpectrumSpec SpectrumSpec::declared(std::vector<double> values,
                                    std::optional<std::vector<int>> degeneracies,
                                    std::optional<double> spacing, double cluster_tol) {
  validate(values, degeneracies, spacing, cluster_tol);
  SpectrumSpec s;
  s.values_ = std::move(values);
  s.degeneracies_ = std::move(degeneracies);
  s.spacing_ = spacing;
  s.source_ = Source::Declared;
  return s;
}

SpectrumSpec SpectrumSpec::oracle_derived(std::vector<double> values,
                                          std::vector<int> degeneracies, double cluster_tol) {
  std::optional<double> spacing;
  if (values.size() >= 2) {
    const double d0 = values[1] - values[0];
    bool equidistant = true;
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
      if (std::abs((values[k + 1] - values[k]) - d0) > 1e-10) equidistant = false;
    }
    if (equidistant) spacing = d0;
  }
  validate(values, degeneracies, spacing, cluster_tol);
  SpectrumSpec s;
  s.values_ = std::move(values);
  s.degeneracies_ = std::move(degeneracies);
  s.spacing_ = spacing;
  s.source_ = Source::Oracle;
  return s;
}

std::size_t SpectrumSpec::index_of(double x, double tol) const {
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (std::abs(values_[k] - x) <= tol) return k;
  }
  throw std::invalid_argument("SpectrumSpec: value " + detail::g17(x) +
                              " not in spectrum (tolerance " + detail::g17(tol) + ")");
}

bool SpectrumSpec::contains(double x, double tol) const {
  return std::any_of(values_.begin(), values_.end(),
                     [&](double v) { return std::abs(v - x) <= tol; });
}

double SpectrumSpec::min_adjacent_gap(std::size_t j) const {
  if (j >= values_.size()) throw std::invalid_argument("SpectrumSpec: index out of range");
  if (values_.size() < 2) {
    throw std::invalid_argument("SpectrumSpec: one-point spectrum has no adjacent gap");
  }
  double gap = std::numeric_limits<double>::infinity();
  if (j > 0) gap = std::min(gap, values_[j] - values_[j - 1]);
  if (j + 1 < values_.size()) gap = std::min(gap, values_[j + 1] - values_[j]);
  return gap;
}

void SpectrumSpec::validate_against_dim(Index dim) const {
  if (!degeneracies_) return;
  const long sum = std::accumulate(degeneracies_->begin(), degeneracies_->end(), 0L);
  if (sum != dim) {
    throw std::invalid_argument("SpectrumSpec: degeneracies sum to " + std::to_string(sum) +
                                " but operator dim is " + std::to_string(dim));
  }
}

}  // namespace symproj
