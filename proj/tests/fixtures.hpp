// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0
//
// Shared fixtures assembled from library pieces (unlike test_helpers.hpp,
// which stays independent of the library for oracle duty).

#pragma once

#include <string>
#include <vector>

#include "symproj/models.hpp"
#include "symproj/projector.hpp"

namespace symproj::testing {

/// S3 acting by permutation on three spin-1/2 sites, with the built-in
/// character table. Element order matches the table: e, (01), (02), (12),
/// (012), (021).
inline GroupRep s3_rep_on_three_spins() {
  const SpinSystem sys = SpinSystem::make(3);
  const std::vector<std::vector<int>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1},
  };
  const std::vector<std::string> labels = {"e", "(01)", "(02)", "(12)", "(012)", "(021)"};
  std::vector<Operator> elements;
  elements.reserve(perms.size());
  for (const auto& p : perms) elements.push_back(site_permutation_operator(sys, p));
  return GroupRep::make(std::move(elements), labels, builtin_character_table("S3"));
}

/// Z2 generated by the global spin flip on n sites.
inline GroupRep z2_flip_rep(int n_sites) {
  const SpinSystem sys = SpinSystem::make(n_sites);
  std::vector<Operator> elements{Operator::identity(sys.dim), global_spin_flip(sys)};
  return GroupRep::make(std::move(elements), {"e", "flip"}, builtin_character_table("Z2"));
}

}  // namespace symproj::testing
