// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "symproj/operator.hpp"
#include "symproj/spectrum.hpp"

namespace symproj {

/// Chain of spin-1/2 sites. Site 0 is the least significant tensor factor
/// (little-endian), which fixes every matrix layout below.
struct SpinSystem {
  int n_sites;
  Index dim;
  static SpinSystem make(int n_sites);  // 1 <= n_sites <= 12
};

/// Fermionic modes mapped to qubits by the Jordan-Wigner transformation with
/// the Z-string on modes of lower index. Mode 0 is the least significant
/// tensor factor.
struct FermionSystem {
  int n_modes;
  Index dim;
  static FermionSystem make(int n_modes);  // 1 <= n_modes <= 12
};

struct TotalSpinOperators {
  Operator sx, sy, sz, s_squared;
};

/// Sa = sum over sites of the single-site spin-a operator; S^2 = Sx^2 + Sy^2
/// + Sz^2. All Hermitian by construction and commuting with S^2.
TotalSpinOperators total_spin_operators(const SpinSystem& sys);

/// (a, a^dag) for one mode; anticommutation {a_p, a^dag_q} = delta_pq holds
/// across all built pairs.
std::pair<Operator, Operator> jordan_wigner_ladder(const FermionSystem& sys, int mode);

/// N = sum_p a^dag_p a_p: diagonal with the occupation count, equidistant
/// spectrum 0..n_modes with unit spacing.
Operator number_operator(const FermionSystem& sys);

/// H = J sum over nearest-neighbour bonds of S_i . S_j; commutes with
/// Sz_total and S^2_total.
Operator heisenberg_chain(int n_sites, double coupling, bool periodic);

/// Open-chain Hubbard Hamiltonian, two spin-modes per site (mode index
/// 2*site + spin, spin 0 = up):
/// H = -t sum_<ij>,sigma (a^dag_i,sigma a_j,sigma + h.c.) + U sum_i n_i,up n_i,down.
/// Commutes with the total number and spin operators below.
Operator hubbard_model(int n_sites, double hopping, double interaction);

/// Total fermionic spin operators on a Hubbard lattice of n_sites.
TotalSpinOperators hubbard_spin_operators(int n_sites);
Operator hubbard_number_operator(int n_sites);

/// Permutation of spin sites as an operator: site k of the input appears at
/// site perm[k] of the output.
Operator site_permutation_operator(const SpinSystem& sys, const std::vector<int>& perm);

/// Product of sigma_x over all sites (Z2 parity partner of the identity).
Operator global_spin_flip(const SpinSystem& sys);

/// Known spectra of the model symmetry operators, declared rather than
/// derived from any eigensolve.
SpectrumSpec sz_total_spectrum(int n_sites);
SpectrumSpec s_squared_spectrum(int n_sites);
SpectrumSpec number_spectrum(int n_modes);
SpectrumSpec hubbard_sz_spectrum(int n_sites);
SpectrumSpec hubbard_s_squared_spectrum(int n_sites);

}  // namespace symproj
