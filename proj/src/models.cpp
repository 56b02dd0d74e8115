// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#include "symproj/models.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace symproj {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix pauli(char axis) {
  Matrix m(2, 2);
  switch (axis) {
    case 'x': m << 0, 1, 1, 0; break;
    case 'y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'z': m << 1, 0, 0, -1; break;
    default: throw std::logic_error("pauli: bad axis");
  }
  return m;
}

/// Tensor product over all sites with the given per-site factors (identity
/// elsewhere), little-endian: site 0 is the rightmost factor.
Matrix chain_product(int n_sites, const std::map<int, Matrix>& factors) {
  Matrix out = Matrix::Identity(1, 1);
  for (int s = n_sites - 1; s >= 0; --s) {
    const auto it = factors.find(s);
    out = kron(out, it == factors.end() ? Matrix::Identity(2, 2) : it->second);
  }
  return out;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_sites(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw std::invalid_argument(std::string(what) + ": size " + std::to_string(n) +
                                " outside supported range [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
}

}  // namespace

SpinSystem SpinSystem::make(int n_sites) {
  check_sites(n_sites, 1, 12, "SpinSystem");
  return {n_sites, Index(1) << n_sites};
}

FermionSystem FermionSystem::make(int n_modes) {
  check_sites(n_modes, 1, 12, "FermionSystem");
  return {n_modes, Index(1) << n_modes};
}

TotalSpinOperators total_spin_operators(const SpinSystem& sys) {
  Matrix sx = Matrix::Zero(sys.dim, sys.dim);
  Matrix sy = sx, sz = sx;
  for (int s = 0; s < sys.n_sites; ++s) {
    sx += chain_product(sys.n_sites, {{s, 0.5 * pauli('x')}});
    sy += chain_product(sys.n_sites, {{s, 0.5 * pauli('y')}});
    sz += chain_product(sys.n_sites, {{s, 0.5 * pauli('z')}});
  }
  Matrix ssq = sx * sx + sy * sy + sz * sz;
  return {Operator(std::move(sx), Hermiticity::Yes), Operator(std::move(sy), Hermiticity::Yes),
          Operator(std::move(sz), Hermiticity::Yes), Operator(std::move(ssq), Hermiticity::Yes)};
}

std::pair<Operator, Operator> jordan_wigner_ladder(const FermionSystem& sys, int mode) {
  if (mode < 0 || mode >= sys.n_modes) {
    throw std::invalid_argument("jordan_wigner_ladder: mode " + std::to_string(mode) +
                                " out of range for " + std::to_string(sys.n_modes) + " modes");
  }
  Matrix lower(2, 2);
  lower << 0, 1, 0, 0;  // |0><1|: annihilates the occupied state
  std::map<int, Matrix> factors{{mode, lower}};
  for (int q = 0; q < mode; ++q) factors[q] = pauli('z');
  Matrix a = chain_product(sys.n_modes, factors);
  Matrix ad = a.adjoint();
  return {Operator(std::move(a)), Operator(std::move(ad))};
}

Operator number_operator(const FermionSystem& sys) {
  // Equal to sum_p a^dag_p a_p with every Z-string cancelling: the diagonal
  // occupation count.
  Matrix n = Matrix::Zero(sys.dim, sys.dim);
  for (Index b = 0; b < sys.dim; ++b) {
    n(b, b) = static_cast<double>(__builtin_popcountll(static_cast<unsigned long long>(b)));
  }
  return Operator(std::move(n), Hermiticity::Yes);
}

Operator heisenberg_chain(int n_sites, double coupling, bool periodic) {
  check_sites(n_sites, 2, 12, "heisenberg_chain");
  const SpinSystem sys = SpinSystem::make(n_sites);
  Matrix h = Matrix::Zero(sys.dim, sys.dim);
  const int n_bonds = periodic ? n_sites : n_sites - 1;
  for (int b = 0; b < n_bonds; ++b) {
    const int i = b;
    const int j = (b + 1) % n_sites;
    for (char axis : {'x', 'y', 'z'}) {
      h += coupling *
           chain_product(n_sites, {{i, 0.5 * pauli(axis)}, {j, 0.5 * pauli(axis)}});
    }
  }
  return Operator(std::move(h), Hermiticity::Yes);
}

namespace {

int hubbard_mode(int site, int spin) { return 2 * site + spin; }  // spin 0 = up

}  // namespace

Operator hubbard_model(int n_sites, double hopping, double interaction) {
  check_sites(n_sites, 1, 4, "hubbard_model");
  const FermionSystem sys = FermionSystem::make(2 * n_sites);
  Matrix h = Matrix::Zero(sys.dim, sys.dim);

  for (int i = 0; i + 1 < n_sites; ++i) {
    for (int spin = 0; spin < 2; ++spin) {
      const auto [ai, ai_dag] = jordan_wigner_ladder(sys, hubbard_mode(i, spin));
      const auto [aj, aj_dag] = jordan_wigner_ladder(sys, hubbard_mode(i + 1, spin));
      h -= hopping * (ai_dag.entries() * aj.entries() + aj_dag.entries() * ai.entries());
    }
  }
  for (Index b = 0; b < sys.dim; ++b) {
    double docc = 0;
    for (int i = 0; i < n_sites; ++i) {
      const bool up = (b >> hubbard_mode(i, 0)) & 1;
      const bool down = (b >> hubbard_mode(i, 1)) & 1;
      if (up && down) docc += 1;
    }
    h(b, b) += interaction * docc;
  }
  return Operator(std::move(h), Hermiticity::Yes);
}

TotalSpinOperators hubbard_spin_operators(int n_sites) {
  check_sites(n_sites, 1, 4, "hubbard_spin_operators");
  const FermionSystem sys = FermionSystem::make(2 * n_sites);
  Matrix splus = Matrix::Zero(sys.dim, sys.dim);
  Matrix sz = Matrix::Zero(sys.dim, sys.dim);
  for (int i = 0; i < n_sites; ++i) {
    const auto [au, au_dag] = jordan_wigner_ladder(sys, hubbard_mode(i, 0));
    const auto [ad, ad_dag] = jordan_wigner_ladder(sys, hubbard_mode(i, 1));
    splus += au_dag.entries() * ad.entries();
    sz += 0.5 * (au_dag.entries() * au.entries() - ad_dag.entries() * ad.entries());
  }
  Matrix sx = 0.5 * (splus + splus.adjoint().eval());
  Matrix sy = Complex(0, -0.5) * (splus - splus.adjoint().eval());
  Matrix ssq = sx * sx + sy * sy + sz * sz;
  return {Operator(std::move(sx), Hermiticity::Yes), Operator(std::move(sy), Hermiticity::Yes),
          Operator(std::move(sz), Hermiticity::Yes), Operator(std::move(ssq), Hermiticity::Yes)};
}

Operator hubbard_number_operator(int n_sites) {
  check_sites(n_sites, 1, 4, "hubbard_number_operator");
  return number_operator(FermionSystem::make(2 * n_sites));
}

Operator site_permutation_operator(const SpinSystem& sys, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != sys.n_sites) {
    throw std::invalid_argument("site_permutation_operator: permutation length " +
                                std::to_string(perm.size()) + " != n_sites " +
                                std::to_string(sys.n_sites));
  }
  std::vector<bool> seen(sys.n_sites, false);
  for (int p : perm) {
    if (p < 0 || p >= sys.n_sites || seen[p]) {
      throw std::invalid_argument("site_permutation_operator: not a permutation");
    }
    seen[p] = true;
  }
  Matrix m = Matrix::Zero(sys.dim, sys.dim);
  for (Index b = 0; b < sys.dim; ++b) {
    Index target = 0;
    for (int k = 0; k < sys.n_sites; ++k) {
      if ((b >> k) & 1) target |= Index(1) << perm[k];
    }
    m(target, b) = 1.0;
  }
  return Operator(std::move(m));
}

Operator global_spin_flip(const SpinSystem& sys) {
  std::map<int, Matrix> factors;
  for (int s = 0; s < sys.n_sites; ++s) factors[s] = pauli('x');
  return Operator(chain_product(sys.n_sites, factors), Hermiticity::Yes);
}

SpectrumSpec sz_total_spectrum(int n_sites) {
  check_sites(n_sites, 1, 12, "sz_total_spectrum");
  std::vector<double> values;
  std::vector<int> degeneracies;
  for (int k = n_sites; k >= 0; --k) {  // k down-spins, ascending Sz
    values.push_back(0.5 * n_sites - k);
    degeneracies.push_back(static_cast<int>(binomial(n_sites, k)));
  }
  return SpectrumSpec::declared(std::move(values), std::move(degeneracies), 1.0);
}

SpectrumSpec s_squared_spectrum(int n_sites) {
  check_sites(n_sites, 1, 12, "s_squared_spectrum");
  std::vector<double> values;
  std::vector<int> degeneracies;
  for (int two_s = n_sites % 2; two_s <= n_sites; two_s += 2) {
    const double s = 0.5 * two_s;
    values.push_back(s * (s + 1));
    // irrep count times irrep dimension
    const long count = binomial(n_sites, (n_sites - two_s) / 2) -
                       binomial(n_sites, (n_sites - two_s) / 2 - 1);
    degeneracies.push_back(static_cast<int>((two_s + 1) * count));
  }
  return SpectrumSpec::declared(std::move(values), std::move(degeneracies));
}

SpectrumSpec number_spectrum(int n_modes) {
  check_sites(n_modes, 1, 12, "number_spectrum");
  std::vector<double> values;
  std::vector<int> degeneracies;
  for (int k = 0; k <= n_modes; ++k) {
    values.push_back(k);
    degeneracies.push_back(static_cast<int>(binomial(n_modes, k)));
  }
  return SpectrumSpec::declared(std::move(values), std::move(degeneracies), 1.0);
}

SpectrumSpec hubbard_sz_spectrum(int n_sites) {
  check_sites(n_sites, 1, 4, "hubbard_sz_spectrum");
  std::vector<double> values;
  std::vector<int> degeneracies;
  for (int two_m = -n_sites; two_m <= n_sites; ++two_m) {
    values.push_back(0.5 * two_m);
    long count = 0;
    for (int up = 0; up <= n_sites; ++up) {
      const int down = up - two_m;
      if (down >= 0 && down <= n_sites) count += binomial(n_sites, up) * binomial(n_sites, down);
    }
    degeneracies.push_back(static_cast<int>(count));
  }
  return SpectrumSpec::declared(std::move(values), std::move(degeneracies), 0.5);
}

SpectrumSpec hubbard_s_squared_spectrum(int n_sites) {
  check_sites(n_sites, 1, 4, "hubbard_s_squared_spectrum");
  std::vector<double> values;
  for (int two_s = 0; two_s <= n_sites; ++two_s) {
    const double s = 0.5 * two_s;
    values.push_back(s * (s + 1));
  }
  return SpectrumSpec::declared(std::move(values));
}

}  // namespace symproj
