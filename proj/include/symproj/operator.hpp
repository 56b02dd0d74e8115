// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace symproj {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Tri-state hermiticity metadata attached to an Operator.
enum class Hermiticity { Yes, No, Unknown };

inline constexpr Index kMaxOperatorDim = 4096;

/// Dense complex square matrix with hermiticity metadata. Immutable after
/// construction; all library operations are pure functions of Operators.
class Operator {
public:
  /// Wraps a square matrix. If `hint` is Hermiticity::Yes the entrywise
  /// deviation max|A - A^dag| must be <= 1e-12, otherwise construction throws.
  explicit Operator(Matrix entries, Hermiticity hint = Hermiticity::Unknown);

  Index dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  Hermiticity hermitian_hint() const { return hint_; }

  /// Entrywise max|A - A^dag|.
  double hermiticity_violation() const;
  bool is_hermitian(double tol = 1e-10) const { return hermiticity_violation() <= tol; }

  double frobenius_norm() const { return entries_.norm(); }

  static Operator identity(Index dim);
  static Operator zero(Index dim);

private:
  Matrix entries_;
  Hermiticity hint_;
};

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(Complex s, const Operator& a);
Operator adjoint(const Operator& a);

/// Throws std::invalid_argument naming both dims unless a.dim() == b.dim().
void require_same_dim(const Operator& a, const Operator& b, const char* context);

/// Text (JSON) serialization with fields `dim` and `entries`, the latter a
/// row-major list of [re, im] pairs printed at 17 significant digits so that
/// a round trip preserves every bit of the decimal representation.
std::string to_text(const Operator& op);
Operator from_text(const std::string& text);

void save_operator(const Operator& op, const std::string& path);
Operator load_operator(const std::string& path);

}  // namespace symproj
