// Copyright (c) the symproj developers.
// SPDX-License-Identifier: Apache-2.0

#include "symproj/operator.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "format17.hpp"

namespace symproj {

Operator::Operator(Matrix entries, Hermiticity hint)
    : entries_(std::move(entries)), hint_(hint) {
  if (entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("Operator: matrix must be square, got " +
                                std::to_string(entries_.rows()) + "x" +
                                std::to_string(entries_.cols()));
  }
  if (entries_.rows() < 1 || entries_.rows() > kMaxOperatorDim) {
    throw std::invalid_argument("Operator: dim " + std::to_string(entries_.rows()) +
                                " outside supported range [1, " +
                                std::to_string(kMaxOperatorDim) + "]");
  }
  if (hint_ == Hermiticity::Yes) {
    const double v = hermiticity_violation();
    if (v > 1e-12) {
      throw std::invalid_argument(
          "Operator: declared Hermitian but max|A - A^dag| = " + detail::g17(v));
    }
  }
}

double Operator::hermiticity_violation() const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

Operator Operator::identity(Index dim) {
  return Operator(Matrix::Identity(dim, dim), Hermiticity::Yes);
}

Operator Operator::zero(Index dim) {
  return Operator(Matrix::Zero(dim, dim), Hermiticity::Yes);
}

void require_same_dim(const Operator& a, const Operator& b, const char* context) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(context) + ": dimension mismatch " +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

Operator operator+(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "operator+");
  return Operator(a.entries() + b.entries());
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "operator-");
  return Operator(a.entries() - b.entries());
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "operator*");
  return Operator(a.entries() * b.entries());
}

Operator operator*(Complex s, const Operator& a) { return Operator(s * a.entries()); }

Operator adjoint(const Operator& a) { return Operator(a.entries().adjoint()); }

std::string to_text(const Operator& op) {
  std::ostringstream out;
  out << "{\n  \"dim\": " << op.dim() << ",\n  \"entries\": [";
  const Matrix& m = op.entries();
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (r != 0 || c != 0) out << ",";
      out << "\n    [" << detail::g17(m(r, c).real()) << ", " << detail::g17(m(r, c).imag())
          << "]";
    }
  }
  out << "\n  ]\n}\n";
  return out.str();
}

Operator from_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("operator file: not valid JSON: ") + e.what());
  }
  if (!j.contains("dim") || !j.contains("entries")) {
    throw std::invalid_argument("operator file: missing 'dim' or 'entries'");
  }
  const Index dim = j.at("dim").get<Index>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() || static_cast<Index>(entries.size()) != dim * dim) {
    throw std::invalid_argument("operator file: 'entries' must hold dim*dim [re, im] pairs");
  }
  Matrix m(dim, dim);
  Index k = 0;
  for (const auto& pair : entries) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("operator file: entry " + std::to_string(k) +
                                  " is not an [re, im] pair");
    }
    m(k / dim, k % dim) = Complex(pair[0].get<double>(), pair[1].get<double>());
    ++k;
  }
  return Operator(std::move(m));
}

void save_operator(const Operator& op, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << to_text(op);
}

Operator load_operator(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return from_text(buf.str());
}

}  // namespace symproj
