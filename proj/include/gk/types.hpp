#pragma once

#include <Eigen/Core>
#include <complex>
#include <stdexcept>
#include <string>

namespace gk {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class Field { kReal, kComplex };

inline const char* field_name(Field f) {
  return f == Field::kReal ? "real" : "complex";
}

inline Field field_from_name(const std::string& s) {
  if (s == "real") return Field::kReal;
  if (s == "complex") return Field::kComplex;
  throw std::invalid_argument("unknown field tag: " + s);
}

// m x n coefficient matrix of a bilinear-form instance.  Real instances
// keep zero imaginary parts.
struct ProblemInstance {
  Matrix entries;
  Field field = Field::kReal;

  int m() const { return static_cast<int>(entries.rows()); }
  int n() const { return static_cast<int>(entries.cols()); }

  void validate() const {
    if (entries.rows() < 1 || entries.cols() < 1)
      throw std::invalid_argument("instance: empty matrix");
    if (!entries.allFinite())
      throw std::invalid_argument("instance: entries must be finite");
    if (field == Field::kReal && entries.imag().cwiseAbs().maxCoeff() != 0.0)
      throw std::invalid_argument("instance: real field with nonzero imaginary parts");
  }
};

// Unit-modulus scalars attaining |sum M_ij eps_i delta_j| = value.
struct SignAssignment {
  Vector eps;
  Vector delta;
  double value = 0.0;
};

// Unit vectors (columns) attaining |sum M_ij <x_i, y_j>| = value; the inner
// product convention is <x,y> = y^* x.
struct UnitVectorAssignment {
  Matrix xs;  // l x m
  Matrix ys;  // l x n
  Field field = Field::kReal;
  double value = 0.0;

  int l() const { return static_cast<int>(xs.rows()); }
};

inline Complex inner(const Vector& x, const Vector& y) { return y.dot(x); }

}  // namespace gk
