#pragma once

#include <cstddef>
#include <vector>

#include "nlie/field.hpp"

namespace nlie {

struct DimensionError : NLieError {
  using NLieError::NLieError;
};
struct SingularError : NLieError {
  using NLieError::NLieError;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldSpec& f, size_t n);
Vec unit_vec(const FieldSpec& f, size_t n, size_t i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
Vec axpy(const Vec& a, const Scalar& c, const Vec& b);  // a + c*b

/// Dense matrix over one field; row-major.
class Mat {
public:
  Mat() = default;
  Mat(const FieldSpec& f, size_t rows, size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

  static Mat identity(const FieldSpec& f, size_t n);
  static Mat from_rows(const FieldSpec& f, const std::vector<Vec>& rows, size_t cols);
  static Mat from_cols(const FieldSpec& f, const std::vector<Vec>& cols, size_t rows);

  const FieldSpec& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Vec row(size_t i) const;
  Vec col(size_t j) const;
  void set_row(size_t i, const Vec& v);

  Mat transpose() const;
  bool operator==(const Mat& o) const;

private:
  FieldSpec field_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& v);

struct RrefResult {
  Mat m;
  size_t rank = 0;
  std::vector<size_t> pivots;  // pivot column per nonzero row
};

/// Reduced row echelon form. Pivot choice: first nonzero entry in column
/// order, so the result is the canonical form of the row space.
RrefResult rref(const Mat& m);
size_t rank(const Mat& m);

/// Basis of {v : m v = 0} as rows of the result (rref'd).
Mat nullspace_basis(const Mat& m);

Mat invert(const Mat& m);  // throws SingularError
Scalar det(const Mat& m);
bool is_invertible(const Mat& m);

/// Solve m x = b; throws SingularError if m is not invertible.
Vec solve(const Mat& m, const Vec& b);

}  // namespace nlie
