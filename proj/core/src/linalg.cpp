#include "nlie/linalg.hpp"

namespace nlie {

Vec zero_vec(const FieldSpec& f, size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(const FieldSpec& f, size_t n, size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = Scalar::one(f);
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

Vec axpy(const Vec& a, const Scalar& c, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += c * b[i];
  return r;
}

Mat Mat::identity(const FieldSpec& f, size_t n) {
  Mat m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::from_rows(const FieldSpec& f, const std::vector<Vec>& rows, size_t cols) {
  Mat m(f, rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Mat Mat::from_cols(const FieldSpec& f, const std::vector<Vec>& cols, size_t rows) {
  Mat m(f, rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionError("column size mismatch");
    for (size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec Mat::row(size_t i) const {
  Vec v(cols_, Scalar::zero(field_));
  for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Mat::col(size_t j) const {
  Vec v(rows_, Scalar::zero(field_));
  for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Mat::set_row(size_t i, const Vec& v) {
  if (v.size() != cols_) throw DimensionError("row size mismatch");
  for (size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  Mat c(a.field(), a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Vec mat_vec(const Mat& a, const Vec& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
  Vec r = zero_vec(a.field(), a.rows());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero()) r[i] += a.at(i, j) * v[j];
  return r;
}

RrefResult rref(const Mat& m) {
  RrefResult res;
  res.m = m;
  Mat& a = res.m;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t piv = a.rows();
    for (size_t i = r; i < a.rows(); ++i) {
      if (!a.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == a.rows()) continue;
    if (piv != r)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    Scalar inv = a.at(r, c).inverse();
    for (size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c);
      for (size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

size_t rank(const Mat& m) { return rref(m).rank; }

Mat nullspace_basis(const Mat& m) {
  RrefResult r = rref(m);
  const FieldSpec& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> rows;
  for (size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v = zero_vec(f, m.cols());
    v[c] = Scalar::one(f);
    for (size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.m.at(i, c);
    rows.push_back(v);
  }
  Mat basis = Mat::from_rows(f, rows, m.cols());
  return rref(basis).m;  // canonical ordering
}

Mat invert(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionError("invert needs a square matrix");
  size_t n = m.rows();
  Mat aug(m.field(), n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.field());
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] >= n) throw SingularError("matrix is singular");
  Mat inv(m.field(), n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = r.m.at(i, n + j);
  return inv;
}

Scalar det(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionError("det needs a square matrix");
  Mat a = m;
  size_t n = a.rows();
  Scalar d = Scalar::one(m.field());
  for (size_t c = 0; c < n; ++c) {
    size_t piv = n;
    for (size_t i = c; i < n; ++i)
      if (!a.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == n) return Scalar::zero(m.field());
    if (piv != c) {
      for (size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
      d = -d;
    }
    d *= a.at(c, c);
    Scalar inv = a.at(c, c).inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c) * inv;
      for (size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return d;
}

bool is_invertible(const Mat& m) {
  return m.rows() == m.cols() && !det(m).is_zero();
}

Vec solve(const Mat& m, const Vec& b) {
  Mat inv = invert(m);
  return mat_vec(inv, b);
}

}  // namespace nlie
