#include "nlie/subspace.hpp"

namespace nlie {

Subspace Subspace::zero(const FieldSpec& f, size_t ambient) {
  Subspace s;
  s.field_ = f;
  s.ambient_ = ambient;
  s.basis_ = Mat(f, 0, ambient);
  return s;
}

Subspace Subspace::full(const FieldSpec& f, size_t ambient) {
  Subspace s = zero(f, ambient);
  s.basis_ = Mat::identity(f, ambient);
  for (size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(const FieldSpec& f, size_t ambient, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw DimensionError("span: vector has wrong ambient dimension");
  RrefResult r = rref(Mat::from_rows(f, vectors, ambient));
  Subspace s;
  s.field_ = f;
  s.ambient_ = ambient;
  s.basis_ = Mat(f, r.rank, ambient);
  for (size_t i = 0; i < r.rank; ++i) s.basis_.set_row(i, r.m.row(i));
  s.pivots_ = r.pivots;
  return s;
}

Subspace Subspace::from_rref(const Mat& echelon) {
  Subspace s;
  s.field_ = echelon.field();
  s.ambient_ = echelon.cols();
  RrefResult r = rref(echelon);
  s.basis_ = Mat(echelon.field(), r.rank, echelon.cols());
  for (size_t i = 0; i < r.rank; ++i) s.basis_.set_row(i, r.m.row(i));
  s.pivots_ = r.pivots;
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionError("contains: ambient mismatch");
  Vec w = v;
  for (size_t i = 0; i < basis_.rows(); ++i) {
    const Scalar& c = w[pivots_[i]];
    if (!c.is_zero()) {
      Scalar f = c;
      for (size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
    }
  }
  return is_zero_vec(w);
}

bool Subspace::contains(const Subspace& s) const {
  for (size_t i = 0; i < s.dim(); ++i)
    if (!contains(s.basis_vector(i))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec w = v;
  Vec coords = zero_vec(field_, dim());
  for (size_t i = 0; i < basis_.rows(); ++i) {
    Scalar c = w[pivots_[i]];
    coords[i] = c;
    if (!c.is_zero())
      for (size_t j = 0; j < ambient_; ++j) w[j] -= c * basis_.at(i, j);
  }
  if (!is_zero_vec(w)) throw DimensionError("coordinates: vector not in subspace");
  return coords;
}

std::vector<size_t> Subspace::complement_indices() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (size_t p : pivots_) is_pivot[p] = true;
  std::vector<size_t> idx;
  for (size_t j = 0; j < ambient_; ++j)
    if (!is_pivot[j]) idx.push_back(j);
  return idx;
}

std::vector<Vec> Subspace::complement_basis() const {
  std::vector<Vec> out;
  for (size_t j : complement_indices()) out.push_back(unit_vec(field_, ambient_, j));
  return out;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && field_ == o.field_ && basis_ == o.basis_;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !(a.field() == b.field()))
    throw DimensionError("sum: ambient/field mismatch");
  std::vector<Vec> rows;
  for (size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
  for (size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
  return Subspace::span(a.field(), a.ambient(), rows);
}

Subspace nullspace(const Mat& m) { return Subspace::from_rref(nullspace_basis(m)); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !(a.field() == b.field()))
    throw DimensionError("intersect: ambient/field mismatch");
  // v = x A = y B; kernel of [A^T | -B^T] gives the (x, y) pairs.
  size_t da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return Subspace::zero(a.field(), a.ambient());
  Mat m(a.field(), a.ambient(), da + db);
  for (size_t j = 0; j < da; ++j) {
    Vec r = a.basis_vector(j);
    for (size_t i = 0; i < a.ambient(); ++i) m.at(i, j) = r[i];
  }
  for (size_t j = 0; j < db; ++j) {
    Vec r = b.basis_vector(j);
    for (size_t i = 0; i < a.ambient(); ++i) m.at(i, da + j) = -r[i];
  }
  Mat ker = nullspace_basis(m);
  std::vector<Vec> rows;
  for (size_t i = 0; i < ker.rows(); ++i) {
    Vec v = zero_vec(a.field(), a.ambient());
    for (size_t j = 0; j < da; ++j)
      if (!ker.at(i, j).is_zero()) v = axpy(v, ker.at(i, j), a.basis_vector(j));
    rows.push_back(v);
  }
  return Subspace::span(a.field(), a.ambient(), rows);
}

}  // namespace nlie
