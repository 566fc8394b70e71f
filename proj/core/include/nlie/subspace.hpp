#pragma once

#include "nlie/linalg.hpp"

namespace nlie {

/// Subspace of F^ambient, stored as its reduced row echelon basis. The
/// echelon matrix is the canonical form: two spans of the same space produce
/// identical Subspace values.
class Subspace {
public:
  Subspace() = default;

  static Subspace zero(const FieldSpec& f, size_t ambient);
  static Subspace full(const FieldSpec& f, size_t ambient);
  static Subspace span(const FieldSpec& f, size_t ambient, const std::vector<Vec>& vectors);
  static Subspace from_rref(const Mat& echelon);  // rows already canonical

  const FieldSpec& field() const { return field_; }
  size_t ambient() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec basis_vector(size_t i) const { return basis_.row(i); }
  const std::vector<size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& s) const;
  /// Coordinates of v in the echelon basis; throws if v is not in the space.
  Vec coordinates(const Vec& v) const;

  /// Standard basis vectors at the non-pivot indices, extending this space to
  /// the full ambient space.
  std::vector<Vec> complement_basis() const;
  std::vector<size_t> complement_indices() const;

  bool operator==(const Subspace& o) const;

private:
  FieldSpec field_;
  size_t ambient_ = 0;
  Mat basis_;  // rref, no zero rows
  std::vector<size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Kernel {v : m v = 0} as a canonical subspace.
Subspace nullspace(const Mat& m);

}  // namespace nlie
