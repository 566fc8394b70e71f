#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlie/subspace.hpp"

namespace nlie {

struct NotCentralError : NLieError {
  using NLieError::NLieError;
};

/// Basis index tuple, 1-based and strictly increasing when used as a table key.
using Tuple = std::vector<int>;

std::string tuple_to_string(const Tuple& t);
bool is_strictly_increasing(const Tuple& t);

/// All strictly increasing k-tuples over [1, d], in lexicographic order.
std::vector<Tuple> increasing_tuples(int d, int k);

/// Sorts idx in place; returns +1/-1 for the permutation parity, 0 if a
/// repeated index makes the bracket vanish.
int sort_with_sign(std::vector<int>& idx);

/// Finite-dimensional alternating n-ary algebra given by structure constants
/// on strictly increasing basis tuples. Absent keys are zero brackets; stored
/// values are nonzero vectors of length dim. Whether the table satisfies the
/// Filippov identity is a property checked separately.
struct NLieAlgebra {
  int arity = 2;
  int dim = 0;
  FieldSpec field;
  std::map<Tuple, Vec> brackets;
  std::vector<std::string> basis_labels;  // optional; empty or size dim

  void set_bracket(const Tuple& args, const Vec& value);  // prunes zeros
  const Vec* find_bracket(const Tuple& args) const;
  void validate() const;  // table invariants; throws NLieError
  bool operator==(const NLieAlgebra& o) const {
    return arity == o.arity && dim == o.dim && field == o.field && brackets == o.brackets;
  }
};

NLieAlgebra abelian_algebra(int arity, int dim, const FieldSpec& f);

/// Bracket of basis vectors in any order (repeats give zero).
Vec basis_bracket(const NLieAlgebra& a, const std::vector<int>& idx);

/// Multilinear antisymmetric extension of the table to arbitrary vectors.
Vec bracket(const NLieAlgebra& a, const std::vector<Vec>& args);

/// Structural validity plus spot checks that evaluation is alternating
/// (repeated argument kills the bracket, a transposition flips the sign).
bool check_alternating(const NLieAlgebra& a);

struct FilippovResult {
  bool ok = true;
  Tuple x;  // violating outer tuple when !ok
  Tuple y;  // violating inner (n-1)-tuple when !ok
};

/// Checks [[x1..xn],y2..yn] = sum_i [x1,..,[xi,y2..yn],..,xn] over all
/// strictly increasing basis tuples x and (n-1)-tuples y. Multilinearity
/// makes this exhaustive over the whole algebra.
FilippovResult check_filippov(const NLieAlgebra& a);

enum class NilKind : uint8_t { abelian, nilpotent, not_nilpotent };

struct NilClass {
  NilKind kind = NilKind::abelian;
  int cls = 0;  // nilpotency class when kind == nilpotent (>= 1)
  bool operator==(const NilClass&) const = default;
  std::string to_string() const;
};

struct SeriesReport {
  std::vector<Subspace> derived;  // A^1 = A, A^2, ... until stable
  std::vector<Subspace> upper;    // Z_0 = 0, Z_1, ... until stable
  NilClass nil;
};

Subspace derived_subalgebra(const NLieAlgebra& a);  // A^2
Subspace center(const NLieAlgebra& a);              // Z(A)
std::vector<Subspace> derived_series(const NLieAlgebra& a);
std::vector<Subspace> upper_central_series(const NLieAlgebra& a);
SeriesReport series_report(const NLieAlgebra& a);
NilClass nilpotency_class(const NLieAlgebra& a);

/// Non-abelian with A^2 contained in Z(A).
bool is_class_two(const NLieAlgebra& a);

/// Invertible change of basis; columns of P are the new basis vectors in old
/// coordinates.
struct BasisChange {
  Mat P;
};

/// Transports the bracket table to the new basis:
///   [e'_{i1},..,e'_{in}]' = P^{-1} bracket(a, P e_{i1}, .., P e_{in}).
NLieAlgebra apply_basis_change(const NLieAlgebra& a, const Mat& P);

struct QuotientResult {
  NLieAlgebra quotient;
  Mat projection;                     // (dim - k) x dim coordinate projection
  std::vector<size_t> complement;    // 0-based ambient indices kept
};

/// Quotient by a central subspace, on the standard complement basis (the
/// basis vectors away from the ideal's pivot columns, in index order).
QuotientResult quotient_central(const NLieAlgebra& a, const Subspace& ideal);

NLieAlgebra direct_sum(const NLieAlgebra& a, const NLieAlgebra& b);

/// One-dimensional central extension: dimension grows by one and the new last
/// coordinate receives the cocycle values. Filippov validity of the result is
/// the caller's concern (automatic when all brackets stay central).
NLieAlgebra central_extension(const NLieAlgebra& q, const std::map<Tuple, Scalar>& cocycle);

}  // namespace nlie
