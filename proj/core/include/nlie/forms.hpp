#pragma once

#include "nlie/algebra.hpp"

namespace nlie {

/// A class-two algebra seen as an A^2-valued alternating n-form on a fixed
/// standard-basis complement W of the center. Everything the normalizers need
/// lives here: scalar pencil members, radicals, ranks, block splitting.
struct ClassTwoForms {
  int arity = 0;
  int dim = 0;          // ambient dimension
  FieldSpec field;
  Subspace Z;            // center
  Subspace A2;           // derived subalgebra
  std::vector<size_t> w_idx;  // 0-based ambient indices spanning W
  int w = 0;             // dim W = dim - dim Z
  int r = 0;             // dim A^2
  int spares = 0;        // dim Z - r
  std::map<Tuple, Vec> phi;  // increasing n-tuples over [1..w] -> A2 coords (len r)

  Vec lift(const Vec& wcoords) const;          // W coords -> ambient vector
  Vec a2_vector(const Vec& a2coords) const;    // A2 coords -> ambient vector
  std::vector<Vec> spare_basis() const;        // basis of a complement of A2 in Z
};

/// Requires is_class_two(a).
ClassTwoForms make_forms(const NLieAlgebra& a);

/// Scalar alternating n-form on [1..w]: tuple -> coefficient (zeros absent).
using ScalarForm = std::map<Tuple, Scalar>;

/// ell (length r, covector over A? coordinates) composed with the form.
ScalarForm pencil_member(const ClassTwoForms& F, const Vec& ell);

Scalar form_coeff(const ScalarForm& f, const FieldSpec& fs, const std::vector<int>& idx);
bool form_is_zero(const ScalarForm& f);

/// Contraction matrix: rows indexed by increasing (n-1)-tuples, columns by
/// [1..w]; row (T), column j holds the signed coefficient at j joined with T.
/// Its nullspace is the radical {v : i_v phi = 0} and its rank is the
/// dimension of the minimal support of the form.
Mat contraction_matrix(const FieldSpec& fs, int w, int n, const ScalarForm& f);
Subspace form_radical(const FieldSpec& fs, int w, int n, const ScalarForm& f);
size_t form_rank(const FieldSpec& fs, int w, int n, const ScalarForm& f);

/// Evaluate the form on w-coordinate vectors (multilinear, alternating).
Scalar form_eval(const FieldSpec& fs, int n, const ScalarForm& f, const std::vector<Vec>& args);

// ---- univariate polynomials (for pencil locus computations over Q) ----

struct Poly {
  FieldSpec field;
  std::vector<Scalar> c;  // c[i] coefficient of t^i; normalized (no leading zeros)

  explicit Poly(const FieldSpec& f) : field(f) {}
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void normalize();
  Scalar eval(const Scalar& t) const;
};

Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_rem(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic
Poly poly_interpolate(const FieldSpec& f, const std::vector<Scalar>& xs, const std::vector<Scalar>& ys);

/// Exact square root when it exists.
std::optional<Scalar> scalar_sqrt(const Scalar& a);

/// All roots in the coefficient field, for degree <= 2 exactly; higher degrees
/// fall back to small-prime-field enumeration or integer root search over Q
/// and may report failure (nullopt) rather than guess.
std::optional<std::vector<Scalar>> poly_roots(const Poly& p);

// ---- pencil locus helpers ----

/// Points ell0 + t*ell1 (plus t = infinity, i.e. ell1) whose scalar form has
/// rank exactly n. Exact over finite fields by enumeration when p is small,
/// by minor interpolation + gcd over Q. nullopt means the computation could
/// not certify the locus (caller should fail honestly).
std::optional<std::vector<Vec>> rank_n_points_on_line(const ClassTwoForms& F, const Vec& ell0,
                                                      const Vec& ell1);

/// True when every sampled member of the line has rank <= n; with n+2 samples
/// this certifies the whole line (minor degree bound).
bool line_all_rank_n(const ClassTwoForms& F, const Vec& ell0, const Vec& ell1);

// ---- block splitting for one-dimensional derived subalgebras ----

/// For a scalar n-form on 2n coordinates that splits as two disjoint
/// decomposable blocks, returns the two block subspaces (of [1..w] coordinate
/// space). Solves for the splitting operator away from characteristic two and
/// sweeps projective points over small prime fields.
std::optional<std::pair<Subspace, Subspace>> split_two_blocks(const FieldSpec& fs, int n,
                                                              const ScalarForm& f);

/// Rank multiset of the projective pencil of induced scalar forms — an
/// isomorphism invariant of class-two algebras over finite fields. nullopt
/// over Q, for non-class-two inputs, or when the pencil exceeds max_points.
std::optional<std::map<int, long>> pencil_rank_profile(const NLieAlgebra& a,
                                                       size_t max_points = 4096);

}  // namespace nlie
