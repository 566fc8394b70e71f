#pragma once

#include "nlie/algebra.hpp"

namespace nlie {

/// Rank of the map w -> [v, w-tuples]: the dimension of the span of
/// bracket(v, e_{j2}, .., e_{jn}) over all increasing (n-1)-tuples.
int ad_rank(const NLieAlgebra& a, const Vec& v);

/// Multiset of ad-ranks over all projective points of GF(p)^d, as
/// rank -> count. nullopt when the point count exceeds max_points.
std::optional<std::map<int, long>> ad_rank_profile(const NLieAlgebra& a, size_t max_points);

/// Reinterpret an integral table over GF(p). Throws FieldError when a
/// coefficient is not integral.
NLieAlgebra reduce_mod_p(const NLieAlgebra& a, uint32_t p);

struct FingerprintOptions {
  bool with_profile = true;
  size_t max_profile_points = 30000;
};

/// Isomorphism invariants. The projective ad-rank profile is computed over
/// finite fields directly; over Q it is replaced by the profiles of the mod-2
/// and mod-3 reductions when the table is integral (the reduction prime is
/// recorded), and omitted otherwise.
struct Fingerprint {
  int arity = 0;
  int dim = 0;
  int dim_derived = 0;
  int dim_center = 0;
  int dim_derived_cap_center = 0;
  NilClass nil;
  std::vector<std::pair<uint32_t, std::map<int, long>>> profiles;

  bool operator==(const Fingerprint&) const = default;
  std::string to_string() const;
};

Fingerprint fingerprint(const NLieAlgebra& a, const FingerprintOptions& opts = {});

struct WitnessCheck {
  bool ok = false;
  Tuple differing;  // first tuple where the transported table differs
};

/// apply_basis_change(a, P) == b, with the first differing tuple on failure.
WitnessCheck verify_witness(const NLieAlgebra& a, const NLieAlgebra& b, const Mat& P);

struct PermSearchResult {
  std::optional<Mat> witness;
  size_t tested = 0;  // candidate basis changes tried
  bool exhausted = false;  // search space fully covered within budget
};

/// Searches basis changes that permute basis vectors and scale each one:
/// scalars are +-1 over Q and all nonzero residues over GF(p). "No witness"
/// only means none exists in this restricted family within the budget.
PermSearchResult signed_perm_iso(const NLieAlgebra& a, const NLieAlgebra& b, size_t budget = 1000000);

enum class GradedStatus : uint8_t { found, none, exhausted };

struct GradedResult {
  GradedStatus status = GradedStatus::exhausted;
  std::optional<Mat> witness;
  size_t checked = 0;
  std::string note;
};

/// Class-two graded search: invariant separation first (sound "none"), then a
/// constructive route through normal forms, then bounded enumeration of
/// block-triangular candidates over finite fields.
GradedResult graded_iso_search(const NLieAlgebra& a, const NLieAlgebra& b, size_t budget = 1000000);

}  // namespace nlie
