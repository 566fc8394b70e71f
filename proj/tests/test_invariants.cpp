#include <doctest.h>

#include "nlie/invariants.hpp"
#include "nlie/catalog.hpp"
#include "nlie/rng.hpp"

using namespace nlie;

namespace {
const FieldSpec Q = FieldSpec::Q();
const FieldSpec G2 = FieldSpec::GF(2);
}  // namespace

TEST_CASE("fingerprint examples") {
  SUBCASE("A(3,8,5) over GF(2) has pair (3,3)") {
    Fingerprint fp = fingerprint(build(Label::A(3, 8, 5), G2));
    CHECK(fp.dim_derived == 3);
    CHECK(fp.dim_center == 3);
  }
  SUBCASE("A(3,8,4) over GF(2) has pair (3,4)") {
    Fingerprint fp = fingerprint(build(Label::A(3, 8, 4), G2));
    CHECK(fp.dim_derived == 3);
    CHECK(fp.dim_center == 4);
  }
  SUBCASE("abelian of dimension 8") {
    Fingerprint fp = fingerprint(abelian_algebra(3, 8, G2));
    CHECK(fp.nil.kind == NilKind::abelian);
    CHECK(fp.dim_derived == 0);
  }
  SUBCASE("integral tables over Q get reduction profiles") {
    Fingerprint fp = fingerprint(build(Label::A(3, 8, 5), Q));
    REQUIRE(fp.profiles.size() == 2);
    CHECK(fp.profiles[0].first == 2);
    CHECK(fp.profiles[1].first == 3);
  }
}

TEST_CASE("ad-rank profile separates the one catalog collision") {
  Fingerprint f5 = fingerprint(build(Label::A(3, 8, 5), G2));
  Fingerprint f6 = fingerprint(build(Label::A(3, 8, 6), G2));
  CHECK(f5.dim_derived == f6.dim_derived);
  CHECK(f5.dim_center == f6.dim_center);
  REQUIRE(f5.profiles.size() == 1);
  REQUIRE(f6.profiles.size() == 1);
  long total5 = 0;
  for (const auto& [r, c] : f5.profiles[0].second) total5 += c;
  CHECK(total5 == 255);  // all projective points of GF(2)^8
  CHECK_FALSE(f5.profiles[0].second == f6.profiles[0].second);
  CHECK_FALSE(f5 == f6);
}

TEST_CASE("fingerprints are invariant under basis changes") {
  SplitMix64 rng(12);
  // coarse components: every (n, n+5)-list entry for n in {3, 4}, three fields
  FingerprintOptions coarse;
  coarse.with_profile = false;
  for (int n : {3, 4}) {
    for (const auto& f : {FieldSpec::GF(2), FieldSpec::GF(3), FieldSpec::GF(5)}) {
      for (const auto& label : list_for(n, n + 5).labels) {
        NLieAlgebra a = build(label, f);
        Fingerprint base = fingerprint(a, coarse);
        for (int trial = 0; trial < 8; ++trial) {
          NLieAlgebra b = apply_basis_change(a, random_invertible(f, a.dim, rng));
          CHECK(fingerprint(b, coarse) == base);
        }
      }
    }
  }
  // profile component where the projective sweep is certified feasible
  for (const auto& f : {FieldSpec::GF(2), FieldSpec::GF(3)}) {
    for (const auto& label : {Label::A(3, 8, 1), Label::A(3, 8, 5), Label::A(3, 8, 6), Label::A387()}) {
      NLieAlgebra a = build(label, f);
      Fingerprint base = fingerprint(a);
      REQUIRE_FALSE(base.profiles.empty());
      for (int trial = 0; trial < 4; ++trial) {
        NLieAlgebra b = apply_basis_change(a, random_invertible(f, a.dim, rng));
        CHECK(fingerprint(b) == base);
      }
    }
  }
}

TEST_CASE("the central swap witnesses the A_381 / A_387 pair directly") {
  NLieAlgebra a = build(Label::A381(), Q);
  NLieAlgebra b = build(Label::A387(), Q);
  Mat swap78 = Mat::identity(Q, 8);
  swap78.at(6, 6) = Scalar::zero(Q);
  swap78.at(7, 7) = Scalar::zero(Q);
  swap78.at(7, 6) = Scalar::one(Q);
  swap78.at(6, 7) = Scalar::one(Q);
  CHECK(verify_witness(a, b, swap78).ok);
}

TEST_CASE("witness verification") {
  SUBCASE("identity on equal tables") {
    NLieAlgebra a = build(Label::A(3, 8, 2), Q);
    CHECK(verify_witness(a, a, Mat::identity(Q, 8)).ok);
  }
  SUBCASE("the central shear maps the mixed-target table onto the disjoint pair") {
    // table [e4,e5,e6] = e8, [e1,e2,e3] = e8 + e7, sheared by e7 -> e7 + e8
    NLieAlgebra t = abelian_algebra(3, 8, Q);
    t.set_bracket({4, 5, 6}, unit_vec(Q, 8, 7));
    Vec both = add(unit_vec(Q, 8, 7), unit_vec(Q, 8, 6));
    t.set_bracket({1, 2, 3}, both);
    Mat shear = Mat::identity(Q, 8);
    shear.at(7, 6) = Scalar::one(Q);  // column 7 becomes e7 + e8
    CHECK(verify_witness(t, build(Label::A387(), Q), shear).ok);
  }
  SUBCASE("a perturbed witness is rejected with a cited tuple") {
    NLieAlgebra a = build(Label::A387(), Q);
    Mat p = Mat::identity(Q, 8);
    p.at(3, 2) = Scalar::one(Q);  // shear across the two blocks
    WitnessCheck wc = verify_witness(a, a, p);
    CHECK_FALSE(wc.ok);
    CHECK_FALSE(wc.differing.empty());
  }
  SUBCASE("singular matrices throw") {
    NLieAlgebra a = build(Label::A387(), Q);
    CHECK_THROWS_AS(verify_witness(a, a, Mat(Q, 8, 8)), SingularError);
  }
}

TEST_CASE("signed permutation search") {
  SUBCASE("identity witness on equal tables") {
    NLieAlgebra a = build(Label::A(3, 8, 5), Q);
    PermSearchResult r = signed_perm_iso(a, a);
    REQUIRE(r.witness.has_value());
    CHECK(verify_witness(a, a, *r.witness).ok);
  }
  SUBCASE("the two disjoint-block presentations differ by a central swap") {
    NLieAlgebra a = build(Label::A381(), Q);
    NLieAlgebra b = build(Label::A387(), Q);
    PermSearchResult r = signed_perm_iso(a, b, 100000);
    REQUIRE(r.witness.has_value());
    CHECK(verify_witness(a, b, *r.witness).ok);
  }
  SUBCASE("target-permuted tables are matched") {
    for (int n : {3, 4}) {
      // [e1..en] = e_{n+3}, [e3..e_{n+2}] = e_{n+4}, [e2..en, e_{n+1}] = e_{n+5}
      NLieAlgebra t = abelian_algebra(n, n + 5, Q);
      Tuple t1, t2, t3;
      for (int i = 1; i <= n; ++i) t1.push_back(i);
      for (int i = 3; i <= n + 2; ++i) t2.push_back(i);
      for (int i = 2; i <= n; ++i) t3.push_back(i);
      t3.push_back(n + 1);
      t.set_bracket(t1, unit_vec(Q, n + 5, n + 2));
      t.set_bracket(t2, unit_vec(Q, n + 5, n + 3));
      t.set_bracket(t3, unit_vec(Q, n + 5, n + 4));
      PermSearchResult r = signed_perm_iso(t, build(Label::A(n, n + 5, 6), Q), 100000);
      REQUIRE(r.witness.has_value());
      CHECK(verify_witness(t, build(Label::A(n, n + 5, 6), Q), *r.witness).ok);
    }
  }
}

TEST_CASE("graded isomorphism search") {
  SUBCASE("an algebra is isomorphic to itself") {
    NLieAlgebra a = build(Label::A(3, 8, 1), G2);
    GradedResult r = graded_iso_search(a, a);
    REQUIRE(r.status == GradedStatus::found);
    CHECK(verify_witness(a, a, *r.witness).ok);
  }
  SUBCASE("a random conjugate is recognized over GF(2)") {
    SplitMix64 rng(77);
    NLieAlgebra a = build(Label::A(3, 8, 1), G2);
    NLieAlgebra b = apply_basis_change(a, random_invertible(G2, 8, rng));
    GradedResult r = graded_iso_search(a, b);
    REQUIRE(r.status == GradedStatus::found);
    CHECK(verify_witness(a, b, *r.witness).ok);
  }
  SUBCASE("fingerprint separation gives a certain negative") {
    NLieAlgebra a = build(Label::A(3, 8, 4), G2);
    NLieAlgebra b = build(Label::A(3, 8, 7), G2);
    GradedResult r = graded_iso_search(a, b);
    CHECK(r.status == GradedStatus::none);
  }
}

TEST_CASE("every returned witness verifies") {
  SplitMix64 rng(3);
  for (const auto& label : {Label::A(3, 8, 5), Label::A(3, 8, 6)}) {
    NLieAlgebra a = build(label, FieldSpec::GF(3));
    NLieAlgebra b = apply_basis_change(a, random_invertible(FieldSpec::GF(3), 8, rng));
    GradedResult r = graded_iso_search(a, b);
    REQUIRE(r.status == GradedStatus::found);
    CHECK(verify_witness(a, b, *r.witness).ok);
  }
}
