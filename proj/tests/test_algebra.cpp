#include <doctest.h>

#include "nlie/catalog.hpp"
#include "nlie/forms.hpp"
#include "nlie/rng.hpp"

using namespace nlie;

namespace {

const FieldSpec Q = FieldSpec::Q();

NLieAlgebra h31(const FieldSpec& f = Q) { return build(Label::H(3, 1), f); }

Vec unit(const NLieAlgebra& a, int i) { return unit_vec(a.field, a.dim, i - 1); }

}  // namespace

TEST_CASE("bracket evaluation on the Heisenberg table") {
  NLieAlgebra a = h31();
  // [x1, x2, x3] = x (the last basis vector)
  CHECK(bracket(a, {unit(a, 1), unit(a, 2), unit(a, 3)}) == unit(a, 4));
  // repeated argument vanishes
  Vec v = add(unit(a, 1), unit(a, 2));
  CHECK(is_zero_vec(bracket(a, {v, v, unit(a, 3)})));
  // one transposition flips the sign
  Vec lhs = bracket(a, {unit(a, 2), unit(a, 1), unit(a, 3)});
  CHECK(lhs == scale(-Scalar::one(Q), unit(a, 4)));
  CHECK(check_alternating(a));
}

TEST_CASE("bracket is multilinear") {
  SplitMix64 rng(5);
  NLieAlgebra a = build(Label::A(3, 8, 5), FieldSpec::GF(7));
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Vec> args;
    for (int i = 0; i < 3; ++i) {
      Vec v = zero_vec(a.field, a.dim);
      for (auto& x : v) x = random_scalar(a.field, rng);
      args.push_back(v);
    }
    Scalar c = random_scalar(a.field, rng);
    std::vector<Vec> scaled = args;
    scaled[1] = scale(c, scaled[1]);
    CHECK(bracket(a, scaled) == scale(c, bracket(a, args)));
    std::vector<Vec> shifted = args;
    shifted[2] = add(shifted[2], args[0]);  // adding another argument's vector
    // [a0, a1, a2 + a0] = [a0, a1, a2]
    CHECK(bracket(a, shifted) == bracket(a, args));
  }
}

TEST_CASE("Filippov identity checking") {
  SUBCASE("class-two tables pass") {
    for (const auto& f : {Q, FieldSpec::GF(2)}) {
      CHECK(check_filippov(build(Label::A387(), f)).ok);
      CHECK(check_filippov(build(Label::A(3, 8, 7), f)).ok);
      CHECK(check_filippov(build(Label::HplusF(3, 1, 4), f)).ok);
    }
  }
  SUBCASE("hand-made violation is located") {
    NLieAlgebra a = abelian_algebra(2, 3, Q);
    a.set_bracket({1, 2}, unit_vec(Q, 3, 2));  // [e1,e2] = e3
    a.set_bracket({1, 3}, unit_vec(Q, 3, 0));  // [e1,e3] = e1
    FilippovResult r = check_filippov(a);
    REQUIRE_FALSE(r.ok);
    CHECK(r.x == Tuple{1, 2});
    CHECK(r.y == Tuple{3});
  }
  SUBCASE("abelian passes") {
    CHECK(check_filippov(abelian_algebra(3, 5, Q)).ok);
  }
}

TEST_CASE("random class-two tables satisfy the identity") {
  // any alternating table with all values inside the joint kernel is valid
  SplitMix64 rng(31);
  FieldSpec g3 = FieldSpec::GF(3);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 3, d = 6, central = 2;
    NLieAlgebra a = abelian_algebra(n, d, g3);
    for (const auto& t : increasing_tuples(d - central, n)) {
      Vec v = zero_vec(g3, d);
      for (int c = 0; c < central; ++c) v[d - central + c] = random_scalar(g3, rng);
      if (!is_zero_vec(v)) a.set_bracket(t, v);
    }
    Subspace z = center(a);
    Subspace a2 = derived_subalgebra(a);
    REQUIRE(z.contains(a2));
    CHECK(check_filippov(a).ok);
  }
}

TEST_CASE("series, center and class") {
  SUBCASE("abelian") {
    NLieAlgebra f4 = abelian_algebra(3, 4, Q);
    CHECK(center(f4).dim() == 4);
    CHECK(nilpotency_class(f4).kind == NilKind::abelian);
  }
  SUBCASE("A_387 has A^2 = Z of dimension two") {
    NLieAlgebra a = build(Label::A387(), Q);
    Subspace a2 = derived_subalgebra(a), z = center(a);
    CHECK(a2.dim() == 2);
    CHECK(z.dim() == 2);
    CHECK(a2 == z);
    CHECK(a2.contains(unit(a, 7)));
    CHECK(a2.contains(unit(a, 8)));
  }
  SUBCASE("the four-target family has a four-dimensional derived subalgebra") {
    for (int n : {3, 4, 5}) {
      NLieAlgebra a = build(Label::A(n, n + 5, 7), Q);
      CHECK(derived_subalgebra(a).dim() == 4);
      CHECK(nilpotency_class(a) == NilClass{NilKind::nilpotent, 2});
    }
  }
  SUBCASE("the base (n+2)-family is nilpotent of class three") {
    NLieAlgebra a = build(Label::A(3, 5, 1), Q);
    CHECK(nilpotency_class(a) == NilClass{NilKind::nilpotent, 3});
    CHECK_FALSE(is_class_two(a));
  }
  SUBCASE("non-nilpotent is reported") {
    NLieAlgebra a = abelian_algebra(2, 2, Q);
    a.set_bracket({1, 2}, unit_vec(Q, 2, 1));  // [e1,e2] = e2
    CHECK(nilpotency_class(a).kind == NilKind::not_nilpotent);
    CHECK_FALSE(is_class_two(a));
  }
}

TEST_CASE("class two structure") {
  SUBCASE("H(n,1) is class two") {
    CHECK(is_class_two(build(Label::H(3, 1), Q)));
    CHECK(is_class_two(build(Label::H(4, 1), FieldSpec::GF(2))));
  }
  SUBCASE("abelian is not class two") { CHECK_FALSE(is_class_two(abelian_algebra(3, 4, Q))); }
  SUBCASE("class two implies A^3 = 0 and Z_2 = A") {
    for (const auto& label : {Label::A(3, 8, 4), Label::A387(), Label::HplusF(3, 2, 1)}) {
      NLieAlgebra a = build(label, FieldSpec::GF(5));
      SeriesReport sr = series_report(a);
      REQUIRE(sr.nil == NilClass{NilKind::nilpotent, 2});
      CHECK(sr.derived.size() == 3);  // A, A^2, A^3 = 0
      CHECK(sr.derived.back().dim() == 0);
      CHECK(sr.upper.back().dim() == static_cast<size_t>(a.dim));
      CHECK(sr.upper.size() == 3);  // 0, Z, Z_2 = A
    }
  }
}

TEST_CASE("basis change transport") {
  SplitMix64 rng(17);
  SUBCASE("identity fixes the table") {
    NLieAlgebra a = build(Label::A(3, 8, 6), Q);
    CHECK(apply_basis_change(a, Mat::identity(Q, 8)) == a);
  }
  SUBCASE("round trip through P and P^{-1}") {
    for (const auto& f : {FieldSpec::GF(5), Q}) {
      NLieAlgebra a = build(Label::A(3, 8, 2), f);
      Mat P = f.is_rationals() ? random_unimodular_integral(8, rng) : random_invertible(f, 8, rng);
      NLieAlgebra b = apply_basis_change(a, P);
      CHECK(apply_basis_change(b, invert(P)) == a);
    }
  }
  SUBCASE("coarse invariants are preserved") {
    FieldSpec g3 = FieldSpec::GF(3);
    NLieAlgebra a = build(Label::A(4, 9, 5), g3);
    for (int trial = 0; trial < 5; ++trial) {
      NLieAlgebra b = apply_basis_change(a, random_invertible(g3, 9, rng));
      CHECK(derived_subalgebra(b).dim() == derived_subalgebra(a).dim());
      CHECK(center(b).dim() == center(a).dim());
      CHECK(nilpotency_class(b) == nilpotency_class(a));
    }
  }
  SUBCASE("singular matrices are rejected") {
    NLieAlgebra a = build(Label::H(3, 1), Q);
    CHECK_THROWS_AS(apply_basis_change(a, Mat(Q, 4, 4)), SingularError);
  }
}

TEST_CASE("central quotients") {
  SUBCASE("killing one central target of A_387 halves the derived subalgebra") {
    NLieAlgebra a = build(Label::A387(), Q);
    Subspace line = Subspace::span(Q, 8, {unit(a, 8)});
    QuotientResult qr = quotient_central(a, line);
    CHECK(qr.quotient.dim == 7);
    CHECK(derived_subalgebra(qr.quotient).dim() == 1);
  }
  SUBCASE("quotient by the full center of H(n,1) is abelian") {
    NLieAlgebra a = build(Label::H(3, 1), Q);
    QuotientResult qr = quotient_central(a, center(a));
    CHECK(qr.quotient.dim == 3);
    CHECK(qr.quotient.brackets.empty());
  }
  SUBCASE("non-central ideals are rejected") {
    NLieAlgebra a = build(Label::H(3, 1), Q);
    CHECK_THROWS_AS(quotient_central(a, Subspace::span(Q, 4, {unit(a, 1)})), NotCentralError);
  }
  SUBCASE("projection matrix projects") {
    NLieAlgebra a = build(Label::A(3, 8, 1), FieldSpec::GF(5));
    Subspace line = Subspace::span(a.field, 8, {unit(a, 8)});
    QuotientResult qr = quotient_central(a, line);
    CHECK(qr.projection.rows() == 7);
    CHECK(is_zero_vec(mat_vec(qr.projection, unit(a, 8))));
  }
}

TEST_CASE("direct sums") {
  SUBCASE("zero summand is neutral") {
    NLieAlgebra a = build(Label::A(3, 8, 4), Q);
    CHECK(direct_sum(a, abelian_algebra(3, 0, Q)) == a);
  }
  SUBCASE("H(3,1) + F(4)") {
    NLieAlgebra s = direct_sum(h31(), abelian_algebra(3, 4, Q));
    CHECK(s.dim == 8);
    CHECK(derived_subalgebra(s).dim() == 1);
    CHECK(center(s).dim() == 5);
  }
  SUBCASE("sum of abelians is abelian") {
    NLieAlgebra s = direct_sum(abelian_algebra(3, 2, Q), abelian_algebra(3, 3, Q));
    CHECK(s.dim == 5);
    CHECK(s.brackets.empty());
  }
  SUBCASE("center and derived split across summands") {
    FieldSpec g5 = FieldSpec::GF(5);
    NLieAlgebra a = build(Label::H(3, 1), g5);
    NLieAlgebra b = build(Label::A(3, 8, 6), g5);
    NLieAlgebra s = direct_sum(a, b);
    CHECK(derived_subalgebra(s).dim() == derived_subalgebra(a).dim() + derived_subalgebra(b).dim());
    CHECK(center(s).dim() == center(a).dim() + center(b).dim());
  }
}

TEST_CASE("central extensions") {
  SUBCASE("zero cocycle appends an abelian line") {
    NLieAlgebra q = build(Label::A(3, 7, 1), Q);
    NLieAlgebra e = central_extension(q, {});
    CHECK(e == direct_sum(q, abelian_algebra(3, 1, Q)));
  }
  SUBCASE("the two one-coefficient extensions of the H(n,1)+F(3) presentation") {
    for (int n : {3, 4}) {
      // presentation with the block target last: [e1..en] = e_{n+4}
      NLieAlgebra q = abelian_algebra(n, n + 4, Q);
      Tuple block;
      for (int i = 1; i <= n; ++i) block.push_back(i);
      q.set_bracket(block, unit_vec(Q, n + 4, n + 3));
      {
        Tuple t;  // (2, .., n+1)
        for (int i = 2; i <= n + 1; ++i) t.push_back(i);
        NLieAlgebra e = central_extension(q, {{t, Scalar::one(Q)}});
        CHECK(e.brackets == build(Label::A(n, n + 5, 1), Q).brackets);
      }
      {
        Tuple t;  // (3, .., n+2)
        for (int i = 3; i <= n + 2; ++i) t.push_back(i);
        NLieAlgebra e = central_extension(q, {{t, Scalar::one(Q)}});
        CHECK(e.brackets == build(Label::A(n, n + 5, 2), Q).brackets);
      }
    }
  }
  SUBCASE("quotient by the new line recovers the base") {
    SplitMix64 rng(23);
    FieldSpec g2 = FieldSpec::GF(2);
    NLieAlgebra q = build(Label::HplusF(3, 1, 3), g2);
    for (int trial = 0; trial < 20; ++trial) {
      std::map<Tuple, Scalar> cocycle;
      for (const auto& t : increasing_tuples(q.dim, q.arity)) {
        Scalar c = random_scalar(g2, rng);
        if (!c.is_zero()) cocycle[t] = c;
      }
      NLieAlgebra e = central_extension(q, cocycle);
      Subspace line = Subspace::span(g2, e.dim, {unit_vec(g2, e.dim, e.dim - 1)});
      if (!center(e).contains(line.basis_vector(0))) continue;  // cocycle broke centrality upstream
      QuotientResult qr = quotient_central(e, line);
      CHECK(qr.quotient == q);
    }
  }
}
