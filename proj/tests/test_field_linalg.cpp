#include <doctest.h>

#include "nlie/rng.hpp"
#include "nlie/subspace.hpp"

using namespace nlie;

namespace {

Mat mat_of(const FieldSpec& f, std::vector<std::vector<long>> rows) {
  Mat m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Scalar::from_int(f, rows[i][j]);
  return m;
}

Vec vec_of(const FieldSpec& f, std::vector<long> v) {
  Vec out;
  for (long x : v) out.push_back(Scalar::from_int(f, x));
  return out;
}

}  // namespace

TEST_CASE("scalar strings and parsing") {
  FieldSpec q = FieldSpec::Q();
  CHECK(Scalar::parse(q, "3/6").to_string() == "1/2");
  CHECK(Scalar::parse(q, "-4/2").to_string() == "-2");
  CHECK(Scalar::parse(q, "7").to_string() == "7");
  CHECK_THROWS_AS(Scalar::parse(q, "1/0"), FieldError);
  FieldSpec g5 = FieldSpec::GF(5);
  CHECK(Scalar::parse(g5, "12").to_string() == "2");
  CHECK_THROWS_AS(FieldSpec::GF(4), FieldError);
  CHECK(FieldSpec::parse("GF(7)") == FieldSpec::GF(7));
  CHECK(FieldSpec::parse("Q") == q);
}

TEST_CASE("field axioms on randomized scalars") {
  std::vector<FieldSpec> fields = {FieldSpec::Q(), FieldSpec::GF(2), FieldSpec::GF(3),
                                   FieldSpec::GF(5), FieldSpec::GF(7)};
  SplitMix64 rng(101);
  for (const auto& f : fields) {
    for (int trial = 0; trial < 200; ++trial) {
      Scalar a = random_scalar(f, rng, 7), b = random_scalar(f, rng, 7), c = random_scalar(f, rng, 7);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == Scalar::zero(f));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
    }
  }
}

TEST_CASE("rref examples") {
  FieldSpec q = FieldSpec::Q();
  SUBCASE("identity is fixed") {
    Mat id = Mat::identity(q, 3);
    RrefResult r = rref(id);
    CHECK(r.rank == 3);
    CHECK(r.m == id);
  }
  SUBCASE("zero matrix") {
    Mat z(q, 2, 4);
    RrefResult r = rref(z);
    CHECK(r.rank == 0);
    CHECK(r.m == z);
  }
  SUBCASE("rank-one reduction") {
    RrefResult r = rref(mat_of(q, {{2, 4}, {1, 2}}));
    CHECK(r.rank == 1);
    CHECK(r.m == mat_of(q, {{1, 2}, {0, 0}}));
  }
}

TEST_CASE("rref properties on random matrices") {
  SplitMix64 rng(2024);
  for (const auto& f : {FieldSpec::Q(), FieldSpec::GF(5)}) {
    for (int trial = 0; trial < 30; ++trial) {
      size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
      Mat m(f, rows, cols);
      for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(f, rng);
      RrefResult r = rref(m);
      CHECK(rref(r.m).m == r.m);          // idempotent
      CHECK(rank(r.m) == r.rank);          // rank preserved
      Mat ns = nullspace_basis(m);
      CHECK(ns.rows() + r.rank == cols);   // rank-nullity
      for (size_t i = 0; i < ns.rows(); ++i) CHECK(is_zero_vec(mat_vec(m, ns.row(i))));
    }
  }
}

TEST_CASE("nullspace examples") {
  FieldSpec q = FieldSpec::Q();
  CHECK(nullspace_basis(Mat::identity(q, 3)).rows() == 0);
  CHECK(nullspace_basis(Mat(q, 3, 3)).rows() == 3);
  FieldSpec g2 = FieldSpec::GF(2);
  Mat m = mat_of(g2, {{1, 1, 0}});
  Subspace ker = Subspace::from_rref(nullspace_basis(m));
  CHECK(ker.dim() == 2);
  CHECK(ker.contains(vec_of(g2, {1, 1, 0})));
  // oracle: enumerate all 8 vectors of GF(2)^3
  int solutions = 0;
  for (int bits = 0; bits < 8; ++bits) {
    Vec v = vec_of(g2, {bits & 1, (bits >> 1) & 1, (bits >> 2) & 1});
    if (is_zero_vec(mat_vec(m, v))) {
      ++solutions;
      CHECK(ker.contains(v));
    }
  }
  CHECK(solutions == 4);  // 2^dim
}

TEST_CASE("inversion examples") {
  FieldSpec q = FieldSpec::Q();
  CHECK(invert(Mat::identity(q, 4)) == Mat::identity(q, 4));
  FieldSpec g5 = FieldSpec::GF(5);
  Mat two(g5, 1, 1);
  two.at(0, 0) = Scalar::from_int(g5, 2);
  CHECK(invert(two).at(0, 0) == Scalar::from_int(g5, 3));  // 2 * 3 = 6 = 1 mod 5
  Mat shear = mat_of(q, {{1, 1}, {0, 1}});
  CHECK(invert(shear) == mat_of(q, {{1, -1}, {0, 1}}));
  CHECK_THROWS_AS(invert(mat_of(q, {{1, 2}, {2, 4}})), SingularError);
}

TEST_CASE("double inversion on random invertible matrices over GF(5)") {
  SplitMix64 rng(7);
  FieldSpec g5 = FieldSpec::GF(5);
  for (int trial = 0; trial < 25; ++trial) {
    Mat m = random_invertible(g5, 4, rng);
    CHECK(invert(invert(m)) == m);
    CHECK(mat_mul(m, invert(m)) == Mat::identity(g5, 4));
  }
}

TEST_CASE("subspace lattice") {
  FieldSpec g2 = FieldSpec::GF(2);
  Subspace s = Subspace::span(g2, 3, {vec_of(g2, {1, 0, 0}), vec_of(g2, {1, 1, 0})});
  SUBCASE("sum is idempotent") { CHECK(sum(s, s) == s); }
  SUBCASE("intersection with the full space") {
    CHECK(intersect(Subspace::full(g2, 3), s) == s);
  }
  SUBCASE("intersection example over GF(2)^3") {
    Subspace t = Subspace::span(g2, 3, {vec_of(g2, {0, 1, 0}), vec_of(g2, {0, 0, 1})});
    Subspace meet = intersect(s, t);
    CHECK(meet.dim() == 1);
    CHECK(meet.contains(vec_of(g2, {0, 1, 0})));
    // oracle: enumerate GF(2)^3
    for (int bits = 0; bits < 8; ++bits) {
      Vec v = vec_of(g2, {bits & 1, (bits >> 1) & 1, (bits >> 2) & 1});
      CHECK(meet.contains(v) == (s.contains(v) && t.contains(v)));
    }
  }
  SUBCASE("complement basis extends to the full space") {
    auto comp = s.complement_basis();
    CHECK(comp.size() == 1);
    std::vector<Vec> all = {s.basis_vector(0), s.basis_vector(1), comp[0]};
    CHECK(Subspace::span(g2, 3, all).dim() == 3);
  }
}

TEST_CASE("subspace canonical form is unique") {
  SplitMix64 rng(99);
  for (const auto& f : {FieldSpec::Q(), FieldSpec::GF(3)}) {
    for (int trial = 0; trial < 20; ++trial) {
      size_t ambient = 4 + rng.below(3);
      std::vector<Vec> gens;
      for (int i = 0; i < 3; ++i) {
        Vec v = zero_vec(f, ambient);
        for (auto& x : v) x = random_scalar(f, rng);
        gens.push_back(v);
      }
      Subspace s1 = Subspace::span(f, ambient, gens);
      // random invertible recombination of the generators spans the same space
      Mat mix = random_invertible(f, gens.size(), rng);
      std::vector<Vec> mixed;
      for (size_t i = 0; i < gens.size(); ++i) {
        Vec v = zero_vec(f, ambient);
        for (size_t j = 0; j < gens.size(); ++j) v = axpy(v, mix.at(i, j), gens[j]);
        mixed.push_back(v);
      }
      CHECK(Subspace::span(f, ambient, mixed) == s1);
    }
  }
}
