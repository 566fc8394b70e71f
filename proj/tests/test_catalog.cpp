#include <doctest.h>

#include "nlie/catalog.hpp"
#include "nlie/invariants.hpp"

using namespace nlie;

namespace {
const FieldSpec Q = FieldSpec::Q();

std::vector<Label> entries_for(int n) {
  std::vector<Label> out;
  out.push_back(Label::Abelian(n, n));
  for (int d = n + 1; d <= n + 5; ++d)
    for (const auto& l : list_for(n, d).labels) out.push_back(l);
  // base entries outside the class-two lists
  out.push_back(Label::A(n, n + 2, 1));
  if (n == 2) {
    out.push_back(Label::L7(3, 1));
    out.push_back(Label::L7(3, 2));
  }
  return out;
}
}  // namespace

TEST_CASE("catalog tables are valid alternating tables") {
  for (int n : {2, 3, 4}) {
    for (const auto& label : entries_for(n)) {
      if (label.kind == Label::Kind::L7 && label.i == 3 && label.l7_reading == 0) continue;
      NLieAlgebra a = build(label, Q);
      CAPTURE(label.to_string());
      CHECK(check_alternating(a));
      CHECK(check_filippov(a).ok);
    }
  }
}

TEST_CASE("specific tables match their defining presentations") {
  SUBCASE("H(3,2) has two blocks hitting the last coordinate") {
    NLieAlgebra a = build(Label::H(3, 2), Q);
    CHECK(a.dim == 7);
    REQUIRE(a.brackets.size() == 2);
    CHECK(*a.find_bracket({1, 2, 3}) == unit_vec(Q, 7, 6));
    CHECK(*a.find_bracket({4, 5, 6}) == unit_vec(Q, 7, 6));
  }
  SUBCASE("A(3,8,4) rows") {
    NLieAlgebra a = build(Label::A(3, 8, 4), Q);
    REQUIRE(a.brackets.size() == 3);
    CHECK(*a.find_bracket({1, 2, 3}) == unit_vec(Q, 8, 5));
    CHECK(*a.find_bracket({2, 3, 4}) == unit_vec(Q, 8, 6));
    CHECK(*a.find_bracket({1, 3, 4}) == unit_vec(Q, 8, 7));
  }
  SUBCASE("abelian zero-dimensional") {
    NLieAlgebra a = build(Label::Abelian(3, 0), Q);
    CHECK(a.dim == 0);
    CHECK(a.brackets.empty());
  }
  SUBCASE("HplusF equals the direct sum exactly") {
    for (auto [n, m, k] : std::vector<std::array<int, 3>>{{3, 1, 4}, {3, 2, 1}, {4, 1, 4}}) {
      NLieAlgebra lhs = build(Label::HplusF(n, m, k), Q);
      NLieAlgebra rhs = direct_sum(build(Label::H(n, m), Q), build(Label::Abelian(n, k), Q));
      CHECK(lhs.brackets == rhs.brackets);
      CHECK(lhs.dim == rhs.dim);
    }
  }
}

TEST_CASE("catalog parameter validation") {
  CHECK_THROWS_AS(build(Label::A(3, 8, 3), Q), InvalidParametersError);   // k=3 needs n >= 4
  CHECK_THROWS_AS(build(Label::A(2, 7, 2), Q), InvalidParametersError);   // k=2 needs n >= 3
  CHECK_THROWS_AS(build(Label::A(2, 7, 7), Q), InvalidParametersError);   // k=7 needs n >= 3
  CHECK_THROWS_AS(build(Label::A(3, 9, 1), Q), InvalidParametersError);   // d out of range
  CHECK_THROWS_AS(build(Label::H(3, 0), Q), InvalidParametersError);
  CHECK_THROWS_AS(build(Label::L7(11), Q), InvalidParametersError);
  CHECK_NOTHROW(build(Label::A(4, 9, 3), Q));
}

TEST_CASE("L7(3) is refused without a documented reading") {
  CHECK_THROWS_AS(build(Label::L7(3), Q), DisputedEntryError);
  NLieAlgebra ra = build(Label::L7(3, 1), Q);
  CHECK(ra.brackets.size() == 3);
  NLieAlgebra rb = build(Label::L7(3, 2), Q);
  CHECK(rb.brackets == build(Label::L7(4), Q).brackets);  // reading B duplicates L7(4)
}

TEST_CASE("list_for matches the classification lists") {
  SUBCASE("(4, 9): nine labels") {
    CatalogList cl = list_for(4, 9);
    CHECK(cl.complete);
    REQUIRE(cl.labels.size() == 9);
    CHECK(cl.labels[0] == Label::HplusF(4, 1, 4));
    CHECK(cl.labels[1] == Label::H(4, 2));
    for (int k = 1; k <= 7; ++k) CHECK(cl.labels[1 + k] == Label::A(4, 9, k));
  }
  SUBCASE("(3, 8): nine labels including the disjoint-block pair representative") {
    CatalogList cl = list_for(3, 8);
    CHECK(cl.complete);
    CHECK(cl.labels.size() == 9);
    bool has_387 = false, has_h32f1 = false;
    for (const auto& l : cl.labels) {
      has_387 = has_387 || l == Label::A387();
      has_h32f1 = has_h32f1 || l == Label::HplusF(3, 2, 1);
    }
    CHECK(has_387);
    CHECK(has_h32f1);
  }
  SUBCASE("(5, 10): eight labels") { CHECK(list_for(5, 10).labels.size() == 8); }
  SUBCASE("(3, 3): abelian only") {
    CatalogList cl = list_for(3, 3);
    REQUIRE(cl.labels.size() == 1);
    CHECK(cl.labels[0] == Label::Abelian(3, 3));
  }
  SUBCASE("(2, 7): the 7-dimensional list") {
    CatalogList cl = list_for(2, 7);
    CHECK(cl.complete);
    CHECK(cl.labels.size() == 13);  // three H-entries + L7(1..10)
  }
  SUBCASE("(3, 6) is flagged possibly incomplete") {
    CatalogList cl = list_for(3, 6);
    CHECK_FALSE(cl.complete);
  }
  SUBCASE("(3, 7): the stated five-entry list") {
    CatalogList cl = list_for(3, 7);
    CHECK(cl.complete);
    REQUIRE(cl.labels.size() == 5);
  }
}

TEST_CASE("catalog entries carry the documented invariants") {
  for (int n : {3, 4, 5}) {
    const int d = n + 5;
    struct Expect {
      Label label;
      int dim_a2, dim_z;
    };
    std::vector<Expect> table = {
        {Label::A(n, d, 1), 2, 4}, {Label::A(n, d, 2), 2, 3}, {Label::A(n, d, 4), 3, 4},
        {Label::A(n, d, 5), 3, 3}, {Label::A(n, d, 6), 3, 3}, {Label::A(n, d, 7), 4, 4},
        {Label::HplusF(n, 1, 4), 1, 5},
    };
    if (n >= 4) table.push_back({Label::A(n, d, 3), 2, 2});
    for (const auto& e : table) {
      NLieAlgebra a = build(e.label, Q);
      CAPTURE(e.label.to_string());
      CHECK(static_cast<int>(derived_subalgebra(a).dim()) == e.dim_a2);
      CHECK(static_cast<int>(center(a).dim()) == e.dim_z);
      CHECK(is_class_two(a));
    }
  }
  NLieAlgebra a387 = build(Label::A387(), Q);
  CHECK(derived_subalgebra(a387).dim() == 2);
  CHECK(center(a387) == derived_subalgebra(a387));
}

TEST_CASE("label strings round-trip") {
  std::vector<Label> labels = {Label::Abelian(3, 4),    Label::H(4, 2),  Label::HplusF(3, 1, 4),
                               Label::A(5, 10, 6),      Label::A381(),   Label::A387(),
                               Label::L7(9),            Label::L5_2Lie()};
  for (const auto& l : labels) {
    CAPTURE(l.to_string());
    CHECK(Label::parse(l.to_string(), l.n) == l);
  }
  CHECK_THROWS_AS(Label::parse("Z(3)"), InvalidParametersError);
}
