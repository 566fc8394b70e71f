#include <doctest.h>

#include "nlie/catalog.hpp"
#include "nlie/io.hpp"

using namespace nlie;

namespace {
const FieldSpec Q = FieldSpec::Q();
}

TEST_CASE("emit then parse then emit is byte-identical") {
  for (const auto& label : {Label::A387(), Label::A(4, 9, 7), Label::HplusF(3, 1, 4)}) {
    for (const auto& f : {Q, FieldSpec::GF(5)}) {
      NLieAlgebra a = build(label, f);
      std::string once = emit_algebra(a);
      NLieAlgebra parsed = parse_algebra(once);
      CHECK(parsed.brackets == a.brackets);
      CHECK(emit_algebra(parsed) == once);
    }
  }
}

TEST_CASE("rational coefficients survive the round trip") {
  NLieAlgebra a = abelian_algebra(3, 4, Q);
  Vec v = zero_vec(Q, 4);
  v[3] = Scalar::parse(Q, "-7/3");
  a.set_bracket({1, 2, 3}, v);
  NLieAlgebra b = parse_algebra(emit_algebra(a));
  CHECK(b.brackets == a.brackets);
}

TEST_CASE("parse diagnostics") {
  CHECK_THROWS_AS(parse_algebra("{"), ParseError);
  CHECK_THROWS_AS(parse_algebra(R"({"dim": 3})"), ParseError);
  // missing field, no fallback
  CHECK_THROWS_AS(parse_algebra(R"({"arity": 2, "dim": 3, "brackets": []})"), ParseError);
  // fallback applies
  NLieAlgebra a = parse_algebra(R"({"arity": 2, "dim": 3, "brackets": []})", Q);
  CHECK(a.field == Q);
  // non-increasing args
  CHECK_THROWS_AS(parse_algebra(
                      R"({"arity": 2, "dim": 3, "field": "Q",
                          "brackets": [{"args": [2, 1], "value": {"3": "1"}}]})"),
                  ParseError);
  // duplicate args entries
  CHECK_THROWS_AS(parse_algebra(
                      R"({"arity": 2, "dim": 3, "field": "Q",
                          "brackets": [{"args": [1, 2], "value": {"3": "1"}},
                                        {"args": [1, 2], "value": {"3": "2"}}]})"),
                  ParseError);
  // bad scalar string
  CHECK_THROWS_AS(parse_algebra(
                      R"json({"arity": 2, "dim": 3, "field": "GF(5)",
                          "brackets": [{"args": [1, 2], "value": {"3": "x"}}]})json"),
                  ParseError);
  // out-of-range coordinate
  CHECK_THROWS_AS(parse_algebra(
                      R"({"arity": 2, "dim": 3, "field": "Q",
                          "brackets": [{"args": [1, 2], "value": {"4": "1"}}]})"),
                  ParseError);
}

TEST_CASE("field reinterpretation is restricted to integral tables") {
  NLieAlgebra a = build(Label::A387(), Q);
  NLieAlgebra b = reinterpret_field(a, FieldSpec::GF(2));
  CHECK(b.field == FieldSpec::GF(2));
  CHECK(b.brackets.size() == a.brackets.size());
  NLieAlgebra frac = abelian_algebra(3, 4, Q);
  Vec v = zero_vec(Q, 4);
  v[3] = Scalar::parse(Q, "1/2");
  frac.set_bracket({1, 2, 3}, v);
  CHECK_THROWS_AS(reinterpret_field(frac, FieldSpec::GF(3)), FieldError);
}

TEST_CASE("digest is stable") {
  NLieAlgebra a = build(Label::A387(), Q);
  CHECK(algebra_digest(a) == algebra_digest(a));
  CHECK(algebra_digest(a).size() == 16);
  CHECK(algebra_digest(a) != algebra_digest(build(Label::A381(), Q)));
}
