#pragma once

#include "nlie/algebra.hpp"

namespace nlie {

struct InvalidParametersError : NLieError {
  using NLieError::NLieError;
};

/// L7(3)'s table as written assigns [e3,e4] twice; callers must pick a
/// documented reading before it can be built.
struct DisputedEntryError : NLieError {
  using NLieError::NLieError;
};

/// Catalog identity. Families:
///   Abelian(d)            abelian of dimension d (arity carried alongside)
///   H(n,m)                special Heisenberg, dimension mn+1
///   HplusF(n,m,k)         H(n,m) + abelian F(k)
///   A(n,d,k)              two/three/four-bracket families, n+2 <= d <= n+5
///   A381 / A387           the two index conventions for the 3-Lie dim-8
///                         algebra with disjoint triple blocks
///   L7(i), i=1..10        7-dimensional 2-Lie entries (verification only)
///   L5_2Lie               the 5-dimensional 2-Lie algebra [x1,x2]=x4, [x1,x3]=x5
struct Label {
  enum class Kind : uint8_t { Abelian, H, HplusF, A, A381, A387, L7, L5_2Lie };

  Kind kind = Kind::Abelian;
  int n = 0;  // arity (Abelian: ambient arity for construction)
  int m = 0;  // H block count
  int k = 0;  // F dimension (HplusF) or family index (A)
  int d = 0;  // dimension (Abelian, A)
  int i = 0;  // L7 row
  int l7_reading = 0;  // 0 undecided, 1 reading A, 2 reading B

  static Label Abelian(int arity, int dim);
  static Label H(int n, int m);
  static Label HplusF(int n, int m, int k);
  static Label A(int n, int d, int k);
  static Label A381();
  static Label A387();
  static Label L7(int i, int reading = 0);
  static Label L5_2Lie();

  bool operator==(const Label& o) const;
  std::string to_string() const;
  /// Parses the to_string format; abelian labels get arity from the hint.
  static Label parse(const std::string& s, int arity_hint = 0);
};

/// Exact multiplication table for the label over the chosen field,
/// deterministic basis order with central targets last.
NLieAlgebra build(const Label& label, const FieldSpec& field);

struct CatalogList {
  std::vector<Label> labels;
  bool complete = false;  // true when the class-two list for (n, d) is known in full
};

/// Known class-two algebras of arity n and dimension d; flagged complete when
/// the classification gives the full list for that (n, d).
CatalogList list_for(int n, int d);

}  // namespace nlie
