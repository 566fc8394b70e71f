#include "nlie/catalog.hpp"

#include <sstream>

namespace nlie {

Label Label::Abelian(int arity, int dim) {
  Label l;
  l.kind = Kind::Abelian;
  l.n = arity;
  l.d = dim;
  return l;
}
Label Label::H(int n, int m) {
  Label l;
  l.kind = Kind::H;
  l.n = n;
  l.m = m;
  return l;
}
Label Label::HplusF(int n, int m, int k) {
  if (k == 0) return H(n, m);
  Label l;
  l.kind = Kind::HplusF;
  l.n = n;
  l.m = m;
  l.k = k;
  return l;
}
Label Label::A(int n, int d, int k) {
  Label l;
  l.kind = Kind::A;
  l.n = n;
  l.d = d;
  l.k = k;
  return l;
}
Label Label::A381() {
  Label l;
  l.kind = Kind::A381;
  l.n = 3;
  l.d = 8;
  return l;
}
Label Label::A387() {
  Label l;
  l.kind = Kind::A387;
  l.n = 3;
  l.d = 8;
  return l;
}
Label Label::L7(int i, int reading) {
  Label l;
  l.kind = Kind::L7;
  l.n = 2;
  l.d = 7;
  l.i = i;
  l.l7_reading = reading;
  return l;
}
Label Label::L5_2Lie() {
  Label l;
  l.kind = Kind::L5_2Lie;
  l.n = 2;
  l.d = 5;
  return l;
}

bool Label::operator==(const Label& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Abelian: return n == o.n && d == o.d;
    case Kind::H: return n == o.n && m == o.m;
    case Kind::HplusF: return n == o.n && m == o.m && k == o.k;
    case Kind::A: return n == o.n && d == o.d && k == o.k;
    case Kind::L7: return i == o.i;
    default: return true;
  }
}

std::string Label::to_string() const {
  std::ostringstream s;
  switch (kind) {
    case Kind::Abelian: s << "F(" << d << ")"; break;
    case Kind::H: s << "H(" << n << "," << m << ")"; break;
    case Kind::HplusF: s << "H(" << n << "," << m << ")+F(" << k << ")"; break;
    case Kind::A: s << "A(" << n << "," << d << "," << k << ")"; break;
    case Kind::A381: s << "A_381"; break;
    case Kind::A387: s << "A_387"; break;
    case Kind::L7: s << "L7(" << i << ")"; break;
    case Kind::L5_2Lie: s << "L5_2Lie"; break;
  }
  return s.str();
}

static std::vector<int> parse_int_list(const std::string& s, size_t from, size_t to) {
  std::vector<int> out;
  std::string body = s.substr(from, to - from);
  std::istringstream is(body);
  std::string part;
  while (std::getline(is, part, ',')) out.push_back(std::stoi(part));
  return out;
}

Label Label::parse(const std::string& s, int arity_hint) {
  auto bad = [&]() -> Label { throw InvalidParametersError("unrecognized label: " + s); };
  if (s == "A_381") return A381();
  if (s == "A_387") return A387();
  if (s == "L5_2Lie") return L5_2Lie();
  if (s.rfind("L7(", 0) == 0 && s.back() == ')') {
    return L7(std::stoi(s.substr(3, s.size() - 4)));
  }
  if (s.rfind("F(", 0) == 0 && s.back() == ')') {
    int d = std::stoi(s.substr(2, s.size() - 3));
    return Abelian(arity_hint > 0 ? arity_hint : 2, d);
  }
  if (s.rfind("H(", 0) == 0) {
    size_t close = s.find(')');
    if (close == std::string::npos) return bad();
    auto hp = parse_int_list(s, 2, close);
    if (hp.size() != 2) return bad();
    if (close + 1 == s.size()) return H(hp[0], hp[1]);
    if (s.substr(close + 1, 3) == "+F(" && s.back() == ')') {
      int k = std::stoi(s.substr(close + 4, s.size() - close - 5));
      return HplusF(hp[0], hp[1], k);
    }
    return bad();
  }
  if (s.rfind("A(", 0) == 0 && s.back() == ')') {
    auto ap = parse_int_list(s, 2, s.size() - 1);
    if (ap.size() != 3) return bad();
    return A(ap[0], ap[1], ap[2]);
  }
  return bad();
}

namespace {

struct TableRow {
  Tuple args;
  int target;  // 1-based
};

NLieAlgebra from_rows(int arity, int dim, const FieldSpec& f, const std::vector<TableRow>& rows) {
  NLieAlgebra a = abelian_algebra(arity, dim, f);
  for (const auto& row : rows) {
    Vec v = a.find_bracket(row.args) ? *a.find_bracket(row.args) : zero_vec(f, dim);
    v[row.target - 1] += Scalar::one(f);
    a.set_bracket(row.args, v);
  }
  for (int i = 1; i <= dim; ++i) a.basis_labels.push_back("e" + std::to_string(i));
  return a;
}

Tuple range_tuple(int from, int to) {  // inclusive
  Tuple t;
  for (int i = from; i <= to; ++i) t.push_back(i);
  return t;
}

Tuple join(std::initializer_list<Tuple> parts) {
  Tuple t;
  for (const auto& p : parts) t.insert(t.end(), p.begin(), p.end());
  return t;
}

}  // namespace

NLieAlgebra build(const Label& label, const FieldSpec& field) {
  using K = Label::Kind;
  const int n = label.n;
  switch (label.kind) {
    case K::Abelian: {
      if (label.d < 0 || n < 2) throw InvalidParametersError("abelian label needs arity >= 2, dim >= 0");
      NLieAlgebra a = abelian_algebra(n, label.d, field);
      for (int i = 1; i <= label.d; ++i) a.basis_labels.push_back("e" + std::to_string(i));
      return a;
    }
    case K::H: {
      if (n < 2 || label.m < 1) throw InvalidParametersError("H(n,m) needs n >= 2, m >= 1");
      const int dim = n * label.m + 1;
      std::vector<TableRow> rows;
      for (int i = 1; i <= label.m; ++i)
        rows.push_back({range_tuple(n * (i - 1) + 1, n * i), dim});
      NLieAlgebra a = from_rows(n, dim, field, rows);
      a.basis_labels.clear();
      for (int i = 1; i < dim; ++i) a.basis_labels.push_back("x" + std::to_string(i));
      a.basis_labels.push_back("x");
      return a;
    }
    case K::HplusF: {
      if (label.k < 1) throw InvalidParametersError("HplusF needs k >= 1");
      NLieAlgebra h = build(Label::H(n, label.m), field);
      NLieAlgebra s = direct_sum(h, build(Label::Abelian(n, label.k), field));
      s.basis_labels = h.basis_labels;
      for (int i = 1; i <= label.k; ++i) s.basis_labels.push_back("f" + std::to_string(i));
      return s;
    }
    case K::A: {
      const int d = label.d, k = label.k;
      auto need = [&](bool ok, const std::string& msg) {
        if (!ok) throw InvalidParametersError("A(" + std::to_string(n) + "," + std::to_string(d) +
                                              "," + std::to_string(k) + "): " + msg);
      };
      need(n >= 2, "arity must be >= 2");
      std::vector<TableRow> rows;
      if (d == n + 2) {
        need(k == 1, "dimension n+2 admits k = 1 only");
        rows = {{range_tuple(1, n), n + 1}, {range_tuple(2, n + 1), n + 2}};
      } else if (d == n + 3) {
        need(k == 3, "dimension n+3 admits k = 3 only");
        rows = {{range_tuple(1, n), n + 2}, {range_tuple(2, n + 1), n + 3}};
      } else if (d == n + 4) {
        need(k >= 1 && k <= 3, "dimension n+4 admits k = 1..3");
        if (k == 1)
          rows = {{range_tuple(1, n), n + 3}, {range_tuple(2, n + 1), n + 4}};
        else if (k == 2) {
          need(n >= 3, "k = 2 needs n >= 3");
          rows = {{range_tuple(1, n), n + 3}, {range_tuple(3, n + 2), n + 4}};
        } else {
          rows = {{range_tuple(1, n), n + 1},
                  {join({range_tuple(2, n), {n + 2}}), n + 3},
                  {join({{1}, range_tuple(3, n), {n + 2}}), n + 4}};
        }
      } else if (d == n + 5) {
        need(k >= 1 && k <= 7, "dimension n+5 admits k = 1..7");
        switch (k) {
          case 1:
            rows = {{range_tuple(1, n), n + 4}, {range_tuple(2, n + 1), n + 5}};
            break;
          case 2:
            need(n >= 3, "k = 2 needs n >= 3");
            rows = {{range_tuple(1, n), n + 4}, {range_tuple(3, n + 2), n + 5}};
            break;
          case 3:
            need(n >= 4, "k = 3 needs n >= 4");
            rows = {{range_tuple(1, n), n + 5}, {range_tuple(4, n + 3), n + 4}};
            break;
          case 4:
            rows = {{range_tuple(1, n), n + 3},
                    {range_tuple(2, n + 1), n + 4},
                    {join({{1}, range_tuple(3, n + 1)}), n + 5}};
            break;
          case 5:
            rows = {{range_tuple(1, n), n + 3},
                    {range_tuple(2, n + 1), n + 4},
                    {join({range_tuple(2, n), {n + 2}}), n + 5}};
            break;
          case 6:
            rows = {{range_tuple(1, n), n + 3},
                    {range_tuple(2, n + 1), n + 4},
                    {range_tuple(3, n + 2), n + 5}};
            break;
          case 7:
            need(n >= 3, "k = 7 needs n >= 3");
            rows = {{range_tuple(1, n), n + 1},
                    {join({range_tuple(2, n), {n + 2}}), n + 3},
                    {join({{1}, range_tuple(3, n), {n + 2}}), n + 4},
                    {join({{1, 2}, range_tuple(4, n), {n + 2}}), n + 5}};
            break;
        }
      } else {
        need(false, "dimension must be within n+2 .. n+5");
      }
      return from_rows(n, d, field, rows);
    }
    case K::A381:
      return from_rows(3, 8, field, {{{1, 2, 3}, 8}, {{4, 5, 6}, 7}});
    case K::A387:
      return from_rows(3, 8, field, {{{1, 2, 3}, 7}, {{4, 5, 6}, 8}});
    case K::L7: {
      const int i = label.i;
      if (i < 1 || i > 10) throw InvalidParametersError("L7 index must be 1..10");
      std::vector<TableRow> rows;
      switch (i) {
        case 1: rows = {{{1, 2}, 4}, {{1, 3}, 5}}; break;
        case 2: rows = {{{1, 2}, 4}, {{1, 3}, 5}, {{2, 3}, 6}}; break;
        case 3:
          if (label.l7_reading == 1)
            rows = {{{1, 2}, 5}, {{3, 4}, 5}, {{1, 3}, 6}};
          else if (label.l7_reading == 2)
            rows = {{{1, 2}, 5}, {{3, 4}, 6}};
          else
            throw DisputedEntryError(
                "L7(3) assigns [e3,e4] twice as written; pick reading A "
                "([e1,e2]=[e3,e4]=e5, [e1,e3]=e6) or reading B ([e1,e2]=e5, [e3,e4]=e6)");
          break;
        case 4: rows = {{{1, 2}, 5}, {{3, 4}, 6}}; break;
        case 5: rows = {{{1, 2}, 5}, {{2, 3}, 6}, {{2, 4}, 7}}; break;
        case 6: rows = {{{1, 2}, 5}, {{2, 3}, 6}, {{3, 4}, 7}}; break;
        case 7: rows = {{{1, 2}, 5}, {{3, 4}, 5}, {{2, 3}, 6}, {{2, 4}, 7}}; break;
        case 8: rows = {{{1, 2}, 5}, {{3, 4}, 5}, {{1, 3}, 6}, {{2, 4}, 7}}; break;
        case 9: rows = {{{1, 5}, 6}, {{3, 4}, 6}, {{2, 5}, 7}}; break;
        case 10: rows = {{{1, 2}, 6}, {{3, 4}, 6}, {{1, 5}, 7}, {{2, 3}, 7}}; break;
      }
      return from_rows(2, 7, field, rows);
    }
    case K::L5_2Lie:
      return from_rows(2, 5, field, {{{1, 2}, 4}, {{1, 3}, 5}});
  }
  throw InvalidParametersError("unreachable label kind");
}

CatalogList list_for(int n, int d) {
  if (n < 2 || d < n) throw InvalidParametersError("list_for needs n >= 2, d >= n");
  CatalogList out;
  if (d == n) {
    out.labels.push_back(Label::Abelian(n, d));
    out.complete = true;
    return out;
  }
  // Heisenberg-plus-abelian entries of dimension d
  for (int m = 1; n * m + 1 <= d; ++m) {
    int k = d - n * m - 1;
    out.labels.push_back(k == 0 ? Label::H(n, m) : Label::HplusF(n, m, k));
  }
  if (d == n + 1 || d == n + 2) {
    out.complete = true;
    return out;
  }
  if (d == n + 3) {
    out.labels.push_back(Label::A(n, d, 3));
    if (n == 2) {
      out.labels.push_back(Label::L5_2Lie());
      out.complete = true;  // the stated 5-dimensional list
    } else {
      out.complete = false;  // tables beyond A(n,n+3,3) are not in the catalog
    }
    return out;
  }
  if (d == n + 4) {
    out.labels.push_back(Label::A(n, d, 1));
    if (n >= 3) out.labels.push_back(Label::A(n, d, 2));
    out.labels.push_back(Label::A(n, d, 3));
    // n = 2 is missing the parametrized 6-dimensional families
    out.complete = (n >= 3);
    return out;
  }
  if (d == n + 5) {
    if (n == 2) {
      for (int i = 1; i <= 10; ++i) out.labels.push_back(Label::L7(i));
      out.complete = true;
      return out;
    }
    if (n == 3) out.labels.push_back(Label::A387());
    for (int k = 1; k <= 7; ++k) {
      if (k == 2 && n < 3) continue;
      if (k == 3 && n < 4) continue;
      if (k == 7 && n < 3) continue;
      out.labels.push_back(Label::A(n, d, k));
    }
    out.complete = true;
    return out;
  }
  out.complete = false;  // d > n+5: only the H-family entries are known here
  return out;
}

}  // namespace nlie
