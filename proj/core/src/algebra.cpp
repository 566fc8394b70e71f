#include "nlie/algebra.hpp"

#include <algorithm>

namespace nlie {

std::string tuple_to_string(const Tuple& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

bool is_strictly_increasing(const Tuple& t) {
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i - 1] >= t[i]) return false;
  return true;
}

std::vector<Tuple> increasing_tuples(int d, int k) {
  std::vector<Tuple> out;
  if (k < 0 || k > d) return out;
  Tuple t(k);
  for (int i = 0; i < k; ++i) t[i] = i + 1;
  while (true) {
    out.push_back(t);
    int i = k - 1;
    while (i >= 0 && t[i] == d - (k - 1 - i)) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  if (k == 0) out = {Tuple{}};
  return out;
}

int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i) {
    size_t j = i;
    while (j > 0 && idx[j - 1] > idx[j]) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
      --j;
    }
  }
  for (size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

void NLieAlgebra::set_bracket(const Tuple& args, const Vec& value) {
  if (static_cast<int>(args.size()) != arity || !is_strictly_increasing(args))
    throw NLieError("bracket key must be a strictly increasing arity-tuple");
  if (!args.empty() && (args.front() < 1 || args.back() > dim))
    throw NLieError("bracket key index out of range");
  if (static_cast<int>(value.size()) != dim) throw DimensionError("bracket value length != dim");
  if (is_zero_vec(value))
    brackets.erase(args);
  else
    brackets[args] = value;
}

const Vec* NLieAlgebra::find_bracket(const Tuple& args) const {
  auto it = brackets.find(args);
  return it == brackets.end() ? nullptr : &it->second;
}

void NLieAlgebra::validate() const {
  if (arity < 2) throw NLieError("arity must be >= 2");
  if (dim < 0) throw NLieError("dimension must be >= 0");
  for (const auto& [key, value] : brackets) {
    if (static_cast<int>(key.size()) != arity) throw NLieError("bracket key arity mismatch");
    if (!is_strictly_increasing(key)) throw NLieError("bracket key not strictly increasing");
    if (key.front() < 1 || key.back() > dim) throw NLieError("bracket key out of range");
    if (static_cast<int>(value.size()) != dim) throw NLieError("bracket value length mismatch");
    for (const auto& c : value)
      if (!(c.field() == field)) throw NLieError("bracket value field mismatch");
    if (is_zero_vec(value)) throw NLieError("bracket table stores a zero value");
  }
  if (!basis_labels.empty() && static_cast<int>(basis_labels.size()) != dim)
    throw NLieError("basis label count mismatch");
}

NLieAlgebra abelian_algebra(int arity, int dim, const FieldSpec& f) {
  NLieAlgebra a;
  a.arity = arity;
  a.dim = dim;
  a.field = f;
  return a;
}

Vec basis_bracket(const NLieAlgebra& a, const std::vector<int>& idx) {
  std::vector<int> s = idx;
  int sign = sort_with_sign(s);
  if (sign == 0) return zero_vec(a.field, a.dim);
  const Vec* v = a.find_bracket(s);
  if (!v) return zero_vec(a.field, a.dim);
  if (sign == 1) return *v;
  return scale(-Scalar::one(a.field), *v);
}

Vec bracket(const NLieAlgebra& a, const std::vector<Vec>& args) {
  if (static_cast<int>(args.size()) != a.arity) throw DimensionError("bracket: wrong argument count");
  for (const auto& v : args) {
    if (static_cast<int>(v.size()) != a.dim) throw DimensionError("bracket: argument length != dim");
    for (const auto& c : v)
      if (!(c.field() == a.field)) throw FieldError("bracket: argument field mismatch");
  }
  const int n = a.arity;
  Vec out = zero_vec(a.field, a.dim);
  // expand over the (sparse) table: coefficient of key J is det(args rows J)
  Mat cols = Mat::from_cols(a.field, args, a.dim);
  for (const auto& [key, value] : a.brackets) {
    Mat minor(a.field, n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) minor.at(r, c) = cols.at(key[r] - 1, c);
    Scalar coef = det(minor);
    if (!coef.is_zero()) out = axpy(out, coef, value);
  }
  return out;
}

bool check_alternating(const NLieAlgebra& a) {
  try {
    a.validate();
  } catch (const NLieError&) {
    return false;
  }
  if (a.dim == 0 || a.brackets.empty()) return true;
  // evaluation sanity on the first stored key: repeated argument and swap
  const auto& [key, value] = *a.brackets.begin();
  std::vector<Vec> args;
  for (int i : key) args.push_back(unit_vec(a.field, a.dim, i - 1));
  if (a.arity >= 2) {
    std::vector<Vec> rep = args;
    rep[1] = rep[0];
    if (!is_zero_vec(bracket(a, rep))) return false;
    std::vector<Vec> swp = args;
    std::swap(swp[0], swp[1]);
    if (!is_zero_vec(add(bracket(a, swp), value))) return false;
  }
  return true;
}

FilippovResult check_filippov(const NLieAlgebra& a) {
  const int n = a.arity, d = a.dim;
  FilippovResult res;
  const auto xs = increasing_tuples(d, n);
  const auto ys = increasing_tuples(d, n - 1);
  for (const auto& x : xs) {
    const Vec* w = a.find_bracket(x);
    for (const auto& y : ys) {
      Vec lhs = zero_vec(a.field, d);
      if (w) {
        for (int j = 0; j < d; ++j) {
          if ((*w)[j].is_zero()) continue;
          std::vector<int> idx;
          idx.reserve(n);
          idx.push_back(j + 1);
          idx.insert(idx.end(), y.begin(), y.end());
          lhs = axpy(lhs, (*w)[j], basis_bracket(a, idx));
        }
      }
      Vec rhs = zero_vec(a.field, d);
      for (int i = 0; i < n; ++i) {
        std::vector<int> inner;
        inner.reserve(n);
        inner.push_back(x[i]);
        inner.insert(inner.end(), y.begin(), y.end());
        Vec u = basis_bracket(a, inner);
        if (is_zero_vec(u)) continue;
        for (int j = 0; j < d; ++j) {
          if (u[j].is_zero()) continue;
          std::vector<int> outer = x;
          outer[i] = j + 1;
          rhs = axpy(rhs, u[j], basis_bracket(a, outer));
        }
      }
      if (!(lhs == rhs)) {
        res.ok = false;
        res.x = x;
        res.y = y;
        return res;
      }
    }
  }
  return res;
}

std::string NilClass::to_string() const {
  switch (kind) {
    case NilKind::abelian: return "abelian";
    case NilKind::nilpotent: return "class " + std::to_string(cls);
    case NilKind::not_nilpotent: return "not nilpotent";
  }
  return "?";
}

Subspace derived_subalgebra(const NLieAlgebra& a) {
  std::vector<Vec> values;
  for (const auto& [key, value] : a.brackets) values.push_back(value);
  return Subspace::span(a.field, a.dim, values);
}

Subspace center(const NLieAlgebra& a) {
  const int n = a.arity, d = a.dim;
  if (d == 0) return Subspace::zero(a.field, 0);
  const auto ys = increasing_tuples(d, n - 1);
  std::vector<Vec> rows;  // rows of the stacked map v -> bracket(v, e_y)
  for (const auto& y : ys) {
    // column j of the block = basis_bracket(j, y); transpose into rows
    std::vector<Vec> block;
    for (int j = 1; j <= d; ++j) {
      std::vector<int> idx;
      idx.push_back(j);
      idx.insert(idx.end(), y.begin(), y.end());
      block.push_back(basis_bracket(a, idx));
    }
    for (int k = 0; k < d; ++k) {
      Vec r = zero_vec(a.field, d);
      bool nz = false;
      for (int j = 0; j < d; ++j) {
        r[j] = block[j][k];
        nz = nz || !r[j].is_zero();
      }
      if (nz) rows.push_back(r);
    }
  }
  if (rows.empty()) return Subspace::full(a.field, d);
  return Subspace::from_rref(nullspace_basis(Mat::from_rows(a.field, rows, d)));
}

std::vector<Subspace> derived_series(const NLieAlgebra& a) {
  const int n = a.arity, d = a.dim;
  std::vector<Subspace> chain;
  chain.push_back(Subspace::full(a.field, d));
  const auto ys = increasing_tuples(d, n - 1);
  while (true) {
    const Subspace& prev = chain.back();
    std::vector<Vec> values;
    for (size_t i = 0; i < prev.dim(); ++i) {
      Vec v = prev.basis_vector(i);
      for (const auto& y : ys) {
        Vec w = zero_vec(a.field, d);
        for (int j = 0; j < d; ++j) {
          if (v[j].is_zero()) continue;
          std::vector<int> idx;
          idx.push_back(j + 1);
          idx.insert(idx.end(), y.begin(), y.end());
          w = axpy(w, v[j], basis_bracket(a, idx));
        }
        if (!is_zero_vec(w)) values.push_back(w);
      }
    }
    Subspace next = Subspace::span(a.field, d, values);
    if (next == prev) break;  // stabilized (nonzero: not nilpotent)
    chain.push_back(next);
    if (next.dim() == 0) break;
  }
  return chain;
}

std::vector<Subspace> upper_central_series(const NLieAlgebra& a) {
  const int n = a.arity, d = a.dim;
  std::vector<Subspace> chain;
  chain.push_back(Subspace::zero(a.field, d));
  const auto ys = increasing_tuples(d, n - 1);
  while (true) {
    const Subspace& prev = chain.back();
    // v in Z_{i+1} iff bracket(v, e_y) lies in Z_i for every y
    std::vector<Vec> rows;
    for (const auto& y : ys) {
      std::vector<Vec> block;
      for (int j = 1; j <= d; ++j) {
        std::vector<int> idx;
        idx.push_back(j);
        idx.insert(idx.end(), y.begin(), y.end());
        Vec w = basis_bracket(a, idx);
        // residual after reducing against prev's echelon basis
        for (size_t r = 0; r < prev.dim(); ++r) {
          const Scalar& c = w[prev.pivots()[r]];
          if (!c.is_zero()) {
            Scalar f = c;
            Vec bv = prev.basis_vector(r);
            for (int k = 0; k < d; ++k) w[k] -= f * bv[k];
          }
        }
        block.push_back(w);
      }
      for (int k = 0; k < d; ++k) {
        Vec r = zero_vec(a.field, d);
        bool nz = false;
        for (int j = 0; j < d; ++j) {
          r[j] = block[j][k];
          nz = nz || !r[j].is_zero();
        }
        if (nz) rows.push_back(r);
      }
    }
    Subspace next = rows.empty() ? Subspace::full(a.field, d)
                                 : Subspace::from_rref(nullspace_basis(Mat::from_rows(a.field, rows, d)));
    if (next == prev) break;
    chain.push_back(next);
    if (next.dim() == static_cast<size_t>(d)) break;
  }
  return chain;
}

SeriesReport series_report(const NLieAlgebra& a) {
  SeriesReport rep;
  rep.derived = derived_series(a);
  rep.upper = upper_central_series(a);
  if (a.brackets.empty()) {
    rep.nil = NilClass{NilKind::abelian, 0};
  } else if (rep.derived.back().dim() == 0) {
    rep.nil = NilClass{NilKind::nilpotent, static_cast<int>(rep.derived.size()) - 1};
  } else {
    rep.nil = NilClass{NilKind::not_nilpotent, 0};
  }
  return rep;
}

NilClass nilpotency_class(const NLieAlgebra& a) {
  if (a.brackets.empty()) return NilClass{NilKind::abelian, 0};
  auto chain = derived_series(a);
  if (chain.back().dim() == 0) return NilClass{NilKind::nilpotent, static_cast<int>(chain.size()) - 1};
  return NilClass{NilKind::not_nilpotent, 0};
}

bool is_class_two(const NLieAlgebra& a) {
  if (a.brackets.empty()) return false;  // abelian
  Subspace a2 = derived_subalgebra(a);
  if (a2.dim() == 0) return false;
  return center(a).contains(a2);
}

NLieAlgebra apply_basis_change(const NLieAlgebra& a, const Mat& P) {
  if (P.rows() != static_cast<size_t>(a.dim) || P.cols() != P.rows())
    throw DimensionError("basis change must be dim x dim");
  Mat Pinv = invert(P);  // throws SingularError
  const int n = a.arity, d = a.dim;
  NLieAlgebra out = abelian_algebra(n, d, a.field);
  out.basis_labels = a.basis_labels;
  for (const auto& target : increasing_tuples(d, n)) {
    Vec w = zero_vec(a.field, d);
    for (const auto& [key, value] : a.brackets) {
      Mat minor(a.field, n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) minor.at(r, c) = P.at(key[r] - 1, target[c] - 1);
      Scalar coef = det(minor);
      if (!coef.is_zero()) w = axpy(w, coef, value);
    }
    if (!is_zero_vec(w)) out.set_bracket(target, mat_vec(Pinv, w));
  }
  return out;
}

QuotientResult quotient_central(const NLieAlgebra& a, const Subspace& ideal) {
  if (ideal.ambient() != static_cast<size_t>(a.dim)) throw DimensionError("ideal ambient mismatch");
  if (!center(a).contains(ideal)) throw NotCentralError("quotient ideal is not central");
  QuotientResult qr;
  qr.complement = ideal.complement_indices();
  const int qd = static_cast<int>(qr.complement.size());
  qr.quotient = abelian_algebra(a.arity, qd, a.field);

  // projection: reduce mod the ideal, read coordinates at complement indices
  auto project = [&](Vec w) {
    for (size_t r = 0; r < ideal.dim(); ++r) {
      const Scalar c = w[ideal.pivots()[r]];
      if (!c.is_zero()) {
        Vec bv = ideal.basis_vector(r);
        for (int k = 0; k < a.dim; ++k) w[k] -= c * bv[k];
      }
    }
    Vec out = zero_vec(a.field, qd);
    for (int k = 0; k < qd; ++k) out[k] = w[qr.complement[k]];
    return out;
  };

  qr.projection = Mat(a.field, qd, a.dim);
  for (int j = 0; j < a.dim; ++j) {
    Vec pj = project(unit_vec(a.field, a.dim, j));
    for (int k = 0; k < qd; ++k) qr.projection.at(k, j) = pj[k];
  }

  for (const auto& t : increasing_tuples(qd, a.arity)) {
    std::vector<int> lifted(t.size());
    for (size_t i = 0; i < t.size(); ++i) lifted[i] = static_cast<int>(qr.complement[t[i] - 1]) + 1;
    Vec w = basis_bracket(a, lifted);
    Vec pw = project(w);
    if (!is_zero_vec(pw)) qr.quotient.set_bracket(t, pw);
  }
  return qr;
}

NLieAlgebra direct_sum(const NLieAlgebra& a, const NLieAlgebra& b) {
  if (a.arity != b.arity) throw NLieError("direct_sum: arity mismatch");
  if (!(a.field == b.field)) throw FieldError("direct_sum: field mismatch");
  NLieAlgebra out = abelian_algebra(a.arity, a.dim + b.dim, a.field);
  for (const auto& [key, value] : a.brackets) {
    Vec v = zero_vec(a.field, out.dim);
    for (int i = 0; i < a.dim; ++i) v[i] = value[i];
    out.set_bracket(key, v);
  }
  for (const auto& [key, value] : b.brackets) {
    Tuple k = key;
    for (int& i : k) i += a.dim;
    Vec v = zero_vec(a.field, out.dim);
    for (int i = 0; i < b.dim; ++i) v[a.dim + i] = value[i];
    out.set_bracket(k, v);
  }
  return out;
}

NLieAlgebra central_extension(const NLieAlgebra& q, const std::map<Tuple, Scalar>& cocycle) {
  NLieAlgebra out = abelian_algebra(q.arity, q.dim + 1, q.field);
  for (const auto& [key, value] : q.brackets) {
    Vec v = zero_vec(q.field, out.dim);
    for (int i = 0; i < q.dim; ++i) v[i] = value[i];
    out.set_bracket(key, v);
  }
  for (const auto& [key, c] : cocycle) {
    if (static_cast<int>(key.size()) != q.arity || !is_strictly_increasing(key) ||
        key.front() < 1 || key.back() > q.dim)
      throw NLieError("cocycle key must be a strictly increasing tuple over the quotient basis");
    if (c.is_zero()) continue;
    Vec v = out.find_bracket(key) ? *out.find_bracket(key) : zero_vec(q.field, out.dim);
    v[out.dim - 1] += c;
    out.set_bracket(key, v);
  }
  return out;
}

}  // namespace nlie
