#include "nlie/forms.hpp"

#include <algorithm>
#include <functional>

namespace nlie {

Vec ClassTwoForms::lift(const Vec& wcoords) const {
  Vec v = zero_vec(field, dim);
  for (int k = 0; k < w; ++k)
    if (!wcoords[k].is_zero()) v[w_idx[k]] = wcoords[k];
  return v;
}

Vec ClassTwoForms::a2_vector(const Vec& a2coords) const {
  Vec v = zero_vec(field, dim);
  for (int k = 0; k < r; ++k)
    if (!a2coords[k].is_zero()) v = axpy(v, a2coords[k], A2.basis_vector(k));
  return v;
}

std::vector<Vec> ClassTwoForms::spare_basis() const {
  // extend A2's echelon basis to a basis of Z
  std::vector<Vec> out;
  for (size_t i = 0; i < Z.dim(); ++i) {
    Vec v = Z.basis_vector(i);
    Subspace probe = Subspace::span(field, dim, [&] {
      std::vector<Vec> vs;
      for (size_t k = 0; k < A2.dim(); ++k) vs.push_back(A2.basis_vector(k));
      for (const Vec& p : out) vs.push_back(p);
      vs.push_back(v);
      return vs;
    }());
    if (probe.dim() == A2.dim() + out.size() + 1) out.push_back(v);
  }
  return out;
}

ClassTwoForms make_forms(const NLieAlgebra& a) {
  if (!is_class_two(a)) throw NLieError("make_forms requires a class-two algebra");
  ClassTwoForms F;
  F.arity = a.arity;
  F.dim = a.dim;
  F.field = a.field;
  F.Z = center(a);
  F.A2 = derived_subalgebra(a);
  F.w_idx = F.Z.complement_indices();
  F.w = static_cast<int>(F.w_idx.size());
  F.r = static_cast<int>(F.A2.dim());
  F.spares = static_cast<int>(F.Z.dim()) - F.r;
  for (const auto& t : increasing_tuples(F.w, F.arity)) {
    std::vector<int> lifted(t.size());
    for (size_t i = 0; i < t.size(); ++i) lifted[i] = static_cast<int>(F.w_idx[t[i] - 1]) + 1;
    Vec v = basis_bracket(a, lifted);
    if (is_zero_vec(v)) continue;
    F.phi[t] = F.A2.coordinates(v);
  }
  return F;
}

ScalarForm pencil_member(const ClassTwoForms& F, const Vec& ell) {
  ScalarForm out;
  for (const auto& [t, coords] : F.phi) {
    Scalar s = Scalar::zero(F.field);
    for (int k = 0; k < F.r; ++k) s += ell[k] * coords[k];
    if (!s.is_zero()) out[t] = s;
  }
  return out;
}

Scalar form_coeff(const ScalarForm& f, const FieldSpec& fs, const std::vector<int>& idx) {
  std::vector<int> s = idx;
  int sign = sort_with_sign(s);
  if (sign == 0) return Scalar::zero(fs);
  auto it = f.find(s);
  if (it == f.end()) return Scalar::zero(fs);
  return sign > 0 ? it->second : -it->second;
}

bool form_is_zero(const ScalarForm& f) {
  for (const auto& [t, c] : f)
    if (!c.is_zero()) return false;
  return true;
}

Mat contraction_matrix(const FieldSpec& fs, int w, int n, const ScalarForm& f) {
  const auto ts = increasing_tuples(w, n - 1);
  Mat m(fs, ts.size(), w);
  for (size_t row = 0; row < ts.size(); ++row) {
    for (int j = 1; j <= w; ++j) {
      std::vector<int> idx;
      idx.push_back(j);
      idx.insert(idx.end(), ts[row].begin(), ts[row].end());
      m.at(row, j - 1) = form_coeff(f, fs, idx);
    }
  }
  return m;
}

Subspace form_radical(const FieldSpec& fs, int w, int n, const ScalarForm& f) {
  return Subspace::from_rref(nullspace_basis(contraction_matrix(fs, w, n, f)));
}

size_t form_rank(const FieldSpec& fs, int w, int n, const ScalarForm& f) {
  return rank(contraction_matrix(fs, w, n, f));
}

Scalar form_eval(const FieldSpec& fs, int n, const ScalarForm& f, const std::vector<Vec>& args) {
  Scalar out = Scalar::zero(fs);
  const int w = args.empty() ? 0 : static_cast<int>(args[0].size());
  Mat cols = Mat::from_cols(fs, args, w);
  for (const auto& [t, c] : f) {
    Mat minor(fs, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) minor.at(i, j) = cols.at(t[i] - 1, j);
    out += c * det(minor);
  }
  return out;
}

void Poly::normalize() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Scalar Poly::eval(const Scalar& t) const {
  Scalar v = Scalar::zero(field);
  for (size_t i = c.size(); i-- > 0;) v = v * t + c[i];
  return v;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(a.field);
  out.c.resize(std::max(a.c.size(), b.c.size()), Scalar::zero(a.field));
  for (size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
  out.normalize();
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.field);
  if (a.is_zero() || b.is_zero()) return out;
  out.c.assign(a.c.size() + b.c.size() - 1, Scalar::zero(a.field));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  out.normalize();
  return out;
}

Poly poly_rem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw NLieError("poly_rem by zero");
  Poly r = a;
  r.normalize();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Scalar f = r.c.back() / b.c.back();
    int shift = r.degree() - b.degree();
    for (int i = 0; i <= b.degree(); ++i) r.c[i + shift] -= f * b.c[i];
    r.normalize();
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b) {
  a.normalize();
  b.normalize();
  while (!b.is_zero()) {
    Poly r = poly_rem(a, b);
    a = b;
    b = r;
  }
  if (!a.is_zero()) {
    Scalar lead = a.c.back();
    for (auto& x : a.c) x /= lead;
  }
  return a;
}

Poly poly_interpolate(const FieldSpec& f, const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  Poly acc(f);
  for (size_t i = 0; i < xs.size(); ++i) {
    Poly term(f);
    term.c = {Scalar::one(f)};
    Scalar denom = Scalar::one(f);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      Poly lin(f);
      lin.c = {-xs[j], Scalar::one(f)};
      term = poly_mul(term, lin);
      denom *= xs[i] - xs[j];
    }
    Scalar coef = ys[i] / denom;
    for (auto& x : term.c) x *= coef;
    acc = poly_sub(acc, term);
  }
  for (auto& x : acc.c) x = -x;  // acc accumulated negated
  acc.normalize();
  return acc;
}

static uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = (__uint128_t)r * b % p;
    b = (__uint128_t)b * b % p;
    e >>= 1;
  }
  return r;
}

static std::optional<uint64_t> sqrt_mod(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
  // Tonelli-Shanks
  uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  uint64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) == 1) ++z;
  uint64_t m = s, c = pow_mod(z, q, p), t = pow_mod(a, q, p), rr = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = (__uint128_t)tt * tt % p;
      ++i;
    }
    uint64_t b = c;
    for (uint64_t j = 0; j + i + 1 < m; ++j) b = (__uint128_t)b * b % p;
    m = i;
    c = (__uint128_t)b * b % p;
    t = (__uint128_t)t * c % p;
    rr = (__uint128_t)rr * b % p;
  }
  return rr;
}

std::optional<Scalar> scalar_sqrt(const Scalar& a) {
  const FieldSpec& f = a.field();
  if (f.is_prime_field()) {
    auto r = sqrt_mod(a.residue(), f.p());
    if (!r) return std::nullopt;
    return Scalar::from_residue(f, *r);
  }
  const mpq_class& q = a.rational();
  if (q < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Scalar::from_mpq(mpq_class(rn, rd));
}

static std::optional<std::vector<Scalar>> rational_roots_by_search(const Poly& p) {
  // integer root candidates from divisors of the constant and leading terms
  mpz_class lcm_den = 1;
  for (const auto& c : p.c) lcm_den = lcm(lcm_den, c.rational().get_den());
  std::vector<mpz_class> zc;
  for (const auto& c : p.c) {
    mpq_class q = c.rational() * mpq_class(lcm_den);
    zc.push_back(q.get_num());
  }
  size_t lo = 0;
  while (lo < zc.size() && zc[lo] == 0) ++lo;
  if (lo == zc.size()) return std::nullopt;
  mpz_class a0 = abs(zc[lo]), ad = abs(zc.back());
  auto divisors = [](const mpz_class& v) {
    std::vector<mpz_class> ds;
    if (v == 0) return ds;
    for (mpz_class i = 1; i * i <= v && i < 1000000; ++i) {
      if (v % i == 0) {
        ds.push_back(i);
        ds.push_back(v / i);
      }
    }
    return ds;
  };
  auto dnum = divisors(a0), dden = divisors(ad);
  if (dnum.empty() || dden.empty()) return std::nullopt;
  std::vector<Scalar> roots;
  auto consider = [&](const mpq_class& q) {
    Scalar t = Scalar::from_mpq(q);
    if (p.eval(t).is_zero()) {
      for (const auto& r : roots)
        if (r == t) return;
      roots.push_back(t);
    }
  };
  consider(0);
  for (const auto& n : dnum)
    for (const auto& d : dden) {
      mpq_class q(n, d);
      q.canonicalize();
      consider(q);
      consider(-q);
    }
  return roots;  // may be incomplete for irrational/large factors; callers verify
}

std::optional<std::vector<Scalar>> poly_roots(const Poly& p) {
  const FieldSpec& f = p.field;
  if (p.is_zero()) return std::nullopt;
  std::vector<Scalar> roots;
  if (p.degree() == 0) return roots;
  if (p.degree() == 1) {
    roots.push_back(-p.c[0] / p.c[1]);
    return roots;
  }
  if (p.degree() == 2) {
    Scalar a = p.c[2], b = p.c[1], c = p.c[0];
    Scalar disc = b * b - Scalar::from_int(f, 4) * a * c;
    if (f.is_prime_field() && f.p() == 2) {
      // enumerate GF(2)
      for (int t = 0; t < 2; ++t) {
        Scalar s = Scalar::from_int(f, t);
        if (p.eval(s).is_zero()) roots.push_back(s);
      }
      return roots;
    }
    auto sq = scalar_sqrt(disc);
    if (!sq) return roots;  // no roots in the field
    Scalar two_a = (a + a).inverse();
    roots.push_back((-b + *sq) * two_a);
    Scalar r2 = (-b - *sq) * two_a;
    if (!(r2 == roots[0])) roots.push_back(r2);
    return roots;
  }
  if (f.is_prime_field() && f.p() <= 65536) {
    for (uint64_t t = 0; t < f.p(); ++t) {
      Scalar s = Scalar::from_residue(f, t);
      if (p.eval(s).is_zero()) roots.push_back(s);
    }
    return roots;
  }
  if (f.is_rationals()) return rational_roots_by_search(p);
  return std::nullopt;
}

// ---- pencil locus on a line ----

static Vec line_point(const Vec& ell0, const Vec& ell1, const Scalar& t) {
  return axpy(ell0, t, ell1);
}

bool line_all_rank_n(const ClassTwoForms& F, const Vec& ell0, const Vec& ell1) {
  const int n = F.arity;
  int samples = n + 2;
  for (int i = 0; i < samples; ++i) {
    Vec ell = line_point(ell0, ell1, Scalar::from_int(F.field, i));
    if (F.field.is_prime_field() && static_cast<uint64_t>(i) >= F.field.p()) break;
    ScalarForm f = pencil_member(F, ell);
    if (form_is_zero(f)) continue;
    if (form_rank(F.field, F.w, n, f) > static_cast<size_t>(n)) return false;
  }
  if (F.field.is_prime_field() && F.field.p() < static_cast<uint32_t>(n + 2)) {
    // small field: the sample set wraps; enumerate the whole line instead
    for (uint64_t t = 0; t < F.field.p(); ++t) {
      ScalarForm f = pencil_member(F, line_point(ell0, ell1, Scalar::from_residue(F.field, t)));
      if (!form_is_zero(f) && form_rank(F.field, F.w, n, f) > static_cast<size_t>(n)) return false;
    }
  }
  ScalarForm finf = pencil_member(F, ell1);
  if (!form_is_zero(finf) && form_rank(F.field, F.w, n, finf) > static_cast<size_t>(n)) return false;
  return true;
}

std::optional<std::vector<Vec>> rank_n_points_on_line(const ClassTwoForms& F, const Vec& ell0,
                                                      const Vec& ell1) {
  const int n = F.arity;
  const FieldSpec& fs = F.field;
  std::vector<Vec> found;
  auto consider = [&](const Vec& ell) {
    ScalarForm f = pencil_member(F, ell);
    if (form_is_zero(f)) return;
    if (form_rank(fs, F.w, n, f) == static_cast<size_t>(n)) found.push_back(ell);
  };

  if (fs.is_prime_field() && fs.p() <= 4096) {
    for (uint64_t t = 0; t < fs.p(); ++t) consider(line_point(ell0, ell1, Scalar::from_residue(fs, t)));
    consider(ell1);
    return found;
  }

  // Q (or a large prime field): certify via an interpolated witness minor.
  // Find a sample point where the contraction matrix has rank > n.
  std::vector<Scalar> sample_ts;
  for (int i = 0; i < n + 3; ++i) sample_ts.push_back(Scalar::from_int(fs, i));
  std::optional<Scalar> generic_t;
  for (const auto& t : sample_ts) {
    ScalarForm f = pencil_member(F, line_point(ell0, ell1, t));
    if (!form_is_zero(f) && form_rank(fs, F.w, n, f) > static_cast<size_t>(n)) {
      generic_t = t;
      break;
    }
  }
  if (!generic_t) {
    // whole line has rank <= n (minor degree bound over n+2 vanishing samples)
    for (const auto& t : sample_ts) consider(line_point(ell0, ell1, t));
    consider(ell1);
    return found;  // infinitely many; callers treat via line_all_rank_n first
  }

  // witness submatrices: (n+1)-sized row/column picks that are independent at
  // generic_t; the gcd of their interpolated determinants is a multiple of the
  // locus polynomial, and every candidate root is rank-checked exactly.
  Mat m0 = contraction_matrix(fs, F.w, n, pencil_member(F, line_point(ell0, ell1, *generic_t)));
  const size_t k = static_cast<size_t>(n) + 1;

  auto pivot_rows = [&](bool reversed) {
    // row/col picks from a plain elimination pass over m0
    Mat a = m0;
    std::vector<size_t> perm(a.rows());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = reversed ? a.rows() - 1 - i : i;
    if (reversed) {
      Mat b(fs, a.rows(), a.cols());
      for (size_t i = 0; i < a.rows(); ++i) b.set_row(i, a.row(a.rows() - 1 - i));
      a = b;
    }
    std::vector<size_t> rows, cols;
    size_t rpos = 0;
    for (size_t c = 0; c < a.cols() && rpos < a.rows(); ++c) {
      size_t piv = a.rows();
      for (size_t i = rpos; i < a.rows(); ++i)
        if (!a.at(i, c).is_zero()) {
          piv = i;
          break;
        }
      if (piv == a.rows()) continue;
      if (piv != rpos) {
        for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(rpos, j));
        std::swap(perm[piv], perm[rpos]);
      }
      Scalar inv = a.at(rpos, c).inverse();
      for (size_t j = c; j < a.cols(); ++j) a.at(rpos, j) *= inv;
      for (size_t i = rpos + 1; i < a.rows(); ++i) {
        if (a.at(i, c).is_zero()) continue;
        Scalar fct = a.at(i, c);
        for (size_t j = c; j < a.cols(); ++j) a.at(i, j) -= fct * a.at(rpos, j);
      }
      rows.push_back(perm[rpos]);
      cols.push_back(c);
      ++rpos;
    }
    return std::make_pair(rows, cols);
  };

  auto interpolated_minor = [&](const std::vector<size_t>& rows,
                                const std::vector<size_t>& cols) -> std::optional<Poly> {
    if (rows.size() < k || cols.size() < k) return std::nullopt;
    auto minor_at = [&](const Scalar& t) {
      ScalarForm f = pencil_member(F, line_point(ell0, ell1, t));
      Mat m = contraction_matrix(fs, F.w, n, f);
      Mat sub(fs, k, k);
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
      return det(sub);
    };
    std::vector<Scalar> xs, ys;
    for (size_t i = 0; i <= k; ++i) {
      Scalar t = Scalar::from_int(fs, static_cast<long>(i));
      xs.push_back(t);
      ys.push_back(minor_at(t));
    }
    return poly_interpolate(fs, xs, ys);
  };

  Poly g(fs);
  for (bool reversed : {false, true}) {
    auto [rows, cols] = pivot_rows(reversed);
    if (rows.size() < k) return std::nullopt;
    for (size_t offset : {size_t{0}, size_t{1}}) {
      if (rows.size() < k + offset) continue;
      std::vector<size_t> rfront(rows.begin() + offset, rows.begin() + offset + k);
      std::vector<size_t> cfront(cols.begin(), cols.begin() + k);
      auto p = interpolated_minor(rfront, cfront);
      if (!p || p->is_zero()) continue;
      g = g.is_zero() ? *p : poly_gcd(g, *p);
      if (g.degree() <= 2) break;
    }
    if (!g.is_zero() && g.degree() <= 2) break;
  }
  if (g.is_zero()) return std::nullopt;

  auto roots = poly_roots(g);
  if (!roots) return std::nullopt;
  for (const auto& t : *roots) consider(line_point(ell0, ell1, t));
  consider(ell1);  // the point at infinity
  return found;
}

// ---- two-block splitting ----

static ScalarForm interior_product(const FieldSpec& fs, int n, const ScalarForm& f, const Vec& v) {
  // i_v f as an (n-1)-form: (i_v f)(T) = sum_j v_j f(j, T)
  ScalarForm out;
  const int w = static_cast<int>(v.size());
  for (const auto& t : increasing_tuples(w, n - 1)) {
    Scalar s = Scalar::zero(fs);
    for (int j = 1; j <= w; ++j) {
      if (v[j - 1].is_zero()) continue;
      std::vector<int> idx;
      idx.push_back(j);
      idx.insert(idx.end(), t.begin(), t.end());
      s += v[j - 1] * form_coeff(f, fs, idx);
    }
    if (!s.is_zero()) out[t] = s;
  }
  return out;
}

static ScalarForm wedge(const FieldSpec& fs, int w, int p, int q, const ScalarForm& a,
                        const ScalarForm& b) {
  ScalarForm out;
  for (const auto& s : increasing_tuples(w, p + q)) {
    Scalar acc = Scalar::zero(fs);
    // split s into (A, B), |A| = p
    std::vector<int> pick(p);
    for (int i = 0; i < p; ++i) pick[i] = i;
    while (true) {
      std::vector<int> A, B;
      std::vector<bool> in(p + q, false);
      for (int i : pick) in[i] = true;
      for (int i = 0; i < p + q; ++i) (in[i] ? A : B).push_back(s[i]);
      auto ia = a.find(A);
      if (ia != a.end()) {
        auto ib = b.find(B);
        if (ib != b.end()) {
          // shuffle sign: crossings between A-slots and earlier B-slots
          int inv = 0, bs_before = 0;
          for (int i = 0; i < p + q; ++i) {
            if (in[i])
              inv += bs_before;
            else
              ++bs_before;
          }
          Scalar term = ia->second * ib->second;
          if (inv % 2 == 1) term = -term;
          acc += term;
        }
      }
      // next combination
      int i = p - 1;
      while (i >= 0 && pick[i] == p + q - (p - i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < p; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!acc.is_zero()) out[s] = acc;
  }
  return out;
}

// Recover the block containing the pure vector v: the kernel of
// u -> i_u f ^ i_v f. Inside the block both contractions live on the same
// n covectors, so the wedge dies; across blocks it cannot.
static std::optional<Subspace> block_of_pure_vector(const FieldSpec& fs, int n,
                                                    const ScalarForm& f, const Vec& v) {
  const int w = 2 * n;
  ScalarForm sigma = interior_product(fs, n, f, v);
  if (form_is_zero(sigma)) return std::nullopt;
  if (form_rank(fs, w, n - 1, sigma) != static_cast<size_t>(n - 1)) return std::nullopt;
  const auto out_tuples = increasing_tuples(w, 2 * (n - 1));
  std::vector<Vec> rows;
  for (int j = 0; j < w; ++j) {
    ScalarForm g = wedge(fs, w, n - 1, n - 1, interior_product(fs, n, f, unit_vec(fs, w, j)), sigma);
    Vec col = zero_vec(fs, out_tuples.size());
    size_t idx = 0;
    for (const auto& t : out_tuples) {
      auto it = g.find(t);
      if (it != g.end()) col[idx] = it->second;
      ++idx;
    }
    rows.push_back(col);
  }
  // rows[j] is the image of e_j; kernel of the transposed matrix
  Mat m(fs, out_tuples.size(), w);
  for (int j = 0; j < w; ++j)
    for (size_t i = 0; i < out_tuples.size(); ++i) m.at(i, j) = rows[j][i];
  Subspace block = Subspace::from_rref(nullspace_basis(m));
  if (block.dim() != static_cast<size_t>(n)) return std::nullopt;
  return block;
}

static std::optional<std::pair<Subspace, Subspace>> blocks_from_pure_vector(
    const FieldSpec& fs, int n, const ScalarForm& f, const Vec& v) {
  const int w = 2 * n;
  auto blk = block_of_pure_vector(fs, n, f, v);
  if (!blk) return std::nullopt;
  Subspace U1 = *blk;
  // the opposite block: vectors bracketing to zero against every (n-1)-subset
  std::vector<Vec> rows;
  for (const auto& t : increasing_tuples(n, n - 1)) {
    std::vector<Vec> args;
    for (int i : t) args.push_back(U1.basis_vector(i - 1));
    Vec row = zero_vec(fs, w);
    for (int j = 1; j <= w; ++j) {
      std::vector<Vec> full;
      full.push_back(unit_vec(fs, w, j - 1));
      for (const auto& arg : args) full.push_back(arg);
      row[j - 1] = form_eval(fs, n, f, full);
    }
    if (!is_zero_vec(row)) rows.push_back(row);
  }
  if (rows.empty()) return std::nullopt;
  Subspace U2 = Subspace::from_rref(nullspace_basis(Mat::from_rows(fs, rows, w)));
  if (U2.dim() != static_cast<size_t>(n)) return std::nullopt;
  if (sum(U1, U2).dim() != static_cast<size_t>(w)) return std::nullopt;
  std::vector<Vec> a1, a2;
  for (size_t i = 0; i < U1.dim(); ++i) a1.push_back(U1.basis_vector(i));
  for (size_t i = 0; i < U2.dim(); ++i) a2.push_back(U2.basis_vector(i));
  if (form_eval(fs, n, f, a1).is_zero() || form_eval(fs, n, f, a2).is_zero()) return std::nullopt;
  return std::make_pair(U1, U2);
}

static std::optional<std::pair<Subspace, Subspace>> split_blocks_sweep(const FieldSpec& fs, int n,
                                                                       const ScalarForm& f) {
  // small prime field: scan projective points for a pure vector
  const int w = 2 * n;
  const uint64_t p = fs.p();
  std::vector<uint64_t> v(w, 0);
  std::optional<std::pair<Subspace, Subspace>> found;
  std::function<bool(int, bool)> gen = [&](int i, bool leading) -> bool {
    if (found) return true;
    if (i == w) {
      if (!leading) return false;
      Vec x = zero_vec(fs, w);
      for (int k = 0; k < w; ++k) x[k] = Scalar::from_residue(fs, v[k]);
      ScalarForm iv = interior_product(fs, n, f, x);
      if (!form_is_zero(iv) && form_rank(fs, w, n - 1, iv) == static_cast<size_t>(n - 1)) {
        auto res = blocks_from_pure_vector(fs, n, f, x);
        if (res) {
          found = res;
          return true;
        }
      }
      return false;
    }
    if (!leading) {
      v[i] = 0;
      if (gen(i + 1, false)) return true;
      v[i] = 1;
      if (gen(i + 1, true)) return true;
    } else {
      for (uint64_t c = 0; c < p; ++c) {
        v[i] = c;
        if (gen(i + 1, true)) return true;
      }
    }
    v[i] = 0;
    return false;
  };
  gen(0, false);
  return found;
}

// Splitting operator: solutions D of
//   Omega(D v, w) + Omega(v, D w) = c Omega(v, w),   Omega(v, w) := i_v f ^ i_w f,
// are exactly a P_1 + b P_2 for the block projections (plus degenerate junk
// that the eigenspace checks reject): both blocks are Omega-isotropic and the
// cross pairing is faithful. Works over any field of characteristic != 2.
static std::optional<std::pair<Subspace, Subspace>> split_via_operator(const FieldSpec& fs, int n,
                                                                       const ScalarForm& f) {
  const int w = 2 * n;
  std::vector<ScalarForm> iota;
  for (int i = 0; i < w; ++i) iota.push_back(interior_product(fs, n, f, unit_vec(fs, w, i)));
  const auto out_tuples = increasing_tuples(w, 2 * (n - 1));
  const size_t T = out_tuples.size();
  // G[i][j][t] = (i_{e_i} f ^ i_{e_j} f)(tuple t)
  std::vector<std::vector<Vec>> G(w, std::vector<Vec>(w));
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < w; ++j) {
      ScalarForm g = wedge(fs, w, n - 1, n - 1, iota[i], iota[j]);
      Vec coords = zero_vec(fs, T);
      size_t idx = 0;
      for (const auto& t : out_tuples) {
        auto it = g.find(t);
        if (it != g.end()) coords[idx] = it->second;
        ++idx;
      }
      G[i][j] = std::move(coords);
    }

  const int unknowns = w * w + 1;  // D entries then c
  std::vector<Vec> rows;
  for (int i = 0; i < w; ++i) {
    for (int j = i; j < w; ++j) {
      for (size_t t = 0; t < T; ++t) {
        Vec row = zero_vec(fs, unknowns);
        bool nz = false;
        for (int a = 0; a < w; ++a) {
          Scalar left = G[a][j][t];   // coefficient of D[a][i]
          Scalar right = G[i][a][t];  // coefficient of D[a][j]
          if (!left.is_zero()) {
            row[a * w + i] += left;
            nz = true;
          }
          if (!right.is_zero()) {
            row[a * w + j] += right;
            nz = true;
          }
        }
        const Scalar& rhs = G[i][j][t];
        if (!rhs.is_zero()) {
          row[w * w] -= rhs;
          nz = true;
        }
        if (nz) rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return std::nullopt;
  Mat solutions = nullspace_basis(Mat::from_rows(fs, rows, unknowns));

  Scalar two = Scalar::from_int(fs, 2);
  for (size_t s = 0; s < solutions.rows(); ++s) {
    Vec sol = solutions.row(s);
    Mat D(fs, w, w);
    for (int a = 0; a < w; ++a)
      for (int i = 0; i < w; ++i) D.at(a, i) = sol[a * w + i];
    Scalar c = sol[w * w];
    // skip scalar solutions (the identity is always present)
    bool scalar_sol = true;
    for (int a = 0; a < w && scalar_sol; ++a)
      for (int i = 0; i < w && scalar_sol; ++i)
        if (!(D.at(a, i) == (a == i ? D.at(0, 0) : Scalar::zero(fs)))) scalar_sol = false;
    if (scalar_sol) continue;
    // a genuine splitting solution satisfies D^2 - c D + q = 0
    Mat M = mat_mul(D, D);
    for (int a = 0; a < w; ++a)
      for (int i = 0; i < w; ++i) M.at(a, i) -= c * D.at(a, i);
    Scalar q = -M.at(0, 0);
    bool quadratic = true;
    for (int a = 0; a < w && quadratic; ++a)
      for (int i = 0; i < w && quadratic; ++i)
        if (!(M.at(a, i) == (a == i ? -q : Scalar::zero(fs)))) quadratic = false;
    if (!quadratic) continue;
    auto disc = scalar_sqrt(c * c - Scalar::from_int(fs, 4) * q);
    if (!disc || disc->is_zero()) continue;
    Scalar alpha = (c + *disc) / two;
    Scalar beta = (c - *disc) / two;
    auto eigenspace = [&](const Scalar& mu) {
      Mat m = D;
      for (int a = 0; a < w; ++a) m.at(a, a) -= mu;
      return Subspace::from_rref(nullspace_basis(m));
    };
    Subspace U1 = eigenspace(alpha), U2 = eigenspace(beta);
    if (U1.dim() != static_cast<size_t>(n) || U2.dim() != static_cast<size_t>(n)) continue;
    if (sum(U1, U2).dim() != static_cast<size_t>(w)) continue;
    std::vector<Vec> a1, a2;
    for (size_t i = 0; i < U1.dim(); ++i) a1.push_back(U1.basis_vector(i));
    for (size_t i = 0; i < U2.dim(); ++i) a2.push_back(U2.basis_vector(i));
    if (form_eval(fs, n, f, a1).is_zero() || form_eval(fs, n, f, a2).is_zero()) continue;
    return std::make_pair(U1, U2);
  }
  return std::nullopt;
}

std::optional<std::pair<Subspace, Subspace>> split_two_blocks(const FieldSpec& fs, int n,
                                                              const ScalarForm& f) {
  if (fs.is_prime_field() && fs.p() == 2) return split_blocks_sweep(fs, n, f);
  auto res = split_via_operator(fs, n, f);
  if (res) return res;
  if (fs.is_prime_field() && fs.p() <= 64) return split_blocks_sweep(fs, n, f);
  return std::nullopt;
}

std::optional<std::map<int, long>> pencil_rank_profile(const NLieAlgebra& a, size_t max_points) {
  if (!a.field.is_prime_field()) return std::nullopt;
  if (!is_class_two(a)) return std::nullopt;
  ClassTwoForms F = make_forms(a);
  const uint64_t p = a.field.p();
  double count = 1;
  for (int i = 0; i < F.r; ++i) count *= static_cast<double>(p);
  count = (count - 1) / static_cast<double>(p - 1);
  if (count > static_cast<double>(max_points)) return std::nullopt;
  std::map<int, long> profile;
  std::vector<uint64_t> c(F.r, 0);
  std::function<void(int, bool)> gen = [&](int i, bool leading) {
    if (i == F.r) {
      if (!leading) return;
      Vec ell = zero_vec(a.field, F.r);
      for (int k = 0; k < F.r; ++k) ell[k] = Scalar::from_residue(a.field, c[k]);
      profile[static_cast<int>(form_rank(a.field, F.w, F.arity, pencil_member(F, ell)))]++;
      return;
    }
    c[i] = 0;
    if (!leading) {
      gen(i + 1, false);
      c[i] = 1;
      gen(i + 1, true);
    } else {
      for (uint64_t v = 0; v < p; ++v) {
        c[i] = v;
        gen(i + 1, true);
      }
    }
    c[i] = 0;
  };
  gen(0, false);
  return profile;
}

}  // namespace nlie
