#include "nlie/invariants.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "nlie/classifier.hpp"
#include "nlie/forms.hpp"

namespace nlie {

int ad_rank(const NLieAlgebra& a, const Vec& v) {
  const int n = a.arity, d = a.dim;
  std::vector<Vec> rows;
  for (const auto& y : increasing_tuples(d, n - 1)) {
    Vec w = zero_vec(a.field, d);
    for (int j = 0; j < d; ++j) {
      if (v[j].is_zero()) continue;
      std::vector<int> idx;
      idx.push_back(j + 1);
      idx.insert(idx.end(), y.begin(), y.end());
      w = axpy(w, v[j], basis_bracket(a, idx));
    }
    if (!is_zero_vec(w)) rows.push_back(w);
  }
  if (rows.empty()) return 0;
  return static_cast<int>(rank(Mat::from_rows(a.field, rows, d)));
}

namespace {

// machine-word elimination mod p for the profile sweeps
int rank_mod_p(std::vector<std::vector<uint64_t>>& rows, int cols, uint64_t p) {
  int r = 0;
  const int nrows = static_cast<int>(rows.size());
  for (int c = 0; c < cols && r < nrows; ++c) {
    int piv = -1;
    for (int i = r; i < nrows; ++i)
      if (rows[i][c] % p != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[r]);
    uint64_t inv = gf_inverse(rows[r][c] % p, p);
    for (int j = c; j < cols; ++j) rows[r][j] = rows[r][j] % p * inv % p;
    for (int i = 0; i < nrows; ++i) {
      if (i == r) continue;
      uint64_t f = rows[i][c] % p;
      if (!f) continue;
      uint64_t neg = p - f;
      for (int j = c; j < cols; ++j) rows[i][j] = (rows[i][j] + neg * rows[r][j]) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace

std::optional<std::map<int, long>> ad_rank_profile(const NLieAlgebra& a, size_t max_points) {
  if (!a.field.is_prime_field()) return std::nullopt;
  const uint64_t p = a.field.p();
  const int d = a.dim;
  const int n = a.arity;
  // [(p^d - 1) / (p - 1)] projective points
  double count = 0;
  {
    double acc = 1;
    for (int i = 0; i < d; ++i) acc *= static_cast<double>(p);
    count = (acc - 1) / static_cast<double>(p - 1);
  }
  if (count > static_cast<double>(max_points)) return std::nullopt;

  // residue tables: for each (n-1)-tuple T a d x d block with column j holding
  // the bracket of e_j against T
  const auto ys = increasing_tuples(d, n - 1);
  std::vector<std::vector<uint64_t>> blocks;  // each d*d, row-major
  for (const auto& y : ys) {
    std::vector<uint64_t> block(static_cast<size_t>(d) * d, 0);
    bool nonzero = false;
    for (int j = 1; j <= d; ++j) {
      std::vector<int> idx;
      idx.push_back(j);
      idx.insert(idx.end(), y.begin(), y.end());
      Vec w = basis_bracket(a, idx);
      for (int k = 0; k < d; ++k) {
        uint64_t r = w[k].residue();
        if (r) {
          block[static_cast<size_t>(k) * d + (j - 1)] = r;
          nonzero = true;
        }
      }
    }
    if (nonzero) blocks.push_back(std::move(block));
  }

  std::map<int, long> profile;
  std::vector<uint64_t> coords(d, 0);
  std::vector<std::vector<uint64_t>> rows;
  auto point_rank = [&]() {
    rows.clear();
    for (const auto& block : blocks) {
      std::vector<uint64_t> row(d, 0);
      bool nz = false;
      for (int k = 0; k < d; ++k) {
        uint64_t acc = 0;
        const uint64_t* brow = block.data() + static_cast<size_t>(k) * d;
        for (int j = 0; j < d; ++j) acc += brow[j] * coords[j];
        acc %= p;
        row[k] = acc;
        nz = nz || acc;
      }
      if (nz) rows.push_back(std::move(row));
    }
    return rank_mod_p(rows, d, p);
  };
  // representatives: first nonzero coordinate equal to 1
  std::function<void(int, bool)> gen = [&](int i, bool leading) {
    if (i == d) {
      if (leading) profile[point_rank()]++;
      return;
    }
    coords[i] = 0;
    if (!leading) {
      gen(i + 1, false);
      coords[i] = 1;
      gen(i + 1, true);
    } else {
      for (uint64_t c = 0; c < p; ++c) {
        coords[i] = c;
        gen(i + 1, true);
      }
    }
    coords[i] = 0;
  };
  gen(0, false);
  return profile;
}

NLieAlgebra reduce_mod_p(const NLieAlgebra& a, uint32_t p) {
  FieldSpec gf = FieldSpec::GF(p);
  NLieAlgebra out = abelian_algebra(a.arity, a.dim, gf);
  out.basis_labels = a.basis_labels;
  for (const auto& [key, value] : a.brackets) {
    Vec v = zero_vec(gf, a.dim);
    for (int i = 0; i < a.dim; ++i) {
      if (!value[i].is_integral()) throw FieldError("reduce_mod_p: non-integral coefficient");
      v[i] = Scalar::from_residue(gf, value[i].reduce_mod(p));
    }
    out.set_bracket(key, v);
  }
  return out;
}

std::string Fingerprint::to_string() const {
  std::ostringstream s;
  s << "n=" << arity << " d=" << dim << " dimA2=" << dim_derived << " dimZ=" << dim_center
    << " dimA2capZ=" << dim_derived_cap_center << " " << nil.to_string();
  for (const auto& [p, prof] : profiles) {
    s << " profile@" << p << "={";
    bool first = true;
    for (const auto& [r, c] : prof) {
      if (!first) s << ",";
      s << r << ":" << c;
      first = false;
    }
    s << "}";
  }
  return s.str();
}

Fingerprint fingerprint(const NLieAlgebra& a, const FingerprintOptions& opts) {
  Fingerprint fp;
  fp.arity = a.arity;
  fp.dim = a.dim;
  Subspace a2 = derived_subalgebra(a);
  Subspace z = center(a);
  fp.dim_derived = static_cast<int>(a2.dim());
  fp.dim_center = static_cast<int>(z.dim());
  fp.dim_derived_cap_center = static_cast<int>(intersect(a2, z).dim());
  fp.nil = nilpotency_class(a);
  if (opts.with_profile) {
    if (a.field.is_prime_field()) {
      auto prof = ad_rank_profile(a, opts.max_profile_points);
      if (prof) fp.profiles.push_back({a.field.p(), *prof});
    } else {
      bool integral = true;
      for (const auto& [key, value] : a.brackets)
        for (const auto& c : value) integral = integral && c.is_integral();
      if (integral) {
        for (uint32_t p : {2u, 3u}) {
          auto prof = ad_rank_profile(reduce_mod_p(a, p), opts.max_profile_points);
          if (prof) fp.profiles.push_back({p, *prof});
        }
      }
    }
  }
  return fp;
}

WitnessCheck verify_witness(const NLieAlgebra& a, const NLieAlgebra& b, const Mat& P) {
  WitnessCheck res;
  if (a.dim != b.dim || a.arity != b.arity || !(a.field == b.field)) return res;
  NLieAlgebra t = apply_basis_change(a, P);  // throws SingularError on bad P
  if (t.brackets == b.brackets) {
    res.ok = true;
    return res;
  }
  for (const auto& tup : increasing_tuples(a.dim, a.arity)) {
    const Vec* x = t.find_bracket(tup);
    const Vec* y = b.find_bracket(tup);
    if ((x == nullptr) != (y == nullptr) || (x && y && !(*x == *y))) {
      res.differing = tup;
      break;
    }
  }
  return res;
}

namespace {

struct IndexStats {
  int ad = 0;
  bool in_center = false;
  bool in_derived = false;
  int key_degree = 0;
  bool operator==(const IndexStats&) const = default;
};

std::vector<IndexStats> index_stats(const NLieAlgebra& a) {
  Subspace z = center(a), a2 = derived_subalgebra(a);
  std::vector<IndexStats> out(a.dim);
  for (int j = 0; j < a.dim; ++j) {
    Vec e = unit_vec(a.field, a.dim, j);
    out[j].ad = ad_rank(a, e);
    out[j].in_center = z.contains(e);
    out[j].in_derived = a2.contains(e);
  }
  for (const auto& [key, value] : a.brackets)
    for (int i : key) out[i - 1].key_degree++;
  return out;
}

struct PermSearcher {
  const NLieAlgebra& a;
  const NLieAlgebra& b;
  size_t budget;
  std::vector<IndexStats> stats_a, stats_b;
  std::vector<Scalar> scalar_choices;
  std::vector<int> sigma;      // b position (0-based) -> a position
  std::vector<Scalar> scale;   // b position -> scalar
  std::vector<bool> used;
  std::vector<Tuple> all_tuples;
  size_t tested = 0;
  size_t nodes = 0;
  bool out_of_budget = false;
  std::optional<Mat> found;

  PermSearcher(const NLieAlgebra& a_, const NLieAlgebra& b_, size_t budget_)
      : a(a_), b(b_), budget(budget_) {
    stats_a = index_stats(a);
    stats_b = index_stats(b);
    if (a.field.is_prime_field()) {
      for (uint64_t c = 1; c < a.field.p(); ++c)
        scalar_choices.push_back(Scalar::from_residue(a.field, c));
    } else {
      scalar_choices.push_back(Scalar::from_int(a.field, 1));
      scalar_choices.push_back(Scalar::from_int(a.field, -1));
    }
    sigma.assign(a.dim, -1);
    scale.assign(a.dim, Scalar::one(a.field));
    used.assign(a.dim, false);
    all_tuples = increasing_tuples(a.dim, a.arity);
  }

  // check every b-tuple fully inside the assigned prefix
  bool consistent(int assigned_upto) {
    for (const auto& t : all_tuples) {
      if (t.back() - 1 > assigned_upto) continue;
      // transported value: (prod scales) * basis_bracket_a(sigma(t))
      Scalar prod = Scalar::one(a.field);
      std::vector<int> mapped(t.size());
      for (size_t i = 0; i < t.size(); ++i) {
        mapped[i] = sigma[t[i] - 1] + 1;
        prod *= scale[t[i] - 1];
      }
      Vec u = basis_bracket(a, mapped);
      const Vec* bv = b.find_bracket(t);
      for (int k = 0; k <= assigned_upto; ++k) {
        Scalar lhs = prod * u[sigma[k]];
        Scalar rhs = bv ? (*bv)[k] * scale[k] : Scalar::zero(a.field);
        if (!(lhs == rhs)) return false;
      }
      // positions outside the assigned image must also vanish eventually;
      // checked implicitly when those positions are assigned
    }
    return true;
  }

  void search(int pos) {
    if (found || out_of_budget) return;
    if (++nodes > budget * 50) {
      out_of_budget = true;
      return;
    }
    if (pos == a.dim) {
      ++tested;
      if (tested > budget) {
        out_of_budget = true;
        return;
      }
      Mat P(a.field, a.dim, a.dim);
      for (int i = 0; i < a.dim; ++i) P.at(sigma[i], i) = scale[i];
      if (verify_witness(a, b, P).ok) found = P;
      return;
    }
    for (int img = 0; img < a.dim; ++img) {
      if (used[img]) continue;
      if (!(stats_a[img] == stats_b[pos])) continue;
      used[img] = true;
      sigma[pos] = img;
      for (const auto& c : scalar_choices) {
        scale[pos] = c;
        if (consistent(pos)) search(pos + 1);
        if (found || out_of_budget) break;
      }
      used[img] = false;
      sigma[pos] = -1;
      if (found || out_of_budget) return;
    }
  }
};

}  // namespace

PermSearchResult signed_perm_iso(const NLieAlgebra& a, const NLieAlgebra& b, size_t budget) {
  PermSearchResult res;
  if (a.dim != b.dim || a.arity != b.arity || !(a.field == b.field)) {
    res.exhausted = true;
    return res;
  }
  PermSearcher s(a, b, budget);
  s.search(0);
  res.witness = s.found;
  res.tested = s.tested;
  res.exhausted = !s.out_of_budget;
  return res;
}

GradedResult graded_iso_search(const NLieAlgebra& a, const NLieAlgebra& b, size_t budget) {
  GradedResult res;
  if (a.dim != b.dim || a.arity != b.arity || !(a.field == b.field)) {
    res.status = GradedStatus::none;
    res.note = "shape mismatch";
    return res;
  }
  Fingerprint fa = fingerprint(a), fb = fingerprint(b);
  if (!(fa == fb)) {
    res.status = GradedStatus::none;
    res.note = "fingerprints differ";
    return res;
  }
  if (a.brackets.empty() && b.brackets.empty()) {
    res.status = GradedStatus::found;
    res.witness = Mat::identity(a.field, a.dim);
    return res;
  }
  // constructive route through the classifier's normal forms
  try {
    ClassificationResult ca = classify(a);
    ClassificationResult cb = classify(b);
    if (ca.label == cb.label) {
      Mat P = mat_mul(ca.witness, invert(cb.witness));
      if (verify_witness(a, b, P).ok) {
        res.status = GradedStatus::found;
        res.witness = P;
        res.checked = 1;
        return res;
      }
    } else {
      res.status = GradedStatus::none;
      res.note = "normal forms differ: " + ca.label.to_string() + " vs " + cb.label.to_string();
      return res;
    }
  } catch (const NLieError&) {
    // fall through to enumeration
  }
  if (!a.field.is_prime_field() || !is_class_two(a) || !is_class_two(b)) {
    res.status = GradedStatus::exhausted;
    res.note = "enumeration unavailable for this input";
    return res;
  }
  // bounded enumeration of block-triangular candidates: invertible map on a
  // complement of A^2 plus invertible map on A^2 (the mixing block does not
  // affect the induced forms)
  ClassTwoForms Fa = make_forms(a), Fb = make_forms(b);
  if (Fa.w != Fb.w || Fa.r != Fb.r) {
    res.status = GradedStatus::none;
    res.note = "graded dimensions differ";
    return res;
  }
  const uint64_t p = a.field.p();
  const int w = Fa.w, r = Fa.r;
  double total = 1;
  for (int i = 0; i < w * w + r * r; ++i) total *= static_cast<double>(p);
  size_t checked = 0;
  std::vector<uint64_t> digits(w * w + r * r, 0);
  auto bump = [&]() {
    for (auto& x : digits) {
      if (++x < p) return true;
      x = 0;
    }
    return false;
  };
  while (true) {
    Mat g(a.field, w, w), h(a.field, r, r);
    for (int i = 0; i < w; ++i)
      for (int j = 0; j < w; ++j) g.at(i, j) = Scalar::from_residue(a.field, digits[i * w + j]);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        h.at(i, j) = Scalar::from_residue(a.field, digits[w * w + i * r + j]);
    ++checked;
    if (checked > budget) {
      res.status = GradedStatus::exhausted;
      res.checked = checked - 1;
      res.note = "budget exhausted";
      return res;
    }
    if (is_invertible(g) && is_invertible(h)) {
      // candidate witness: b-basis -> a-basis on the graded pieces
      Mat P(a.field, a.dim, a.dim);
      // complement part: column for b's w-index k = lift_a(g * e_k)
      for (int k = 0; k < w; ++k) {
        Vec img = zero_vec(a.field, w);
        for (int i = 0; i < w; ++i) img[i] = g.at(i, k);
        Vec amb = Fa.lift(img);
        for (int i = 0; i < a.dim; ++i) P.at(i, Fb.w_idx[k]) = amb[i];
      }
      // center part: b's Z basis mapped via h on A^2 coords, identity on spares
      for (int k = 0; k < r; ++k) {
        Vec img = zero_vec(a.field, r);
        for (int i = 0; i < r; ++i) img[i] = h.at(i, k);
        Vec amb = Fa.a2_vector(img);
        Vec bvec = Fb.A2.basis_vector(k);
        // column index: we place A^2 images on b's A^2 pivot columns
        size_t col = Fb.A2.pivots()[k];
        for (int i = 0; i < a.dim; ++i) P.at(i, col) = amb[i];
        (void)bvec;
      }
      auto sp_a = Fa.spare_basis();
      auto sp_b = Fb.spare_basis();
      bool sp_ok = sp_a.size() == sp_b.size();
      if (sp_ok) {
        for (size_t k = 0; k < sp_b.size(); ++k) {
          // find the column for b's spare: its leading pivot position
          size_t col = 0;
          while (col < static_cast<size_t>(a.dim) && sp_b[k][col].is_zero()) ++col;
          for (int i = 0; i < a.dim; ++i) P.at(i, col) = sp_a[k][i];
        }
      }
      if (sp_ok && is_invertible(P) && verify_witness(a, b, P).ok) {
        res.status = GradedStatus::found;
        res.witness = P;
        res.checked = checked;
        return res;
      }
    }
    if (!bump()) break;
  }
  res.status = GradedStatus::none;
  res.checked = checked;
  res.note = "enumeration complete";
  return res;
}

}  // namespace nlie
