#include "nlie/classifier.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "nlie/forms.hpp"
#include "nlie/invariants.hpp"

namespace nlie {

namespace {

[[noreturn]] void fail(ClassifyFail kind, const std::string& msg, const std::vector<std::string>& trace) {
  throw ClassifyError(kind, msg, trace);
}

std::string vec_str(const Vec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].to_string();
  }
  return s + "]";
}

/// Fills catalog target positions with the actual bracket values of their
/// rows, then transports and compares exactly. pos_to_vec carries the
/// argument and spare placements (1-based catalog positions).
Mat assemble_and_verify(const NLieAlgebra& a, const Label& label,
                        std::map<int, Vec> pos_to_vec, std::vector<std::string>& trace) {
  NLieAlgebra cat = build(label, a.field);
  if (cat.dim != a.dim || cat.arity != a.arity)
    fail(ClassifyFail::NormalizationFailure, "catalog shape mismatch for " + label.to_string(), trace);
  for (const auto& [key, value] : cat.brackets) {
    // catalog rows target a single unit coordinate
    int target = -1;
    for (int i = 0; i < cat.dim; ++i) {
      if (value[i].is_zero()) continue;
      if (target != -1 || !value[i].is_one())
        fail(ClassifyFail::NormalizationFailure, "catalog row is not unit-targeted", trace);
      target = i + 1;
    }
    std::vector<Vec> args;
    for (int idx : key) {
      auto it = pos_to_vec.find(idx);
      if (it == pos_to_vec.end())
        fail(ClassifyFail::NormalizationFailure, "argument position unassigned in normalization", trace);
      args.push_back(it->second);
    }
    Vec actual = bracket(a, args);
    auto it = pos_to_vec.find(target);
    if (it == pos_to_vec.end()) {
      if (is_zero_vec(actual))
        fail(ClassifyFail::NormalizationFailure, "normalized bracket row vanished", trace);
      pos_to_vec[target] = actual;
    } else if (!(it->second == actual)) {
      fail(ClassifyFail::NormalizationFailure, "normalized rows disagree on a shared target", trace);
    }
  }
  if (static_cast<int>(pos_to_vec.size()) != a.dim)
    fail(ClassifyFail::NormalizationFailure, "normalization left basis positions unassigned", trace);
  std::vector<Vec> cols;
  for (int i = 1; i <= a.dim; ++i) cols.push_back(pos_to_vec.at(i));
  Mat P = Mat::from_cols(a.field, cols, a.dim);
  if (!is_invertible(P))
    fail(ClassifyFail::NormalizationFailure, "normalized basis is singular", trace);
  WitnessCheck check = verify_witness(a, cat, P);
  if (!check.ok)
    fail(ClassifyFail::NormalizationFailure,
         "normalized table differs from " + label.to_string() + " at " + tuple_to_string(check.differing),
         trace);
  trace.push_back("witness to " + label.to_string() + " verified");
  return P;
}

/// Positions of a catalog table that are neither bracket arguments nor targets.
std::vector<int> spare_positions(const NLieAlgebra& cat) {
  std::vector<bool> used(cat.dim + 1, false);
  for (const auto& [key, value] : cat.brackets) {
    for (int i : key) used[i] = true;
    for (int i = 0; i < cat.dim; ++i)
      if (!value[i].is_zero()) used[i + 1] = true;
  }
  std::vector<int> out;
  for (int i = 1; i <= cat.dim; ++i)
    if (!used[i]) out.push_back(i);
  return out;
}

void place_spares(const NLieAlgebra& a, const Label& label, const ClassTwoForms& F,
                  std::map<int, Vec>& pos, std::vector<std::string>& trace) {
  NLieAlgebra cat = build(label, a.field);
  std::vector<int> sp = spare_positions(cat);
  std::vector<Vec> sb = F.spare_basis();
  if (sp.size() != sb.size())
    fail(ClassifyFail::NormalizationFailure,
         "central spare count mismatch for " + label.to_string(), trace);
  for (size_t i = 0; i < sp.size(); ++i) pos[sp[i]] = sb[i];
}

// ---------- dim A^2 = 1: Heisenberg route ----------

struct Ctx {
  const NLieAlgebra& a;
  ClassTwoForms F;
  std::vector<std::string> trace;
};

ClassificationResult heisenberg_route(Ctx& ctx) {
  const NLieAlgebra& a = ctx.a;
  ClassTwoForms& F = ctx.F;
  const int n = a.arity;
  if (F.w % n != 0)
    fail(ClassifyFail::NormalizationFailure,
         "derived line with complement dimension " + std::to_string(F.w) +
             " not a multiple of the arity (no block decomposition exists)",
         ctx.trace);
  const int m = F.w / n;
  const int k = F.spares;
  ctx.trace.push_back("derived subalgebra is a line; m = (d - dim Z)/n = " + std::to_string(m));
  Label label = (k == 0) ? Label::H(n, m) : Label::HplusF(n, m, k);

  ScalarForm phi = pencil_member(F, {Scalar::one(a.field)});
  std::map<int, Vec> pos;
  if (m == 1) {
    for (int i = 0; i < n; ++i) pos[i + 1] = F.lift(unit_vec(a.field, F.w, i));
  } else if (m == 2) {
    auto blocks = split_two_blocks(a.field, n, phi);
    if (!blocks)
      fail(ClassifyFail::NormalizationFailure,
           "the induced form does not split into two disjoint blocks", ctx.trace);
    auto [U1, U2] = *blocks;
    ctx.trace.push_back("form split into two blocks of dimension " + std::to_string(n));
    std::vector<Vec> b1, b2;
    for (size_t i = 0; i < U1.dim(); ++i) b1.push_back(U1.basis_vector(i));
    for (size_t i = 0; i < U2.dim(); ++i) b2.push_back(U2.basis_vector(i));
    // both blocks must produce the same central value: rescale block 2
    Scalar c1 = form_eval(a.field, n, phi, b1);
    Scalar c2 = form_eval(a.field, n, phi, b2);
    if (c1.is_zero() || c2.is_zero())
      fail(ClassifyFail::NormalizationFailure, "degenerate Heisenberg block", ctx.trace);
    b2[0] = scale(c1 / c2, b2[0]);
    // mixed tuples must vanish; the final exact comparison checks this
    for (int i = 0; i < n; ++i) pos[i + 1] = F.lift(b1[i]);
    for (int i = 0; i < n; ++i) pos[n + i + 1] = F.lift(b2[i]);
  } else {
    fail(ClassifyFail::NormalizationFailure,
         "block count m = " + std::to_string(m) + " out of range", ctx.trace);
  }
  place_spares(a, label, F, pos, ctx.trace);
  Mat P = assemble_and_verify(a, label, pos, ctx.trace);
  return {label, P, ctx.trace};
}

// ---------- pencil rank tests ----------

/// All nonzero members of the full pencil have rank n. Exact: over small
/// prime fields by enumeration, otherwise by a grid whose size bounds the
/// degree of every contraction minor.
bool pencil_all_rank_n(const ClassTwoForms& F) {
  const int n = F.arity, r = F.r;
  const FieldSpec& fs = F.field;
  auto rank_ok = [&](const Vec& ell) {
    ScalarForm f = pencil_member(F, ell);
    if (form_is_zero(f)) return true;
    return form_rank(fs, F.w, n, f) == static_cast<size_t>(n);
  };
  if (fs.is_prime_field() && fs.p() <= 7) {
    // enumerate all projective covectors
    std::vector<uint64_t> c(r, 0);
    std::function<bool(int, bool)> gen = [&](int i, bool leading) -> bool {
      if (i == r) {
        if (!leading) return true;
        Vec ell = zero_vec(fs, r);
        for (int k = 0; k < r; ++k) ell[k] = Scalar::from_residue(fs, c[k]);
        return rank_ok(ell);
      }
      c[i] = 0;
      if (!leading) {
        if (!gen(i + 1, false)) return false;
        c[i] = 1;
        if (!gen(i + 1, true)) return false;
      } else {
        for (uint64_t v = 0; v < fs.p(); ++v) {
          c[i] = v;
          if (!gen(i + 1, true)) return false;
        }
      }
      c[i] = 0;
      return true;
    };
    return gen(0, false);
  }
  // grid of size n+2 per affine chart: a contraction minor has degree <= n+1
  // in each pencil coordinate, so vanishing on the grid is vanishing
  // identically
  const int g = n + 2;
  std::vector<Vec> points;
  std::function<void(int, int, Vec&)> gen = [&](int lead, int i, Vec& cur) {
    if (i == r) {
      points.push_back(cur);
      return;
    }
    if (i < lead) {
      cur[i] = Scalar::zero(fs);
      gen(lead, i + 1, cur);
    } else if (i == lead) {
      cur[i] = Scalar::one(fs);
      gen(lead, i + 1, cur);
    } else {
      for (int v = 0; v < g; ++v) {
        cur[i] = Scalar::from_int(fs, v);
        gen(lead, i + 1, cur);
        if (fs.is_prime_field() && static_cast<uint64_t>(v + 1) >= fs.p()) break;
      }
    }
  };
  for (int lead = 0; lead < r; ++lead) {
    Vec cur = zero_vec(fs, r);
    gen(lead, 0, cur);
  }
  for (const auto& ell : points)
    if (!rank_ok(ell)) return false;
  return true;
}

Vec unit_covector(const FieldSpec& fs, int r, int i) { return unit_vec(fs, r, i); }

/// Deduplicate projective covectors (scale to leading one).
Vec projective_normalize(const Vec& ell) {
  for (const auto& c : ell) {
    if (!c.is_zero()) {
      Scalar inv = c.inverse();
      return scale(inv, ell);
    }
  }
  return ell;
}

// ---------- construction helpers ----------

std::vector<Vec> subspace_vectors(const Subspace& s) {
  std::vector<Vec> out;
  for (size_t i = 0; i < s.dim(); ++i) out.push_back(s.basis_vector(i));
  return out;
}

/// Echelon complement of a set of vectors inside F^w.
std::vector<Vec> complement_in_w(const FieldSpec& fs, int w, const std::vector<Vec>& vs) {
  Subspace s = Subspace::span(fs, w, vs);
  std::vector<Vec> out;
  for (size_t j : s.complement_indices()) out.push_back(unit_vec(fs, w, j));
  return out;
}

// ---------- r = 2 ----------

ClassificationResult two_form_route(Ctx& ctx) {
  const NLieAlgebra& a = ctx.a;
  ClassTwoForms& F = ctx.F;
  const int n = a.arity, d = a.dim, w = F.w;
  const FieldSpec& fs = a.field;

  if (pencil_all_rank_n(F)) {
    // common (n-1)-dimensional support: two overlapping blocks sharing all
    // but one argument
    if (w != n + 1)
      fail(ClassifyFail::NormalizationFailure,
           "rank-n pencil with complement dimension " + std::to_string(w), ctx.trace);
    Label label;
    if (d == n + 3)
      label = Label::A(n, d, 3);
    else if (d == n + 4)
      label = Label::A(n, d, 1);
    else if (d == n + 5)
      label = Label::A(n, d, 1);
    else
      fail(ClassifyFail::NormalizationFailure, "unexpected dimension in rank-n pencil route",
           ctx.trace);
    ctx.trace.push_back("pencil of decomposable forms sweeping a common core");
    ScalarForm fa = pencil_member(F, unit_covector(fs, 2, 0));
    ScalarForm fb = pencil_member(F, unit_covector(fs, 2, 1));
    Subspace Ra = form_radical(fs, w, n, fa);
    Subspace Rb = form_radical(fs, w, n, fb);
    if (Ra.dim() != 1 || Rb.dim() != 1 || Ra == Rb)
      fail(ClassifyFail::NormalizationFailure, "degenerate radicals in the sweeping pencil",
           ctx.trace);
    Vec x1 = Rb.basis_vector(0);
    Vec xn1 = Ra.basis_vector(0);
    auto M = complement_in_w(fs, w, {x1, xn1});
    if (static_cast<int>(M.size()) != n - 1)
      fail(ClassifyFail::NormalizationFailure, "core complement has wrong dimension", ctx.trace);
    std::map<int, Vec> pos;
    pos[1] = F.lift(x1);
    for (int i = 0; i < n - 1; ++i) pos[2 + i] = F.lift(M[i]);
    pos[n + 1] = F.lift(xn1);
    place_spares(a, label, F, pos, ctx.trace);
    Mat P = assemble_and_verify(a, label, pos, ctx.trace);
    return {label, P, ctx.trace};
  }

  // two rank-n axes, everything between has larger rank
  auto axes = rank_n_points_on_line(F, unit_covector(fs, 2, 0), unit_covector(fs, 2, 1));
  if (!axes)
    fail(ClassifyFail::NormalizationFailure, "pencil axis computation failed", ctx.trace);
  std::vector<Vec> uniq;
  for (const auto& ell : *axes) {
    Vec nrm = projective_normalize(ell);
    bool dup = false;
    for (const auto& u : uniq) dup = dup || u == nrm;
    if (!dup) uniq.push_back(nrm);
  }
  if (uniq.size() != 2)
    fail(ClassifyFail::NormalizationFailure,
         "expected two decomposable pencil axes, found " + std::to_string(uniq.size()), ctx.trace);
  std::sort(uniq.begin(), uniq.end(), [](const Vec& x, const Vec& y) {
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] == y[i]) continue;
      return x[i].to_string() < y[i].to_string();
    }
    return false;
  });
  ctx.trace.push_back("decomposable pencil axes found");
  Subspace R1 = form_radical(fs, w, n, pencil_member(F, uniq[0]));
  Subspace R2 = form_radical(fs, w, n, pencil_member(F, uniq[1]));
  if (R1.dim() != static_cast<size_t>(w - n) || R2.dim() != R1.dim() ||
      intersect(R1, R2).dim() != 0)
    fail(ClassifyFail::NormalizationFailure, "axis radicals do not split the complement",
         ctx.trace);
  Label label;  // blocks overlap in n - (w - n) arguments
  if (d == n + 4 && w == n + 2)
    label = Label::A(n, d, 2);
  else if (d == n + 5 && w == n + 2)
    label = Label::A(n, d, 2);
  else if (d == n + 5 && w == n + 3 && n >= 4)
    label = Label::A(n, d, 3);
  else if (d == n + 5 && w == n + 3 && n == 3)
    label = Label::A387();
  else
    fail(ClassifyFail::NormalizationFailure, "axis split with unexpected dimensions", ctx.trace);

  std::vector<Vec> lead = subspace_vectors(R2), tail = subspace_vectors(R1);
  std::vector<Vec> mids;
  {
    std::vector<Vec> both = lead;
    both.insert(both.end(), tail.begin(), tail.end());
    mids = complement_in_w(fs, w, both);
  }
  std::map<int, Vec> pos;
  if (label.kind == Label::Kind::A387) {
    for (int i = 0; i < 3; ++i) pos[1 + i] = F.lift(lead[i]);
    for (int i = 0; i < 3; ++i) pos[4 + i] = F.lift(tail[i]);
  } else if (label.k == 2) {
    // [e1..en] and [e3..e_{n+2}] share e3..en
    for (int i = 0; i < 2; ++i) pos[1 + i] = F.lift(lead[i]);
    for (int i = 0; i < n - 2; ++i) pos[3 + i] = F.lift(mids[i]);
    for (int i = 0; i < 2; ++i) pos[n + 1 + i] = F.lift(tail[i]);
  } else {  // A(n, n+5, 3): [e1..en] and [e4..e_{n+3}] share e4..en
    for (int i = 0; i < 3; ++i) pos[1 + i] = F.lift(lead[i]);
    for (int i = 0; i < n - 3; ++i) pos[4 + i] = F.lift(mids[i]);
    for (int i = 0; i < 3; ++i) pos[n + 1 + i] = F.lift(tail[i]);
  }
  place_spares(a, label, F, pos, ctx.trace);
  Mat P = assemble_and_verify(a, label, pos, ctx.trace);
  return {label, P, ctx.trace};
}

// ---------- r = 3 ----------

/// Intersection of the radicals of two pencil members, as a subspace of F^w.
Subspace rad_intersection(const ClassTwoForms& F, const Vec& ell1, const Vec& ell2) {
  Subspace r1 = form_radical(F.field, F.w, F.arity, pencil_member(F, ell1));
  Subspace r2 = form_radical(F.field, F.w, F.arity, pencil_member(F, ell2));
  return intersect(r1, r2);
}

ClassificationResult three_form_route(Ctx& ctx) {
  const NLieAlgebra& a = ctx.a;
  ClassTwoForms& F = ctx.F;
  const int n = a.arity, d = a.dim, w = F.w;
  const FieldSpec& fs = a.field;

  if (pencil_all_rank_n(F)) {
    if (w == n + 1) {
      // three interior products of a common top form
      Label label;
      if (d == n + 4)
        label = Label::A(n, d, 3);
      else if (d == n + 5)
        label = Label::A(n, d, 4);
      else
        fail(ClassifyFail::NormalizationFailure, "unexpected dimension for the contracted-top route",
             ctx.trace);
      ctx.trace.push_back("net of decomposable forms contracted from one top form");
      std::vector<Vec> v(3);
      for (int k = 0; k < 3; ++k) {
        Subspace rk = form_radical(fs, w, n, pencil_member(F, unit_covector(fs, 3, k)));
        if (rk.dim() != 1)
          fail(ClassifyFail::NormalizationFailure, "component radical is not a line", ctx.trace);
        v[k] = rk.basis_vector(0);
      }
      if (Subspace::span(fs, w, {v[0], v[1], v[2]}).dim() != 3)
        fail(ClassifyFail::NormalizationFailure, "component radicals are dependent", ctx.trace);
      auto T = complement_in_w(fs, w, {v[0], v[1], v[2]});
      std::map<int, Vec> pos;
      if (label.k == 3) {  // rows miss e_{n+2}, e1, e2
        pos[n + 2] = F.lift(v[0]);
        pos[1] = F.lift(v[1]);
        pos[2] = F.lift(v[2]);
        for (size_t i = 0; i < T.size(); ++i) pos[3 + static_cast<int>(i)] = F.lift(T[i]);
      } else {  // A(n, n+5, 4): rows miss e_{n+1}, e1, e2
        pos[n + 1] = F.lift(v[0]);
        pos[1] = F.lift(v[1]);
        pos[2] = F.lift(v[2]);
        for (size_t i = 0; i < T.size(); ++i) pos[3 + static_cast<int>(i)] = F.lift(T[i]);
      }
      place_spares(a, label, F, pos, ctx.trace);
      Mat P = assemble_and_verify(a, label, pos, ctx.trace);
      return {label, P, ctx.trace};
    }
    if (w == n + 2 && d == n + 5) {
      // common (n-1)-core swept against a three-dimensional side space
      Label label = Label::A(n, d, 5);
      ctx.trace.push_back("net of decomposable forms sweeping a common core");
      Subspace R[3];
      for (int k = 0; k < 3; ++k) {
        R[k] = form_radical(fs, w, n, pencil_member(F, unit_covector(fs, 3, k)));
        if (R[k].dim() != 2)
          fail(ClassifyFail::NormalizationFailure, "component radical is not a plane", ctx.trace);
      }
      Subspace U = sum(sum(R[0], R[1]), R[2]);
      if (U.dim() != 3)
        fail(ClassifyFail::NormalizationFailure, "radical span is not three-dimensional", ctx.trace);
      Subspace i23 = intersect(R[1], R[2]);
      Subspace i13 = intersect(R[0], R[2]);
      Subspace i12 = intersect(R[0], R[1]);
      if (i23.dim() != 1 || i13.dim() != 1 || i12.dim() != 1)
        fail(ClassifyFail::NormalizationFailure, "pairwise radical lines are degenerate", ctx.trace);
      Vec w1 = i23.basis_vector(0), w2 = i13.basis_vector(0), w3 = i12.basis_vector(0);
      if (Subspace::span(fs, w, {w1, w2, w3}).dim() != 3)
        fail(ClassifyFail::NormalizationFailure, "radical corner lines are dependent", ctx.trace);
      auto M = complement_in_w(fs, w, {w1, w2, w3});
      std::map<int, Vec> pos;
      pos[1] = F.lift(w1);
      for (size_t i = 0; i < M.size(); ++i) pos[2 + static_cast<int>(i)] = F.lift(M[i]);
      pos[n + 1] = F.lift(w2);
      pos[n + 2] = F.lift(w3);
      place_spares(a, label, F, pos, ctx.trace);
      Mat P = assemble_and_verify(a, label, pos, ctx.trace);
      return {label, P, ctx.trace};
    }
    fail(ClassifyFail::NormalizationFailure,
         "rank-n net with complement dimension " + std::to_string(w), ctx.trace);
  }

  if (d != n + 5 || w != n + 2)
    fail(ClassifyFail::NormalizationFailure, "three-dimensional derived subalgebra out of range",
         ctx.trace);

  // chain of three blocks: the decomposable locus is a pair of pencil lines
  Label label = Label::A(n, d, 6);
  struct ProbeLine {
    Vec l0, l1;  // points l0 + t l1 plus l1 at infinity
  };
  std::vector<ProbeLine> probes = {
      {unit_covector(fs, 3, 0), unit_covector(fs, 3, 1)},   // z = 0
      {unit_covector(fs, 3, 0), unit_covector(fs, 3, 2)},   // y = 0
      {unit_covector(fs, 3, 1), unit_covector(fs, 3, 2)},   // x = 0
      {add(unit_covector(fs, 3, 0), unit_covector(fs, 3, 1)), unit_covector(fs, 3, 2)},
      {axpy(unit_covector(fs, 3, 0), Scalar::from_int(fs, 2), unit_covector(fs, 3, 1)),
       unit_covector(fs, 3, 2)},
      {add(unit_covector(fs, 3, 0), unit_covector(fs, 3, 2)), unit_covector(fs, 3, 1)},
  };
  std::vector<Subspace> lines;        // 2-dim covector subspaces
  std::vector<Vec> points;            // rank-n pencil points (projective reps)
  auto add_line = [&](const Vec& p1, const Vec& p2) {
    Subspace l = Subspace::span(fs, 3, {p1, p2});
    if (l.dim() != 2) return;
    for (const auto& existing : lines)
      if (existing == l) return;
    // certify: every member of the candidate line has rank n
    if (line_all_rank_n(F, p1, sub(p2, p1)) && line_all_rank_n(F, p1, p2) &&
        line_all_rank_n(F, p2, p1))
      lines.push_back(l);
  };
  for (const auto& probe : probes) {
    if (line_all_rank_n(F, probe.l0, probe.l1)) {
      add_line(probe.l0, probe.l1);
      continue;
    }
    auto pts = rank_n_points_on_line(F, probe.l0, probe.l1);
    if (!pts)
      fail(ClassifyFail::NormalizationFailure, "pencil locus computation failed", ctx.trace);
    for (const auto& p : *pts) {
      Vec nrm = projective_normalize(p);
      bool dup = false;
      for (const auto& q : points) dup = dup || q == nrm;
      if (!dup) points.push_back(nrm);
    }
  }
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j) add_line(points[i], points[j]);
  if (lines.size() != 2)
    fail(ClassifyFail::NormalizationFailure,
         "decomposable locus is not a pair of pencil lines (found " +
             std::to_string(lines.size()) + "); the table lies outside the classified list",
         ctx.trace);
  ctx.trace.push_back("decomposable locus: two pencil lines");

  // intersection point of the two lines: the middle block
  Subspace mid = intersect(lines[0], lines[1]);
  if (mid.dim() != 1)
    fail(ClassifyFail::NormalizationFailure, "pencil lines do not meet in a point", ctx.trace);
  Vec p_mid = mid.basis_vector(0);

  auto two_points_on = [&](const Subspace& line) {
    std::vector<Vec> pts;
    Vec b0 = line.basis_vector(0), b1 = line.basis_vector(1);
    pts.push_back(b0);
    pts.push_back(b1);
    pts.push_back(add(b0, b1));
    return pts;
  };
  auto corner = [&](const Subspace& line) {
    // common radical line of all members of the pencil line
    auto pts = two_points_on(line);
    Subspace acc = rad_intersection(F, pts[0], pts[1]);
    acc = intersect(acc, form_radical(fs, w, n, pencil_member(F, pts[2])));
    return acc;
  };
  Subspace c1 = corner(lines[0]);  // will be x_{n+2}
  Subspace c2 = corner(lines[1]);  // will be x_1
  if (c1.dim() != 1 || c2.dim() != 1)
    fail(ClassifyFail::NormalizationFailure, "pencil line corners are not lines", ctx.trace);
  Vec x_last = c1.basis_vector(0);
  Vec x_first = c2.basis_vector(0);

  auto off_mid_point = [&](const Subspace& line) {
    auto pts = two_points_on(line);
    for (const auto& p : pts) {
      Subspace probe = Subspace::span(fs, 3, {p});
      if (!(probe == mid)) return p;
    }
    return pts[0];
  };
  Vec q1 = off_mid_point(lines[0]);
  Vec q2 = off_mid_point(lines[1]);
  auto other_rad_dir = [&](const Vec& q, const Vec& known) {
    Subspace rad = form_radical(fs, w, n, pencil_member(F, q));
    if (rad.dim() != 2)
      fail(ClassifyFail::NormalizationFailure, "line member has unexpected radical", ctx.trace);
    // reduce the radical basis against the known direction
    Subspace known_s = Subspace::span(fs, w, {known});
    for (size_t i = 0; i < rad.dim(); ++i) {
      Vec v = rad.basis_vector(i);
      if (!known_s.contains(v)) return v;
    }
    fail(ClassifyFail::NormalizationFailure, "radical collapse in the chain route", ctx.trace);
  };
  Vec y1 = other_rad_dir(q1, x_last);   // e_{n+1} direction
  Vec y2 = other_rad_dir(q2, x_first);  // e_2 direction
  auto M = complement_in_w(fs, w, {x_first, y2, y1, x_last});
  if (static_cast<int>(M.size()) != n - 2)
    fail(ClassifyFail::NormalizationFailure, "chain core has wrong dimension", ctx.trace);
  std::map<int, Vec> pos;
  pos[1] = F.lift(x_first);
  pos[2] = F.lift(y2);
  for (size_t i = 0; i < M.size(); ++i) pos[3 + static_cast<int>(i)] = F.lift(M[i]);
  pos[n + 1] = F.lift(y1);
  pos[n + 2] = F.lift(x_last);
  place_spares(a, label, F, pos, ctx.trace);
  Mat P = assemble_and_verify(a, label, pos, ctx.trace);
  return {label, P, ctx.trace};
}

// ---------- r = 4 ----------

ClassificationResult four_form_route(Ctx& ctx) {
  const NLieAlgebra& a = ctx.a;
  ClassTwoForms& F = ctx.F;
  const int n = a.arity, d = a.dim, w = F.w;
  const FieldSpec& fs = a.field;
  if (!(d == n + 5 && w == n + 1 && pencil_all_rank_n(F)))
    fail(ClassifyFail::NormalizationFailure,
         "four-dimensional derived subalgebra outside the contracted-top family", ctx.trace);
  Label label = Label::A(n, d, 7);
  ctx.trace.push_back("four decomposable components contracted from one top form");
  std::vector<Vec> v(4);
  for (int k = 0; k < 4; ++k) {
    Subspace rk = form_radical(fs, w, n, pencil_member(F, unit_covector(fs, 4, k)));
    if (rk.dim() != 1)
      fail(ClassifyFail::NormalizationFailure, "component radical is not a line", ctx.trace);
    v[k] = rk.basis_vector(0);
  }
  if (Subspace::span(fs, w, {v[0], v[1], v[2], v[3]}).dim() != 4)
    fail(ClassifyFail::NormalizationFailure, "component radicals are dependent", ctx.trace);
  auto T = complement_in_w(fs, w, {v[0], v[1], v[2], v[3]});
  std::map<int, Vec> pos;
  // rows miss e_{n+2}, e1, e2, e3
  pos[n + 2] = F.lift(v[0]);
  pos[1] = F.lift(v[1]);
  pos[2] = F.lift(v[2]);
  pos[3] = F.lift(v[3]);
  for (size_t i = 0; i < T.size(); ++i) pos[4 + static_cast<int>(i)] = F.lift(T[i]);
  place_spares(a, label, F, pos, ctx.trace);
  Mat P = assemble_and_verify(a, label, pos, ctx.trace);
  return {label, P, ctx.trace};
}

std::string case_for_quotient(const Label& q) {
  using K = Label::Kind;
  if (q.kind == K::HplusF && q.m == 1 && q.k == 3) return "case 1 (H(n,1)+F(3) quotient)";
  if (q.kind == K::A && q.k == 1) return "case 2 (A(n,n+4,1) quotient)";
  if (q.kind == K::A && q.k == 2) return "case 3 (A(n,n+4,2) quotient)";
  if (q.kind == K::A && q.k == 3) return "case 4 (A(n,n+4,3) quotient)";
  if (q.kind == K::H && q.m == 2) return "case 5 (H(3,2) quotient)";
  return "quotient " + q.to_string();
}

}  // namespace

ClassificationResult classify(const NLieAlgebra& a) {
  std::vector<std::string> trace;
  const int n = a.arity, d = a.dim;
  trace.push_back("input: arity " + std::to_string(n) + ", dimension " + std::to_string(d) +
                  " over " + a.field.to_string());
  if (n < 3) fail(ClassifyFail::UnsupportedArity, "classification requires arity >= 3", trace);
  if (d < n || d > n + 5)
    fail(ClassifyFail::UnsupportedDimension, "classification covers n <= d <= n+5", trace);

  if (a.brackets.empty()) {
    trace.push_back("abelian");
    return {Label::Abelian(n, d), Mat::identity(a.field, d), trace};
  }
  if (!is_class_two(a))
    fail(ClassifyFail::NotClassTwo, "input is neither abelian nor nilpotent of class two", trace);

  Ctx ctx{a, make_forms(a), std::move(trace)};
  ctx.trace.push_back("dim A^2 = " + std::to_string(ctx.F.r) +
                      ", dim Z = " + std::to_string(ctx.F.r + ctx.F.spares));

  if (d == n + 3 && ctx.F.r == 2 && ctx.F.spares != 0)
    fail(ClassifyFail::UnsupportedDimension,
         "(n+3)-dimensional tables beyond the two-generator family are not classified here",
         ctx.trace);

  ClassificationResult res = [&]() -> ClassificationResult {
    try {
      switch (ctx.F.r) {
        case 1: return heisenberg_route(ctx);
        case 2: return two_form_route(ctx);
        case 3: return three_form_route(ctx);
        case 4: return four_form_route(ctx);
        default:
          fail(ClassifyFail::NormalizationFailure,
               "derived subalgebra dimension " + std::to_string(ctx.F.r) + " is out of range",
               ctx.trace);
      }
    } catch (const ClassifyError& e) {
      if (d == n + 3 && e.kind == ClassifyFail::NormalizationFailure)
        fail(ClassifyFail::UnsupportedDimension,
             std::string("(n+3)-dimensional table outside the classified families: ") + e.what(),
             e.trace);
      throw;
    }
  }();

  if (d == n + 5 && ctx.F.r >= 2) {
    // quotient bookkeeping: record the (n+4)-dimensional route the proof takes
    Subspace a2 = ctx.F.A2;
    Vec line_vec = a2.basis_vector(a2.dim() - 1);  // last echelon basis vector
    std::string how = "last echelon basis vector of A^2";
    auto try_quotient = [&](const Vec& v) -> std::optional<Label> {
      Subspace line = Subspace::span(a.field, d, {v});
      try {
        QuotientResult qr = quotient_central(a, line);
        return classify(qr.quotient).label;
      } catch (const NLieError&) {
        return std::nullopt;
      }
    };
    std::optional<Label> qlabel = try_quotient(line_vec);
    if (!qlabel) {
      // the default line can give a quotient outside the classified list;
      // fall back to the normalized last central target, which always works
      line_vec = res.witness.col(d - 1);
      how = "normalized last central target (default line gave an unlisted quotient)";
      qlabel = try_quotient(line_vec);
    }
    if (qlabel) {
      res.trace.push_back("central line (" + how + "): " + vec_str(line_vec));
      res.trace.push_back("quotient classifies as " + qlabel->to_string() + "; " +
                          case_for_quotient(*qlabel));
    } else {
      res.trace.push_back("central line quotient bookkeeping unavailable");
    }
  }
  return res;
}

Label classify_quotient_n4(const NLieAlgebra& a) {
  if (a.arity < 3) throw ClassifyError(ClassifyFail::UnsupportedArity, "requires arity >= 3");
  if (a.dim != a.arity + 4)
    throw ClassifyError(ClassifyFail::UnsupportedDimension, "requires dimension n + 4");
  return classify(a).label;
}

}  // namespace nlie
