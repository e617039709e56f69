#include "qcenter/normality.hpp"

#include <stdexcept>

namespace qcenter {

namespace {

Subspace antipode_image(const Mat& s, const Subspace& n) {
  Subspace out(n.ambient());
  for (const auto& y : n.basis()) {
    Vec v(n.ambient());
    for (size_t k = 0; k < n.ambient(); ++k) {
      if (y[k].is_zero()) continue;
      for (size_t i = 0; i < n.ambient(); ++i)
        if (!s(i, k).is_zero()) v[i] += s(i, k) * y[k];
    }
    out.insert(std::move(v));
  }
  return out;
}

Mat w_hat(const QGRealization& r) {
  // W of the dual quantum group: sigma(W)^*.
  return swap_legs(r.W, r.d, r.d).adjoint();
}

}  // namespace

CoidealFlags classify_coideal(const QGRealization& r, const OperatorSubspace& n, AlgebraSide side) {
  const Side& s = side_of(r, side);
  Subspace c = side_coords(r, side, n), full = Subspace::full(s.dim());
  CoidealFlags f;
  f.left_coideal = coproduct_preimage(s, c, full, c) == c;
  f.right_coideal = coproduct_preimage(s, c, c, full) == c;
  bool star_algebra = c.contains(s.alg.unit()) && s.alg.is_subalgebra(c) && s.alg.is_star_closed(c);
  f.invariant_subalgebra = star_algebra && coproduct_preimage(s, c, c, c) == c;
  f.baaj_vaes = f.invariant_subalgebra && antipode_image(s.antipode, c) == c;
  return f;
}

bool in_tensor(const Mat& x, size_t d, const OperatorSubspace& p, const OperatorSubspace& q) {
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      if (!q.contains(left_slice(x, d, d, i, j))) return false;
      if (!p.contains(right_slice(x, d, d, i, j))) return false;
    }
  return true;
}

bool is_normal_coideal(const QGRealization& r, const OperatorSubspace& l, AlgebraSide side) {
  size_t d = r.d;
  Mat id = Mat::identity(d);
  // V is the multiplicative unitary of the quantum group whose algebra contains L,
  // V_hat the one of its dual.
  Mat v = side == AlgebraSide::in_A ? r.W : w_hat(r);
  Mat v_hat = side == AlgebraSide::in_A ? w_hat(r) : r.W;
  const OperatorSubspace& other = side == AlgebraSide::in_A ? r.dual_space() : r.a_space();
  bool first = true, second = true;
  for (const auto& y : l.elements()) {
    if (first) first = in_tensor(v_hat.adjoint() * kron(y, id) * v_hat, d, l, other);
    if (second) second = in_tensor(v * kron(id, y) * v.adjoint(), d, other, l);
  }
  if (first != second) throw std::logic_error("the two normal-coideal conditions disagree");
  return first;
}

Mat inner_action(const QGRealization& r, const Mat& x, ActionSide side) {
  if (!r.dual_space().contains(x)) throw std::invalid_argument("inner_action: argument is not in the dual algebra");
  size_t d = r.d;
  Mat id = Mat::identity(d);
  OperatorSubspace inn = compute_inn(r);
  if (side == ActionSide::right) {
    Mat y = r.W * kron(x, id) * r.W.adjoint();
    if (!in_tensor(y, d, r.dual_space(), inn)) throw std::logic_error("alpha_R(x) is not in dual (x) inn");
    return y;
  }
  Mat y = swap_legs(r.W.adjoint() * kron(x, id) * r.W, d, d);
  if (!in_tensor(y, d, inn, r.dual_space())) throw std::logic_error("alpha_L(x) is not in inn (x) dual");
  return y;
}

bool ActionReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

ActionReport verify_action_axioms(const QGRealization& r) {
  size_t d = r.d, m = r.dual_side.dim(), n = r.a_side.dim();
  const auto& dual = r.dual_side.alg;
  const auto& a = r.a_side.alg;
  Mat id = Mat::identity(d);
  std::vector<Mat> t;
  for (const auto& c : dual.operators()) {
    auto tc = tensor_coords(inner_action(r, c, ActionSide::right), dual, a);
    if (!tc) throw std::logic_error("alpha_R leaves dual (x) pi(A)");
    t.push_back(std::move(*tc));
  }
  bool coaction = true;
  for (size_t k = 0; k < m && coaction; ++k) {
    // (id (x) Delta)alpha_R against (alpha_R (x) id)alpha_R, coefficients of c_p (x) b_q (x) b_j.
    std::vector<CycloScalar> lhs(m * n * n), rhs(m * n * n);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) {
        const CycloScalar& c = t[k](i, j);
        if (c.is_zero()) continue;
        const Mat& cp = r.a_side.coprod[j];
        for (size_t p = 0; p < n; ++p)
          for (size_t q = 0; q < n; ++q)
            if (!cp(p, q).is_zero()) lhs[(i * n + p) * n + q] += c * cp(p, q);
        for (size_t p = 0; p < m; ++p)
          for (size_t q = 0; q < n; ++q)
            if (!t[i](p, q).is_zero()) rhs[(p * n + q) * n + j] += c * t[i](p, q);
      }
    coaction = lhs == rhs;
  }
  ActionReport rep;
  rep.checks.push_back({"(id (x) Delta) alpha_R = (alpha_R (x) id) alpha_R", coaction});

  bool relation = true;
  for (size_t k = 0; k < m && relation; ++k) {
    Vec rc(m);
    for (size_t i = 0; i < m; ++i) rc[i] = r.dual_side.antipode(i, k);
    auto tr = tensor_coords(inner_action(r, dual.element(rc), ActionSide::right), dual, a);
    if (!tr) throw std::logic_error("alpha_R leaves dual (x) pi(A)");
    Mat rhs(d * d, d * d);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) {
        if ((*tr)(i, j).is_zero()) continue;
        Vec ri(m), rj(n);
        for (size_t p = 0; p < m; ++p) ri[p] = r.dual_side.antipode(p, i);
        for (size_t p = 0; p < n; ++p) rj[p] = r.a_side.antipode(p, j);
        rhs.add_scaled((*tr)(i, j), kron(a.element(rj), dual.element(ri)));
      }
    relation = inner_action(r, dual.operators()[k], ActionSide::left) == rhs;
  }
  rep.checks.push_back({"alpha_L = sigma (R_hat (x) R) alpha_R R_hat", relation});
  return rep;
}

bool is_normal_subgroup(const QGRealization& g, const QGRealization& h, const HopfMorphism& f) {
  DualInclusion inc = dual_inclusion(g, h, f);
  OperatorSubspace l = side_operators(g, AlgebraSide::in_dual, inc.range);
  bool coideal = is_normal_coideal(g, l, AlgebraSide::in_dual);
  OperatorSubspace inn = compute_inn(g);
  bool invariant = true;
  for (const auto& x : l.elements()) {
    if (!in_tensor(inner_action(g, x, ActionSide::left), g.d, inn, l)) {
      invariant = false;
      break;
    }
  }
  if (coideal != invariant) throw std::logic_error("normal-coideal test and alpha_L-invariance disagree");
  return coideal;
}

bool wang_normal(const QGRealization& k, const HopfData& l, const HopfMorphism& f) {
  size_t dl = l.dim;
  for (const auto& u : irreducible_coreps(k)) {
    std::vector<std::vector<Vec>> v(u.n, std::vector<Vec>(u.n));
    for (size_t a = 0; a < u.n; ++a)
      for (size_t b = 0; b < u.n; ++b) {
        auto hc = k.hopf_coords(u.u[a][b]);
        if (!hc) throw std::logic_error("corepresentation coefficient outside pi(A)");
        Vec img(dl);
        for (size_t p = 0; p < dl; ++p)
          for (size_t i = 0; i < hc->size(); ++i)
            if (!f.matrix(p, i).is_zero()) img[p] += f.matrix(p, i) * (*hc)[i];
        v[a][b] = std::move(img);
      }
    std::vector<Vec> rows;
    for (size_t a = 0; a < u.n; ++a)
      for (size_t p = 0; p < dl; ++p) {
        Vec row(u.n);
        for (size_t b = 0; b < u.n; ++b) row[b] = v[a][b][p];
        row[a] -= l.unit[p];
        rows.push_back(std::move(row));
      }
    size_t fixed = kernel(rows, u.n).dim();
    if (fixed != 0 && fixed != u.n) return false;
  }
  return true;
}

PolQuotients pol_quotients(const HopfData& k, const HopfData& l, const HopfMorphism& f) {
  size_t dk = k.dim, dl = l.dim;
  Mat rt = f.matrix.transpose();
  std::vector<Mat> left, right;
  for (size_t i = 0; i < dk; ++i) {
    left.push_back(k.comult[i] * rt);               // dk x dl
    right.push_back(f.matrix * k.comult[i]);        // dl x dk
  }
  std::vector<Vec> lrows, rrows;
  for (size_t p = 0; p < dk; ++p)
    for (size_t q = 0; q < dl; ++q) {
      Vec lr(dk), rr(dk);
      for (size_t i = 0; i < dk; ++i) {
        lr[i] = left[i](p, q);
        rr[i] = right[i](q, p);
      }
      lr[p] -= l.unit[q];
      rr[p] -= l.unit[q];
      lrows.push_back(std::move(lr));
      rrows.push_back(std::move(rr));
    }
  PolQuotients out;
  out.left_cosets = kernel(lrows, dk);
  out.right_cosets = kernel(rrows, dk);
  out.equal = out.left_cosets == out.right_cosets;
  Subspace sl = antipode_image(k.antipode, out.left_cosets), sr = antipode_image(k.antipode, out.right_cosets);
  out.left_stable = sl == out.left_cosets;
  out.right_stable = sr == out.right_cosets;
  out.swapped_by_antipode = sl == out.right_cosets;
  return out;
}

}  // namespace qcenter
