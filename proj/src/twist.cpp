#include "qcenter/twist.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qcenter {

namespace {

using Sparse3 = std::map<std::array<size_t, 3>, CycloScalar>;

void add(Sparse3& x, std::array<size_t, 3> key, const CycloScalar& v) {
  auto& slot = x[key];
  slot += v;
}

void prune(Sparse3& x) {
  for (auto it = x.begin(); it != x.end();) it = it->second.is_zero() ? x.erase(it) : std::next(it);
}

// Left multiplication by a two-leg element t placed on legs (a, b) of a three-leg element.
Sparse3 multiply_legs(const Side& s, const Mat& t, const Sparse3& x, size_t a, size_t b) {
  const auto& prod = s.alg.constants();
  size_t m = s.dim();
  Sparse3 out;
  for (const auto& [key, v] : x)
    for (size_t p = 0; p < m; ++p)
      for (size_t q = 0; q < m; ++q) {
        if (t(p, q).is_zero()) continue;
        CycloScalar f = t(p, q) * v;
        const Vec& u = prod[p][key[a]];
        const Vec& w = prod[q][key[b]];
        for (size_t e = 0; e < m; ++e) {
          if (u[e].is_zero()) continue;
          for (size_t g = 0; g < m; ++g) {
            if (w[g].is_zero()) continue;
            auto k = key;
            k[a] = e;
            k[b] = g;
            add(out, k, f * u[e] * w[g]);
          }
        }
      }
  prune(out);
  return out;
}

}  // namespace

bool cocycle_identity(const Side& s, const Mat& t) {
  size_t m = s.dim();
  Sparse3 id_delta, delta_id;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      if (t(i, j).is_zero()) continue;
      for (size_t k = 0; k < m; ++k)
        for (size_t l = 0; l < m; ++l) {
          if (!s.coprod[j](k, l).is_zero()) add(id_delta, {i, k, l}, t(i, j) * s.coprod[j](k, l));
          if (!s.coprod[i](k, l).is_zero()) add(delta_id, {k, l, j}, t(i, j) * s.coprod[i](k, l));
        }
    }
  prune(id_delta);
  prune(delta_id);
  return multiply_legs(s, t, id_delta, 1, 2) == multiply_legs(s, t, delta_id, 0, 1);
}

bool validate_cocycle(const QGRealization& r, const Cocycle& c) {
  size_t n = r.d * r.d;
  if (c.omega.rows() != n || c.omega.cols() != n) throw std::invalid_argument("cocycle has the wrong shape");
  Mat id = Mat::identity(n);
  if (c.omega * c.omega.adjoint() != id || c.omega.adjoint() * c.omega != id) return false;
  auto t = tensor_coords(c.omega, r.dual_side.alg, r.dual_side.alg);
  if (!t) return false;
  return cocycle_identity(r.dual_side, *t);
}

Side twisted_side(const Side& s, const Mat& omega) {
  Side out;
  out.alg = s.alg;
  out.antipode = Mat();
  Mat os = omega.adjoint();
  for (size_t k = 0; k < s.dim(); ++k) {
    Mat x = omega * tensor_element(s.coprod[k], s.alg, s.alg) * os;
    auto t = tensor_coords(x, s.alg, s.alg);
    if (!t) throw std::runtime_error("twisted coproduct leaves the algebraic tensor square");
    out.coprod.push_back(std::move(*t));
  }
  return out;
}

TwistResult twist(const QGRealization& r, const Cocycle& c) {
  if (!validate_cocycle(r, c)) throw std::invalid_argument("twist: " + c.name + " is not a unitary 2-cocycle");
  TwistResult out;
  out.gamma_side = twisted_side(r.dual_side, c.omega);
  const auto& alg = r.dual_side.alg;
  size_t m = alg.dim();
  HopfData& t = out.twisted_dual;
  t.name = r.hopf->name + " dual twisted by " + c.name;
  t.dim = m;
  t.mult = alg.constants();
  t.unit = alg.unit();
  t.comult = out.gamma_side.coprod;
  t.star = alg.star_matrix();
  t.haar = Vec(m);
  auto counit = solve_counit(t);
  if (!counit) throw std::runtime_error("twisted coproduct has no counit");
  t.counit = *counit;
  auto antipode = solve_antipode(t);
  if (!antipode) throw std::runtime_error("twisted coproduct has no antipode");
  t.antipode = *antipode;
  auto haar = solve_haar(t);
  if (!haar) throw std::runtime_error("twisted coproduct has no unique Haar state");
  t.haar = *haar;
  auto rep = validate_hopf(t);
  if (!rep.ok()) throw std::runtime_error("twisted Hopf data fails '" + rep.first_failure() + "'");
  out.gamma_side.antipode = t.antipode;

  HopfData g = dual_hopf_data(t);
  g.name = r.hopf->name + " twisted by " + c.name;
  out.twisted = realize(std::move(g));

  // W' = sum_i x_i (x) pi'(f_i) with f_i dual to the twisted_dual basis; c_i -> x_i.
  const QGRealization& tw = out.twisted;
  auto w = tensor_coords(tw.W, tw.dual_side.alg, tw.a_side.alg);
  if (!w) throw std::logic_error("W of the twisted realization does not split");
  size_t md = tw.dual_side.dim(), ma = tw.a_side.dim();
  out.identification = Mat(md, m);
  for (size_t i = 0; i < m; ++i)
    for (size_t p = 0; p < md; ++p)
      for (size_t q = 0; q < ma; ++q)
        if (!(*w)(p, q).is_zero() && !tw.a_to_hopf(i, q).is_zero())
          out.identification(p, i) += (*w)(p, q) * tw.a_to_hopf(i, q);
  const Mat& phi = out.identification;
  for (size_t i = 0; i < m; ++i) {
    Vec xi(md);
    for (size_t p = 0; p < md; ++p) xi[p] = phi(p, i);
    for (size_t j = 0; j < m; ++j) {
      Vec xj(md), prod(md);
      for (size_t p = 0; p < md; ++p) {
        xj[p] = phi(p, j);
        for (size_t k = 0; k < m; ++k)
          if (!t.mult[i][j][k].is_zero()) prod[p] += phi(p, k) * t.mult[i][j][k];
      }
      if (tw.dual_side.alg.mul(xi, xj) != prod)
        throw std::logic_error("twisted dual algebra is not identified multiplicatively");
    }
    if (phi * t.comult[i] * phi.transpose() != tw.dual_side.coproduct(xi))
      throw std::logic_error("twisted dual coproduct is not identified with Gamma");
  }
  return out;
}

bool TwistReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

TwistReport verify_center_invariance(const QGRealization& r, const Cocycle& c) {
  TwistResult tr = twist(r, c);
  const Side& s = r.dual_side;
  size_t m = s.dim();
  TwistReport rep;
  rep.name = c.name;
  rep.lhat_before = side_coords(r, AlgebraSide::in_dual, compute_Lhat(r));
  Subspace full = Subspace::full(m), z = s.alg.center();
  Subspace gamma_lhat = coproduct_preimage(tr.gamma_side, full, full, z);
  // Lhat of the twisted realization, pulled back to the dual basis of r.
  Subspace lt = side_coords(tr.twisted, AlgebraSide::in_dual, compute_Lhat(tr.twisted));
  Mat inv = *inverse(tr.identification);
  rep.lhat_after = Subspace(m);
  for (const auto& y : lt.basis()) {
    Vec x(m);
    for (size_t i = 0; i < m; ++i)
      for (size_t p = 0; p < y.size(); ++p)
        if (!inv(i, p).is_zero()) x[i] += inv(i, p) * y[p];
    rep.lhat_after.insert(std::move(x));
  }
  auto add = [&](std::string name, bool ok) { rep.checks.push_back({std::move(name), ok}); };
  add("Lhat of the twisted realization = Lhat", rep.lhat_after == rep.lhat_before);
  add("Lhat for Gamma on the common algebra = Lhat", gamma_lhat == rep.lhat_before);
  bool restricted = true;
  for (const auto& y : rep.lhat_before.basis()) restricted = restricted && s.coproduct(y) == tr.gamma_side.coproduct(y);
  add("Delta_hat = Gamma on Lhat", restricted);
  auto back_t = tensor_coords(c.omega.adjoint(), s.alg, s.alg);
  bool back = back_t && cocycle_identity(tr.gamma_side, *back_t);
  if (back) {
    Side undone = twisted_side(tr.gamma_side, c.omega.adjoint());
    back = undone.coprod == s.coprod;
  }
  add("twisting back by Omega^* restores Delta_hat", back);
  return rep;
}

Cocycle bicharacter_cocycle(const QGRealization& r, const GroupTable& g, const std::vector<size_t>& gens,
                            const std::vector<size_t>& orders, const Bicharacter& omega, std::string name) {
  size_t d = r.d;
  if (d != g.order() || r.gns != Mat::identity(d)) throw std::invalid_argument("expected the realization of F(G)");
  // The dual is the right regular representation: rho_t = (id (x) omega_tt)(W).
  auto rho = [&](size_t t) { return right_slice(r.W, d, d, t, t); };
  size_t n = 1;
  for (size_t o : orders) n *= o;
  auto digits = [&](size_t idx) {
    std::vector<size_t> a(orders.size());
    for (size_t i = orders.size(); i-- > 0;) {
      a[i] = idx % orders[i];
      idx /= orders[i];
    }
    return a;
  };
  std::vector<Mat> proj;
  for (size_t ai = 0; ai < n; ++ai) {
    auto a = digits(ai);
    Mat p(d, d);
    for (size_t bi = 0; bi < n; ++bi) {
      auto b = digits(bi);
      size_t elem = g.identity();
      CycloScalar chi(1);
      for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t e = 0; e < b[i]; ++e) elem = g.mult[elem][gens[i]];
        chi *= CycloScalar::zeta(orders[i], int64_t(a[i] * b[i]));
      }
      p.add_scaled(chi.conj(), rho(elem));
    }
    p *= CycloScalar(Rational(1, int64_t(n)));
    proj.push_back(std::move(p));
  }
  Cocycle c;
  c.name = std::move(name);
  c.omega = Mat(d * d, d * d);
  for (size_t ai = 0; ai < n; ++ai)
    for (size_t bi = 0; bi < n; ++bi) c.omega.add_scaled(omega(digits(ai), digits(bi)), kron(proj[ai], proj[bi]));
  return c;
}

namespace {

size_t element_by_label(const GroupTable& g, const std::string& label) {
  auto it = std::find(g.labels.begin(), g.labels.end(), label);
  if (it == g.labels.end()) throw std::logic_error("group element " + label + " not found");
  return size_t(it - g.labels.begin());
}

}  // namespace

Cocycle klein_cocycle_d4(const QGRealization& r) {
  GroupTable g = dihedral_group4();
  // r^2 and the reflection fixing vertices 0 and 2.
  std::vector<size_t> gens{element_by_label(g, "2301"), element_by_label(g, "0321")};
  auto omega = [](const std::vector<size_t>& a, const std::vector<size_t>& b) {
    return CycloScalar((a[0] * b[1]) % 2 ? -1 : 1);
  };
  return bicharacter_cocycle(r, g, gens, {2, 2}, omega, "klein-bicharacter");
}

Cocycle cyclic_cocycle_q8(const QGRealization& r) {
  GroupTable g = quaternion_group();
  // zeta_4^{ab} times the coboundary of f = (1, i, 1, 1); the bicharacter alone commutes
  // with every Delta_hat(lambda_g) and would leave the coproduct unchanged.
  auto f = [](size_t a) { return a % 4 == 1 ? CycloScalar::zeta(4) : CycloScalar(1); };
  auto omega = [f](const std::vector<size_t>& a, const std::vector<size_t>& b) {
    return CycloScalar::zeta(4, int64_t(a[0] * b[0])) * f(a[0]) * f(b[0]) * f((a[0] + b[0]) % 4).conj();
  };
  return bicharacter_cocycle(r, g, {element_by_label(g, "i")}, {4}, omega, "cyclic-cocycle");
}

}  // namespace qcenter
