#include "qcenter/center.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qcenter {

const Side& side_of(const QGRealization& r, AlgebraSide s) { return s == AlgebraSide::in_A ? r.a_side : r.dual_side; }

AlgebraSide opposite(AlgebraSide s) { return s == AlgebraSide::in_A ? AlgebraSide::in_dual : AlgebraSide::in_A; }

std::string to_string(AlgebraSide s) { return s == AlgebraSide::in_A ? "in_A" : "in_dual"; }

Subspace side_coords(const QGRealization& r, AlgebraSide s, const OperatorSubspace& n) {
  const auto& alg = side_of(r, s).alg;
  Subspace out(alg.dim());
  for (const auto& x : n.elements()) {
    auto c = alg.coords(x);
    if (!c) throw std::invalid_argument("subspace is not contained in the " + to_string(s) + " algebra");
    out.insert(*c);
  }
  return out;
}

OperatorSubspace side_operators(const QGRealization& r, AlgebraSide s, const Subspace& n) {
  return side_of(r, s).alg.to_operators(n);
}

Subspace coproduct_preimage(const Side& s, const Subspace& domain, const Subspace& left, const Subspace& right) {
  size_t m = s.dim(), n = domain.dim();
  std::vector<Mat> t;
  for (const auto& y : domain.basis()) t.push_back(s.coproduct(y));
  std::vector<Vec> rows;
  Subspace ra = right.annihilator(), la = left.annihilator();
  for (const auto& a : ra.basis())
    for (size_t i = 0; i < m; ++i) {
      Vec row(n);
      for (size_t b = 0; b < n; ++b)
        for (size_t j = 0; j < m; ++j)
          if (!a[j].is_zero() && !t[b](i, j).is_zero()) row[b] += a[j] * t[b](i, j);
      rows.push_back(std::move(row));
    }
  for (const auto& a : la.basis())
    for (size_t j = 0; j < m; ++j) {
      Vec row(n);
      for (size_t b = 0; b < n; ++b)
        for (size_t i = 0; i < m; ++i)
          if (!a[i].is_zero() && !t[b](i, j).is_zero()) row[b] += a[i] * t[b](i, j);
      rows.push_back(std::move(row));
    }
  Subspace k = kernel(rows, n);
  Subspace out(m);
  for (const auto& c : k.basis()) out.insert(domain.combine(c));
  return out;
}

bool is_left_coideal(const Side& s, const Subspace& n) {
  return coproduct_preimage(s, n, Subspace::full(s.dim()), n) == n;
}

Subspace slice_span(const Side& s, const Subspace& x) {
  size_t m = s.dim();
  Subspace out(m);
  for (const auto& y : x.basis()) {
    Mat t = s.coproduct(y);
    for (size_t i = 0; i < m; ++i) {
      Vec row(m);
      for (size_t j = 0; j < m; ++j) row[j] = t(i, j);
      out.insert(std::move(row));
    }
  }
  return out;
}

OperatorSubspace compute_hatZ(const QGRealization& r) {
  return side_operators(r, AlgebraSide::in_dual, r.dual_side.alg.center());
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("center computation: " + what);
}

}  // namespace

OperatorSubspace compute_Lhat(const QGRealization& r) {
  const Side& s = r.dual_side;
  Subspace full = Subspace::full(s.dim()), z = s.alg.center();
  Subspace l = coproduct_preimage(s, full, full, z);
  require(l.contains(s.alg.unit()), "Lhat is not unital");
  require(s.alg.is_subalgebra(l) && s.alg.is_star_closed(l), "Lhat is not a *-subalgebra");
  require(coproduct_preimage(s, l, l, l) == l, "Lhat is not an invariant subalgebra");
  for (const auto& y : l.basis()) {
    Vec ry(s.dim());
    for (size_t k = 0; k < s.dim(); ++k)
      for (size_t i = 0; i < s.dim(); ++i)
        if (!y[k].is_zero()) ry[i] += s.antipode(i, k) * y[k];
    require(l.contains(ry), "Lhat is not stable under the antipode");
  }
  require(z.contains(l), "Lhat is not central");
  return side_operators(r, AlgebraSide::in_dual, l);
}

OperatorSubspace compute_Lhat_oracle(const QGRealization& r) {
  const Side& s = r.dual_side;
  Subspace full = Subspace::full(s.dim());
  Subspace n = s.alg.center();
  while (true) {
    Subspace next = coproduct_preimage(s, n, full, n);
    if (next == n) break;
    n = std::move(next);
  }
  return side_operators(r, AlgebraSide::in_dual, n);
}

OperatorSubspace compute_Lhat_zz(const QGRealization& r) {
  const Side& s = r.dual_side;
  Subspace z = s.alg.center();
  return side_operators(r, AlgebraSide::in_dual, coproduct_preimage(s, Subspace::full(s.dim()), z, z));
}

namespace {

OperatorSubspace inn_from_conjugation(const QGRealization& r, bool adjoint_first) {
  size_t d = r.d;
  Mat id = Mat::identity(d);
  Mat w = r.W, ws = r.W.adjoint();
  if (adjoint_first) std::swap(w, ws);
  std::vector<Mat> slices;
  for (const auto& x : r.dual_side.alg.operators()) {
    Mat y = w * kron(x, id) * ws;
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) slices.push_back(left_slice(y, d, d, i, j));
  }
  auto out = generate_algebra(d, slices);
  require(r.a_space().contains(out), "inner slices leave pi(A)");
  return out;
}

}  // namespace

OperatorSubspace compute_inn(const QGRealization& r) { return inn_from_conjugation(r, false); }

OperatorSubspace compute_inn_alt(const QGRealization& r) { return inn_from_conjugation(r, true); }

OperatorSubspace compute_inn_from_coreps(const QGRealization& r) {
  std::vector<Mat> gens;
  for (const auto& u : irreducible_coreps(r))
    for (size_t k = 0; k < u.n; ++k)
      for (size_t i = 0; i < u.n; ++i)
        for (size_t l = 0; l < u.n; ++l)
          for (size_t j = 0; j < u.n; ++j) gens.push_back(u.u[k][i] * u.u[l][j].adjoint());
  return generate_algebra(r.d, gens);
}

OperatorSubspace codual(const QGRealization& r, const OperatorSubspace& n, AlgebraSide side) {
  Subspace c = side_coords(r, side, n);
  if (!is_left_coideal(side_of(r, side), c))
    throw std::invalid_argument("codual: subspace is not a left coideal of the " + to_string(side) + " algebra");
  const auto& other = side == AlgebraSide::in_A ? r.dual_space() : r.a_space();
  return relative_commutant(n, other);
}

std::vector<std::pair<AlgebraSide, OperatorSubspace>> random_left_coideals(const QGRealization& r, size_t count,
                                                                           uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<AlgebraSide, OperatorSubspace>> out, repeats;
  // Distinct coideals first; repeats only fill up when the fixture has fewer than count.
  for (size_t attempt = 0; attempt < 8 * count && out.size() < count; ++attempt) {
    AlgebraSide side = rng() % 2 ? AlgebraSide::in_dual : AlgebraSide::in_A;
    const Side& s = side_of(r, side);
    size_t m = s.dim();
    Vec x(m);
    if (rng() % 2) {
      size_t terms = 1 + rng() % 2;
      for (size_t t = 0; t < terms; ++t) {
        int64_t v = int64_t(rng() % 5) - 2;
        x[rng() % m] += CycloScalar(v == 0 ? 1 : v);
      }
    } else {
      // Indicator-like sums hit the coideals of intermediate size far more often.
      for (size_t k = 0; k < m; ++k)
        if (k == 0 || rng() % 2) x[k] = CycloScalar(1);
    }
    Subspace gens = slice_span(s, Subspace::span(m, {x}));
    Subspace n = s.alg.generate(gens.basis());
    require(is_left_coideal(s, n), "generated random subalgebra is not a left coideal");
    std::pair<AlgebraSide, OperatorSubspace> c{side, side_operators(r, side, n)};
    bool seen = std::find(out.begin(), out.end(), c) != out.end();
    (seen ? repeats : out).push_back(std::move(c));
  }
  for (size_t i = 0; out.size() < count && i < repeats.size(); ++i) out.push_back(repeats[i]);
  return out;
}

bool CenterReport::ok() const {
  for (const auto& c : cross_checks)
    if (!c.ok) return false;
  return true;
}

CenterReport compute_center_report(const QGRealization& r) {
  CenterReport rep;
  rep.name = r.hopf->name;
  rep.hatZ = compute_hatZ(r);
  rep.Lhat = compute_Lhat(r);
  rep.inn = compute_inn(r);
  rep.dim_A = r.d;
  rep.dim_Lhat = rep.Lhat.dim();
  rep.dim_inn = rep.inn.dim();
  rep.dims_multiply = rep.dim_A == rep.dim_Lhat * rep.dim_inn;
  auto add = [&](std::string name, bool ok) { rep.cross_checks.push_back({std::move(name), ok}); };
  add("Lhat inside hatZ", rep.hatZ.contains(rep.Lhat));
  add("Lhat = largest left coideal inside hatZ", rep.Lhat == compute_Lhat_oracle(r));
  add("Lhat = {y : Delta_hat(y) in hatZ (x) hatZ}", rep.Lhat == compute_Lhat_zz(r));
  add("inn = inn via W^* (x (x) 1) W", rep.inn == compute_inn_alt(r));
  add("inn = inn via corepresentation coefficients", rep.inn == compute_inn_from_coreps(r));
  add("inn is a left coideal", is_left_coideal(r.a_side, side_coords(r, AlgebraSide::in_A, rep.inn)));
  add("codual(inn) = Lhat", codual(r, rep.inn, AlgebraSide::in_A) == rep.Lhat);
  add("codual(Lhat) = inn", codual(r, rep.Lhat, AlgebraSide::in_dual) == rep.inn);
  return rep;
}

bool is_central_morphism(const QGRealization& source, const QGRealization& target, const HopfMorphism& f) {
  const HopfData& h = *source.hopf;
  Mat rt = f.matrix.transpose();
  bool by_definition = true;
  for (size_t i = 0; i < h.dim && by_definition; ++i)
    by_definition = h.comult[i] * rt == h.comult[i].transpose() * rt;
  DualInclusion inc = dual_inclusion(source, target, f);
  bool by_range = source.dual_side.alg.center().contains(inc.range);
  if (by_definition != by_range)
    throw std::logic_error("centrality by definition and by the range of gamma disagree");
  return by_definition;
}

std::optional<HopfMorphism> subgroup_factor(const QGRealization& g, const QGRealization& h1, const HopfMorphism& f1,
                                            const QGRealization& h2, const HopfMorphism& f2) {
  DualInclusion v = dual_inclusion(g, h1, f1), u = dual_inclusion(g, h2, f2);
  if (!v.range.contains(u.range)) return std::nullopt;
  size_t m1 = h1.dual_side.dim(), m2 = h2.dual_side.dim();
  // lambda = gamma_1^{-1} gamma_2.
  std::vector<Vec> rows;
  for (size_t i = 0; i < v.gamma.rows(); ++i) {
    Vec row(m1);
    for (size_t j = 0; j < m1; ++j) row[j] = v.gamma(i, j);
    rows.push_back(std::move(row));
  }
  Mat lambda(m1, m2);
  for (size_t k = 0; k < m2; ++k) {
    Vec rhs(v.gamma.rows());
    for (size_t i = 0; i < rhs.size(); ++i) rhs[i] = u.gamma(i, k);
    auto x = solve(rows, rhs, m1);
    if (!x) throw std::logic_error("range containment without a preimage under gamma_1");
    for (size_t j = 0; j < m1; ++j) lambda(j, k) = (*x)[j];
  }
  // theta with rho_2 = theta rho_1, row by row.
  size_t d1 = h1.d, d2 = h2.d, dg = g.d;
  std::vector<Vec> trows;
  for (size_t c = 0; c < dg; ++c) {
    Vec row(d1);
    for (size_t j = 0; j < d1; ++j) row[j] = f1.matrix(j, c);
    trows.push_back(std::move(row));
  }
  HopfMorphism theta{"factor", Mat(d2, d1)};
  for (size_t i = 0; i < d2; ++i) {
    Vec rhs(dg);
    for (size_t c = 0; c < dg; ++c) rhs[c] = f2.matrix(i, c);
    auto x = solve(trows, rhs, d1);
    if (!x) throw std::runtime_error("ranges are nested but rho_2 does not factor through rho_1");
    for (size_t j = 0; j < d1; ++j) theta.matrix(i, j) = (*x)[j];
  }
  DualInclusion t = dual_inclusion(h1, h2, theta);
  if (t.gamma != lambda) throw std::runtime_error("dual inclusion of theta differs from gamma_1^{-1} gamma_2");
  std::array<size_t, 3> dims{dg, d1, d2};
  SparseOp t23 = place(t.bicharacter, dims, 1, 2), v12 = place(v.bicharacter, dims, 0, 1),
           u13 = place(u.bicharacter, dims, 0, 2);
  if (!(t23 * v12 == v12 * u13 * t23)) throw std::runtime_error("T23 V12 = V12 U13 T23 fails");
  return theta;
}

}  // namespace qcenter
