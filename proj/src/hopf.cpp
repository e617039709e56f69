#include "qcenter/hopf.hpp"

#include <stdexcept>

namespace qcenter {

namespace {

Vec unit_vec(size_t n, size_t i) {
  Vec v(n);
  v[i] = CycloScalar(1);
  return v;
}

Vec col(const Mat& m, size_t j) {
  Vec v(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

Vec matvec(const Mat& m, const Vec& x) {
  Vec r(m.rows());
  for (size_t j = 0; j < m.cols(); ++j) {
    if (x[j].is_zero()) continue;
    for (size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) r[i].add_product(m(i, j), x[j]);
  }
  return r;
}

Mat outer(const Vec& a, const Vec& b) {
  Mat m(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) m(i, j) = a[i] * b[j];
  }
  return m;
}

Vec conj_vec(Vec v) {
  for (auto& x : v) x = x.conj();
  return v;
}

void add_check(ValidationReport& r, std::string name, bool ok, std::string detail = "") {
  r.checks.push_back({std::move(name), ok, ok ? "" : std::move(detail)});
}

}  // namespace

// ---------------------------------------------------------------- HopfData

Vec HopfData::mul(const Vec& a, const Vec& b) const {
  Vec r(dim);
  for (size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      CycloScalar ab = a[i] * b[j];
      const Vec& p = mult[i][j];
      for (size_t k = 0; k < dim; ++k)
        if (!p[k].is_zero()) r[k].add_product(ab, p[k]);
    }
  }
  return r;
}

Vec HopfData::adjoint(const Vec& a) const { return matvec(star, conj_vec(a)); }

Mat HopfData::coproduct(const Vec& a) const {
  Mat m(dim, dim);
  for (size_t i = 0; i < dim; ++i)
    if (!a[i].is_zero()) m.add_scaled(a[i], comult[i]);
  return m;
}

Vec HopfData::apply_antipode(const Vec& a) const { return matvec(antipode, a); }
CycloScalar HopfData::eval_counit(const Vec& a) const { return dot(counit, a); }
CycloScalar HopfData::eval_haar(const Vec& a) const { return dot(haar, a); }
Vec HopfData::basis_vector(size_t i) const { return unit_vec(dim, i); }

AlgebraTable HopfData::algebra() const { return AlgebraTable::from_constants(mult, unit, star); }

bool HopfData::is_commutative() const {
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = i + 1; j < dim; ++j)
      if (mult[i][j] != mult[j][i]) return false;
  return true;
}

bool HopfData::is_cocommutative() const {
  for (const auto& c : comult)
    if (c != c.transpose()) return false;
  return true;
}

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::string ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return c.name;
  return "";
}

// ---------------------------------------------------------------- validation

namespace {

void check_shapes(const HopfData& h) {
  size_t d = h.dim;
  auto bad = [](const std::string& what) { throw std::invalid_argument("hopf data shape mismatch: " + what); };
  if (d == 0) bad("dimension 0");
  if (h.mult.size() != d) bad("mult");
  for (const auto& row : h.mult) {
    if (row.size() != d) bad("mult");
    for (const auto& v : row)
      if (v.size() != d) bad("mult");
  }
  if (h.unit.size() != d) bad("unit");
  if (h.comult.size() != d) bad("comult");
  for (const auto& c : h.comult)
    if (c.rows() != d || c.cols() != d) bad("comult");
  if (h.counit.size() != d) bad("counit");
  if (h.antipode.rows() != d || h.antipode.cols() != d) bad("antipode");
  if (h.star.rows() != d || h.star.cols() != d) bad("star");
  if (h.haar.size() != d) bad("haar");
}

// (m (x) m)-style product of two coproduct coefficient matrices: Delta(a) Delta(b).
Mat coproduct_product(const HopfData& h, const Mat& x, const Mat& y) {
  size_t d = h.dim;
  Mat r(d, d);
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b) {
      if (x(a, b).is_zero()) continue;
      for (size_t c = 0; c < d; ++c)
        for (size_t e = 0; e < d; ++e) {
          if (y(c, e).is_zero()) continue;
          r.add_scaled(x(a, b) * y(c, e), outer(h.mult[a][c], h.mult[b][e]));
        }
    }
  return r;
}

// Positive definiteness of a Hermitian matrix by exact LDL^* elimination.
bool positive_definite(Mat g) {
  size_t n = g.rows();
  if (g != g.adjoint()) return false;
  for (size_t k = 0; k < n; ++k) {
    if (g(k, k).is_zero() || real_sign(g(k, k)) <= 0) return false;
    CycloScalar inv = g(k, k).inverse();
    for (size_t i = k + 1; i < n; ++i) {
      if (g(i, k).is_zero()) continue;
      CycloScalar f = g(i, k) * inv;
      for (size_t j = k + 1; j < n; ++j)
        if (!g(k, j).is_zero()) g(i, j) -= f * g(k, j);
    }
  }
  return true;
}

}  // namespace

ValidationReport validate_hopf(const HopfData& h) {
  check_shapes(h);
  ValidationReport rep;
  size_t d = h.dim;
  std::vector<Vec> e;
  for (size_t i = 0; i < d; ++i) e.push_back(unit_vec(d, i));

  bool ok = true;
  for (size_t i = 0; i < d && ok; ++i)
    for (size_t j = 0; j < d && ok; ++j)
      for (size_t k = 0; k < d && ok; ++k)
        ok = h.mul(h.mult[i][j], e[k]) == h.mul(e[i], h.mult[j][k]);
  add_check(rep, "associativity", ok);

  ok = true;
  for (size_t i = 0; i < d && ok; ++i) ok = h.mul(h.unit, e[i]) == e[i] && h.mul(e[i], h.unit) == e[i];
  add_check(rep, "unit", ok);

  ok = true;
  for (size_t i = 0; i < d && ok; ++i) {
    const Mat& c = h.comult[i];
    // (Delta (x) id) and (id (x) Delta) as d x d^2 coefficient matrices.
    Mat left(d, d * d), right(d, d * d);
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k) {
        if (c(j, k).is_zero()) continue;
        for (size_t a = 0; a < d; ++a)
          for (size_t b = 0; b < d; ++b) {
            if (!h.comult[j](a, b).is_zero()) left(a, b * d + k) += c(j, k) * h.comult[j](a, b);
            if (!h.comult[k](a, b).is_zero()) right(j, a * d + b) += c(j, k) * h.comult[k](a, b);
          }
      }
    ok = left == right;
  }
  add_check(rep, "coassociativity", ok);

  ok = true;
  for (size_t i = 0; i < d && ok; ++i) {
    Vec l(d), r(d);
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k) {
        l[k] += h.counit[j] * h.comult[i](j, k);
        r[j] += h.comult[i](j, k) * h.counit[k];
      }
    ok = l == e[i] && r == e[i];
  }
  add_check(rep, "counit", ok, "(eps (x) id)Delta != id");

  ok = h.coproduct(h.unit) == outer(h.unit, h.unit);
  for (size_t i = 0; i < d && ok; ++i)
    for (size_t j = 0; j < d && ok; ++j)
      ok = h.coproduct(h.mult[i][j]) == coproduct_product(h, h.comult[i], h.comult[j]);
  add_check(rep, "comultiplication is a unital homomorphism", ok);

  ok = h.eval_counit(h.unit) == CycloScalar(1);
  for (size_t i = 0; i < d && ok; ++i)
    for (size_t j = 0; j < d && ok; ++j) ok = h.eval_counit(h.mult[i][j]) == h.counit[i] * h.counit[j];
  add_check(rep, "counit is a unital homomorphism", ok);

  ok = true;
  for (size_t i = 0; i < d && ok; ++i) {
    Vec l(d), r(d);
    const Mat& c = h.comult[i];
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k) {
        if (c(j, k).is_zero()) continue;
        Vec a = h.mul(h.apply_antipode(e[j]), e[k]);
        Vec b = h.mul(e[j], h.apply_antipode(e[k]));
        for (size_t p = 0; p < d; ++p) {
          l[p] += c(j, k) * a[p];
          r[p] += c(j, k) * b[p];
        }
      }
    Vec target = h.unit;
    for (auto& x : target) x *= h.counit[i];
    ok = l == target && r == target;
  }
  add_check(rep, "antipode", ok);

  ok = true;
  for (size_t i = 0; i < d && ok; ++i) ok = h.adjoint(h.adjoint(e[i])) == e[i];
  for (size_t i = 0; i < d && ok; ++i)
    for (size_t j = 0; j < d && ok; ++j)
      ok = h.adjoint(h.mult[i][j]) == h.mul(h.adjoint(e[j]), h.adjoint(e[i]));
  add_check(rep, "star is an antimultiplicative involution", ok);

  ok = true;
  for (size_t i = 0; i < d && ok; ++i) {
    Mat rhs(d, d);
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k)
        if (!h.comult[i](j, k).is_zero())
          rhs.add_scaled(h.comult[i](j, k).conj(), outer(col(h.star, j), col(h.star, k)));
    ok = h.coproduct(h.adjoint(e[i])) == rhs;
  }
  add_check(rep, "comultiplication commutes with star", ok);

  add_check(rep, "haar normalized", h.eval_haar(h.unit) == CycloScalar(1));

  ok = true;
  for (size_t i = 0; i < d && ok; ++i) {
    Vec l(d), r(d);
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k) {
        if (h.comult[i](j, k).is_zero()) continue;
        l[j] += h.comult[i](j, k) * h.haar[k];
        r[k] += h.haar[j] * h.comult[i](j, k);
      }
    Vec target = h.unit;
    for (auto& x : target) x *= h.haar[i];
    ok = l == target && r == target;
  }
  add_check(rep, "haar invariance", ok);

  ok = true;
  for (size_t i = 0; i < d && ok; ++i) ok = h.eval_haar(h.adjoint(e[i])) == h.haar[i].conj();
  add_check(rep, "haar is star-invariant", ok);

  Mat gram(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) gram(i, j) = h.eval_haar(h.mul(h.adjoint(e[i]), e[j]));
  add_check(rep, "haar is faithful and positive", positive_definite(gram));

  ok = true;
  for (size_t i = 0; i < d && ok; ++i)
    for (size_t j = 0; j < d && ok; ++j) ok = h.eval_haar(h.mult[i][j]) == h.eval_haar(h.mult[j][i]);
  add_check(rep, "haar is tracial (Kac)", ok, "Haar state is not tracial: non-Kac input is not supported");

  add_check(rep, "antipode is involutive (Kac)", h.antipode * h.antipode == Mat::identity(d),
            "S^2 != id: non-Kac input is not supported");
  return rep;
}

// ---------------------------------------------------------------- solving for structure

std::optional<Vec> solve_haar(const HopfData& h) {
  size_t d = h.dim;
  std::vector<Vec> rows;
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) {
      Vec row(d), row2(d);
      for (size_t k = 0; k < d; ++k) {
        row[k] += h.comult[i](j, k);
        row2[k] += h.comult[i](k, j);
      }
      row[i] -= h.unit[j];
      row2[i] -= h.unit[j];
      rows.push_back(std::move(row));
      rows.push_back(std::move(row2));
    }
  }
  Subspace k = kernel(rows, d);
  if (k.dim() != 1) return std::nullopt;
  Vec x = k.basis()[0];
  CycloScalar n = dot(x, h.unit);
  if (n.is_zero()) return std::nullopt;
  CycloScalar inv = n.inverse();
  for (auto& v : x) v *= inv;
  return x;
}

std::optional<Vec> solve_counit(const HopfData& h) {
  size_t d = h.dim;
  std::vector<Vec> rows;
  Vec rhs;
  for (size_t i = 0; i < d; ++i)
    for (size_t k = 0; k < d; ++k) {
      Vec row(d);
      for (size_t j = 0; j < d; ++j) row[j] = h.comult[i](j, k);
      rows.push_back(std::move(row));
      rhs.emplace_back(int64_t(i == k));
    }
  return solve(rows, rhs, d);
}

std::optional<Mat> solve_antipode(const HopfData& h) {
  size_t d = h.dim;
  // Unknown S(l, j) at index l * d + j.
  std::vector<Vec> rows;
  Vec rhs;
  for (size_t i = 0; i < d; ++i)
    for (size_t p = 0; p < d; ++p) {
      Vec row(d * d);
      for (size_t j = 0; j < d; ++j)
        for (size_t k = 0; k < d; ++k) {
          const CycloScalar& c = h.comult[i](j, k);
          if (c.is_zero()) continue;
          for (size_t l = 0; l < d; ++l)
            if (!h.mult[l][k][p].is_zero()) row[l * d + j] += c * h.mult[l][k][p];
        }
      rows.push_back(std::move(row));
      rhs.push_back(h.counit[i] * h.unit[p]);
    }
  auto x = solve(rows, rhs, d * d);
  if (!x) return std::nullopt;
  return Mat::from_vec(d, d, *x);
}

HopfData dual_hopf_data(const HopfData& h) {
  size_t d = h.dim;
  HopfData g;
  g.name = "dual of " + h.name;
  g.dim = d;
  g.mult.assign(d, std::vector<Vec>(d, Vec(d)));
  for (size_t k = 0; k < d; ++k)
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) g.mult[i][j][k] = h.comult[k](i, j);
  g.unit = h.counit;
  g.comult.assign(d, Mat(d, d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k) g.comult[k](i, j) = h.mult[i][j][k];
  g.counit = h.unit;
  g.antipode = h.antipode.transpose();
  g.star = Mat(d, d);
  for (size_t i = 0; i < d; ++i) {
    Vec s = h.adjoint(col(h.antipode, i));
    for (size_t k = 0; k < d; ++k) g.star(i, k) = s[k].conj();
  }
  auto haar = solve_haar(g);
  if (!haar) throw std::runtime_error("dual Hopf algebra has no unique Haar state");
  g.haar = *haar;
  return g;
}

// ---------------------------------------------------------------- tensors

Mat Side::coproduct(const Vec& x) const {
  size_t m = dim();
  Mat r(m, m);
  for (size_t k = 0; k < m; ++k)
    if (!x[k].is_zero()) r.add_scaled(x[k], coprod[k]);
  return r;
}

std::optional<Mat> tensor_coords(const Mat& x, const AlgebraTable& first, const AlgebraTable& second) {
  size_t d1 = first.operators().at(0).rows(), d2 = second.operators().at(0).rows();
  if (x.rows() != d1 * d2 || x.cols() != d1 * d2) throw std::invalid_argument("tensor_coords: size mismatch");
  const auto& p1 = first.operator_space().space().pivots();
  const auto& p2 = second.operator_space().space().pivots();
  Mat t(p1.size(), p2.size());
  for (size_t i = 0; i < p1.size(); ++i)
    for (size_t j = 0; j < p2.size(); ++j) {
      size_t r1 = p1[i] / d1, s1 = p1[i] % d1, r2 = p2[j] / d2, s2 = p2[j] % d2;
      t(i, j) = x(r1 * d2 + r2, s1 * d2 + s2);
    }
  if (tensor_element(t, first, second) != x) return std::nullopt;
  return t;
}

Mat tensor_element(const Mat& t, const AlgebraTable& first, const AlgebraTable& second) {
  const auto& f = first.operators();
  const auto& s = second.operators();
  Mat x(f.at(0).rows() * s.at(0).rows(), f.at(0).cols() * s.at(0).cols());
  for (size_t i = 0; i < t.rows(); ++i)
    for (size_t j = 0; j < t.cols(); ++j)
      if (!t(i, j).is_zero()) x.add_scaled(t(i, j), kron(f[i], s[j]));
  return x;
}

bool pentagon_holds(const Mat& w, size_t d) {
  std::array<size_t, 3> dims{d, d, d};
  SparseOp w12 = place(w, dims, 0, 1), w13 = place(w, dims, 0, 2), w23 = place(w, dims, 1, 2);
  return w12 * w13 * w23 == w23 * w12;
}

// ---------------------------------------------------------------- realization

Mat QGRealization::pi_of(const Vec& c) const {
  Mat x(d, d);
  for (size_t i = 0; i < d; ++i)
    if (!c[i].is_zero()) x.add_scaled(c[i], pi[i]);
  return x;
}

std::optional<Vec> QGRealization::hopf_coords(const Mat& x) const {
  auto c = a_side.alg.coords(x);
  if (!c) return std::nullopt;
  return matvec(a_to_hopf, *c);
}

QGRealization realize(const HopfData& h) { return realize(std::make_shared<const HopfData>(h)); }

QGRealization realize(std::shared_ptr<const HopfData> hp) {
  const HopfData& h = *hp;
  auto rep = validate_hopf(h);
  if (!rep.ok()) throw std::runtime_error("cannot realize " + h.name + ": axiom '" + rep.first_failure() + "' fails");
  QGRealization r;
  r.hopf = hp;
  size_t d = r.d = h.dim;

  // GNS: Gram-Schmidt for <a, b> = h(a^* b), then equalize norms exactly.
  Mat gram(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) gram(i, j) = h.eval_haar(h.mul(h.adjoint(h.basis_vector(i)), h.basis_vector(j)));
  auto inner = [&](const Vec& u, const Vec& v) {
    CycloScalar s;
    for (size_t i = 0; i < d; ++i) {
      if (u[i].is_zero()) continue;
      CycloScalar ui = u[i].conj();
      for (size_t j = 0; j < d; ++j)
        if (!v[j].is_zero() && !gram(i, j).is_zero()) s += ui * gram(i, j) * v[j];
    }
    return s;
  };
  std::vector<Vec> vs;
  std::vector<CycloScalar> norms;
  for (size_t k = 0; k < d; ++k) {
    Vec v = h.basis_vector(k);
    for (size_t j = 0; j < vs.size(); ++j) {
      CycloScalar c = inner(vs[j], v) / norms[j];
      if (c.is_zero()) continue;
      for (size_t i = 0; i < d; ++i)
        if (!vs[j][i].is_zero()) v[i] -= c * vs[j][i];
    }
    vs.push_back(v);
    norms.push_back(inner(v, v).canonical());
  }
  r.gns = Mat(d, d);
  for (size_t k = 0; k < d; ++k) {
    CycloScalar ratio = (norms[0] / norms[k]).canonical();
    if (!ratio.is_rational())
      throw std::runtime_error("GNS normalization of " + h.name + " needs the square root of " + ratio.str());
    CycloScalar s = sqrt_rational(ratio.rational());
    for (size_t i = 0; i < d; ++i) r.gns(i, k) = vs[k][i] * s;
  }
  auto inv = inverse(r.gns);
  if (!inv) throw std::runtime_error("Haar state is not faithful");
  r.gns_inv = *inv;

  for (size_t i = 0; i < d; ++i) {
    Mat l(d, d);
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k) l(k, j) = h.mult[i][j][k];
    r.pi.push_back(r.gns_inv * l * r.gns);
  }

  // W(Lambda a (x) Lambda b) = (Lambda (x) Lambda)(Delta(a)(1 (x) b)).
  Mat we(d * d, d * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k)
        for (size_t l = 0; l < d; ++l) {
          const CycloScalar& c = h.comult[i](k, l);
          if (c.is_zero()) continue;
          for (size_t n = 0; n < d; ++n)
            if (!h.mult[l][j][n].is_zero()) we(k * d + n, i * d + j) += c * h.mult[l][j][n];
        }
  r.W = kron(r.gns_inv, r.gns_inv) * we * kron(r.gns, r.gns);
  Mat id2 = Mat::identity(d * d);
  if (r.W * r.W.adjoint() != id2 || r.W.adjoint() * r.W != id2)
    throw std::runtime_error("multiplicative unitary of " + h.name + " is not unitary");
  if (!pentagon_holds(r.W, d)) throw std::runtime_error("invalid construction convention: pentagon fails");

  // pi(A) side.
  auto a_space = OperatorSubspace::span(d, r.pi);
  if (a_space.dim() != d) throw std::runtime_error("left regular representation is not faithful");
  r.a_side.alg = AlgebraTable::from_operators(a_space);
  r.hopf_to_a = Mat(d, d);
  for (size_t i = 0; i < d; ++i) {
    Vec c = r.a_side.alg.coords_unchecked(r.pi[i]);
    for (size_t k = 0; k < d; ++k) r.hopf_to_a(k, i) = c[k];
  }
  r.a_to_hopf = *inverse(r.hopf_to_a);
  for (size_t k = 0; k < d; ++k) {
    Mat c(d, d);
    for (size_t i = 0; i < d; ++i)
      if (!r.a_to_hopf(i, k).is_zero()) c.add_scaled(r.a_to_hopf(i, k), h.comult[i]);
    r.a_side.coprod.push_back(r.hopf_to_a * c * r.hopf_to_a.transpose());
  }
  r.a_side.antipode = r.hopf_to_a * h.antipode * r.a_to_hopf;

  Mat wstar = r.W.adjoint();
  Mat id = Mat::identity(d);
  for (size_t i = 0; i < d; ++i) {
    Mat lhs = r.W * kron(r.pi[i], id) * wstar;
    Mat rhs(d * d, d * d);
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k)
        if (!h.comult[i](j, k).is_zero()) rhs.add_scaled(h.comult[i](j, k), kron(r.pi[j], r.pi[k]));
    if (lhs != rhs) throw std::runtime_error("W does not implement the comultiplication of " + h.name);
  }

  // Dual algebra from the slices (id (x) omega_ab)(W).
  std::vector<Mat> slices;
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b) slices.push_back(right_slice(r.W, d, d, a, b));
  auto dual_space = generate_algebra(d, slices);
  if (dual_space.dim() != d) throw std::runtime_error("dual algebra has the wrong dimension");
  r.dual_side.alg = AlgebraTable::from_operators(dual_space);
  for (const auto& c : r.dual_side.alg.operators()) {
    Mat x = swap_legs(wstar * kron(id, c) * r.W, d, d);
    auto t = tensor_coords(x, r.dual_side.alg, r.dual_side.alg);
    if (!t) throw std::runtime_error("dual coproduct leaves the dual algebra");
    r.dual_side.coprod.push_back(std::move(*t));
  }

  r.J = r.gns_inv * h.star * r.gns.conj();
  r.J_hat = r.gns_inv * h.star * h.antipode.conj() * r.gns.conj();
  Mat jc = r.J.conj(), jhc = r.J_hat.conj();
  r.dual_side.antipode = Mat(d, d);
  for (size_t k = 0; k < d; ++k) {
    auto c = r.dual_side.alg.coords(r.J * r.dual_side.alg.operators()[k].transpose() * jc);
    if (!c) throw std::runtime_error("J y^* J leaves the dual algebra");
    for (size_t i = 0; i < d; ++i) r.dual_side.antipode(i, k) = (*c)[i];
  }
  for (size_t k = 0; k < d; ++k) {
    Mat lhs = r.J_hat * r.a_side.alg.operators()[k].transpose() * jhc;
    if (lhs != r.a_side.alg.element(col(r.a_side.antipode, k)))
      throw std::runtime_error("unitary antipode of pi(A) differs from J_hat x^* J_hat");
  }
  return r;
}

Mat dual_coproduct(const QGRealization& r, const Mat& y) {
  if (!r.dual_space().contains(y)) throw std::invalid_argument("dual_coproduct: argument is not in the dual algebra");
  return swap_legs(r.W.adjoint() * kron(Mat::identity(r.d), y) * r.W, r.d, r.d);
}

// ---------------------------------------------------------------- bicharacters

bool is_bicharacter(const QGRealization& r1, const QGRealization& r2, const Mat& v) {
  size_t n = r1.d * r2.d;
  if (v.rows() != n || v.cols() != n) throw std::invalid_argument("is_bicharacter: shape mismatch");
  Mat id = Mat::identity(n);
  if (v * v.adjoint() != id || v.adjoint() * v != id) return false;
  auto t = tensor_coords(v, r1.dual_side.alg, r2.a_side.alg);
  if (!t) return false;
  size_t m1 = r1.dual_side.dim(), m2 = r2.a_side.dim();
  const auto& p1 = r1.dual_side.alg.constants();
  const auto& p2 = r2.a_side.alg.constants();
  auto idx = [](size_t a, size_t b, size_t c, size_t nb, size_t nc) { return (a * nb + b) * nc + c; };
  // (Delta_hat (x) id)V against V23 V13, as coefficients of c_k (x) c_l (x) b_j.
  Vec lhs(m1 * m1 * m2), rhs(m1 * m1 * m2);
  for (size_t i = 0; i < m1; ++i)
    for (size_t j = 0; j < m2; ++j) {
      if ((*t)(i, j).is_zero()) continue;
      const Mat& c = r1.dual_side.coprod[i];
      for (size_t k = 0; k < m1; ++k)
        for (size_t l = 0; l < m1; ++l)
          if (!c(k, l).is_zero()) lhs[idx(k, l, j, m1, m2)] += (*t)(i, j) * c(k, l);
      for (size_t k = 0; k < m1; ++k)
        for (size_t l = 0; l < m2; ++l) {
          if ((*t)(k, l).is_zero()) continue;
          CycloScalar f = (*t)(i, j) * (*t)(k, l);
          for (size_t p = 0; p < m2; ++p)
            if (!p2[j][l][p].is_zero()) rhs[idx(k, i, p, m1, m2)] += f * p2[j][l][p];
        }
    }
  if (lhs != rhs) return false;
  // (id (x) Delta)V against V12 V13, as coefficients of c_i (x) b_k (x) b_l.
  Vec lhs2(m1 * m2 * m2), rhs2(m1 * m2 * m2);
  for (size_t i = 0; i < m1; ++i)
    for (size_t j = 0; j < m2; ++j) {
      if ((*t)(i, j).is_zero()) continue;
      const Mat& c = r2.a_side.coprod[j];
      for (size_t k = 0; k < m2; ++k)
        for (size_t l = 0; l < m2; ++l)
          if (!c(k, l).is_zero()) lhs2[idx(i, k, l, m2, m2)] += (*t)(i, j) * c(k, l);
      for (size_t k = 0; k < m1; ++k)
        for (size_t l = 0; l < m2; ++l) {
          if ((*t)(k, l).is_zero()) continue;
          CycloScalar f = (*t)(i, j) * (*t)(k, l);
          for (size_t p = 0; p < m1; ++p)
            if (!p1[i][k][p].is_zero()) rhs2[idx(p, j, l, m2, m2)] += f * p1[i][k][p];
        }
    }
  return lhs2 == rhs2;
}

// ---------------------------------------------------------------- corepresentations

namespace {

// W = sum_k c_k (x) w_k over the dual echelon basis.
std::vector<Mat> second_legs(const QGRealization& r) {
  std::vector<Mat> w;
  for (size_t p : r.dual_space().space().pivots()) w.push_back(left_slice(r.W, r.d, r.d, p / r.d, p % r.d));
  return w;
}

}  // namespace

std::vector<Corep> irreducible_coreps(const QGRealization& r) {
  const auto& alg = r.dual_side.alg;
  size_t d = r.d;
  auto mu = matrix_units(alg);
  auto w = second_legs(r);
  {
    Mat check(d * d, d * d);
    for (size_t k = 0; k < d; ++k) check += kron(alg.operators()[k], w[k]);
    if (check != r.W) throw std::logic_error("W does not decompose over the dual basis");
  }
  Mat m(d, d);
  size_t row = 0;
  for (const auto& b : mu.blocks)
    for (size_t a = 0; a < b.size; ++a)
      for (size_t c = 0; c < b.size; ++c, ++row)
        for (size_t k = 0; k < d; ++k) m(row, k) = b.e[a][c][k];
  if (row != d) throw std::logic_error("matrix units do not span the dual algebra");
  auto minv = inverse(m);
  if (!minv) throw std::logic_error("matrix units are linearly dependent");

  std::vector<Corep> out;
  row = 0;
  for (const auto& b : mu.blocks) {
    Corep u;
    u.n = b.size;
    u.dual_projection = b.central;
    u.u.assign(b.size, std::vector<Mat>(b.size, Mat(d, d)));
    u.coords.assign(b.size, std::vector<Vec>(b.size));
    for (size_t a = 0; a < b.size; ++a)
      for (size_t c = 0; c < b.size; ++c, ++row) {
        Mat x(d, d);
        for (size_t k = 0; k < d; ++k)
          if (!(*minv)(k, row).is_zero()) x.add_scaled((*minv)(k, row), w[k]);
        auto co = r.a_side.alg.coords(x);
        if (!co) throw std::logic_error("corepresentation coefficient outside pi(A)");
        u.u[a][c] = std::move(x);
        u.coords[a][c] = std::move(*co);
      }
    // Unitarity and the corepresentation law.
    Mat id = Mat::identity(d);
    for (size_t a = 0; a < u.n; ++a)
      for (size_t c = 0; c < u.n; ++c) {
        Mat s1(d, d), s2(d, d);
        for (size_t e = 0; e < u.n; ++e) {
          s1 += u.u[a][e] * u.u[c][e].adjoint();
          s2 += u.u[e][a].adjoint() * u.u[e][c];
        }
        Mat target = a == c ? id : Mat(d, d);
        if (s1 != target || s2 != target) throw std::logic_error("extracted corepresentation is not unitary");
        Mat lhs = r.a_side.coproduct(u.coords[a][c]);
        Mat rhs(d, d);
        for (size_t e = 0; e < u.n; ++e) rhs += outer(u.coords[a][e], u.coords[e][c]);
        if (lhs != rhs) throw std::logic_error("extracted matrix fails the corepresentation law");
      }
    out.push_back(std::move(u));
  }
  for (size_t i = 0; i < out.size(); ++i)
    if (out[i].n == 1 && out[i].u[0][0] == Mat::identity(d)) {
      std::rotate(out.begin(), out.begin() + i, out.begin() + i + 1);
      break;
    }
  return out;
}

// ---------------------------------------------------------------- morphisms

HopfMorphism identity_morphism(const HopfData& h) { return {"id", Mat::identity(h.dim)}; }

ValidationReport validate_morphism(const HopfData& s, const HopfData& t, const HopfMorphism& f) {
  if (f.matrix.rows() != t.dim || f.matrix.cols() != s.dim) throw std::invalid_argument("morphism shape mismatch");
  ValidationReport rep;
  const Mat& m = f.matrix;
  add_check(rep, "unital", matvec(m, s.unit) == t.unit);
  bool ok = true;
  for (size_t i = 0; i < s.dim && ok; ++i)
    for (size_t j = 0; j < s.dim && ok; ++j)
      ok = matvec(m, s.mult[i][j]) == t.mul(col(m, i), col(m, j));
  add_check(rep, "multiplicative", ok);
  ok = true;
  for (size_t i = 0; i < s.dim && ok; ++i) ok = matvec(m, s.adjoint(s.basis_vector(i))) == t.adjoint(col(m, i));
  add_check(rep, "star-preserving", ok);
  ok = true;
  for (size_t i = 0; i < s.dim && ok; ++i) ok = m * s.comult[i] * m.transpose() == t.coproduct(col(m, i));
  add_check(rep, "intertwines comultiplications", ok);
  std::vector<Vec> cols;
  for (size_t i = 0; i < s.dim; ++i) cols.push_back(col(m, i));
  add_check(rep, "surjective", Subspace::span(t.dim, cols).dim() == t.dim);
  return rep;
}

DualInclusion dual_inclusion(const QGRealization& src, const QGRealization& tgt, const HopfMorphism& f) {
  auto rep = validate_morphism(*src.hopf, *tgt.hopf, f);
  if (!rep.ok()) throw std::invalid_argument("invalid morphism: " + rep.first_failure());
  size_t dg = src.d, dh = tgt.d, mg = src.dual_side.dim(), mh = tgt.dual_side.dim();
  auto wg = second_legs(src), wh = second_legs(tgt);
  // Columns: a_side coordinates of the second legs of W^target.
  Mat basis(dh, mh);
  for (size_t k = 0; k < mh; ++k) {
    auto c = tgt.a_side.alg.coords(wh[k]);
    if (!c) throw std::logic_error("second leg of W outside pi(A)");
    for (size_t i = 0; i < dh; ++i) basis(i, k) = (*c)[i];
  }
  auto binv = inverse(basis);
  if (!binv) throw std::logic_error("second legs of W are not a basis");
  DualInclusion out;
  out.gamma = Mat(mg, mh);
  out.bicharacter = Mat(dg * dh, dg * dh);
  for (size_t j = 0; j < mg; ++j) {
    auto hc = src.hopf_coords(wg[j]);
    if (!hc) throw std::logic_error("second leg of W outside pi(A)");
    Mat image = tgt.pi_of(matvec(f.matrix, *hc));
    out.bicharacter += kron(src.dual_side.alg.operators()[j], image);
    Vec coeff = matvec(*binv, tgt.a_side.alg.coords_unchecked(image));
    for (size_t k = 0; k < mh; ++k) out.gamma(j, k) = coeff[k];
  }
  Mat check(dg * dh, dg * dh);
  for (size_t k = 0; k < mh; ++k) check += kron(src.dual_side.alg.element(col(out.gamma, k)), wh[k]);
  if (check != out.bicharacter) throw std::runtime_error("(gamma (x) id)W^H differs from (id (x) rho)W^G");
  std::vector<Vec> cols;
  for (size_t k = 0; k < mh; ++k) cols.push_back(col(out.gamma, k));
  out.range = Subspace::span(mg, cols);
  if (out.range.dim() != mh) throw std::runtime_error("dual inclusion is not injective");
  const auto& ag = src.dual_side.alg;
  const auto& ah = tgt.dual_side.alg;
  if (matvec(out.gamma, ah.unit()) != ag.unit()) throw std::runtime_error("dual inclusion is not unital");
  for (size_t a = 0; a < mh; ++a) {
    Vec ga = col(out.gamma, a);
    if (matvec(out.gamma, ah.adjoint(ah.basis_vector(a))) != ag.adjoint(ga))
      throw std::runtime_error("dual inclusion is not star-preserving");
    for (size_t b = 0; b < mh; ++b)
      if (matvec(out.gamma, ah.constants()[a][b]) != ag.mul(ga, col(out.gamma, b)))
        throw std::runtime_error("dual inclusion is not multiplicative");
    if (out.gamma * tgt.dual_side.coprod[a] * out.gamma.transpose() != src.dual_side.coproduct(ga))
      throw std::runtime_error("dual inclusion does not intertwine the dual comultiplications");
  }
  return out;
}

}  // namespace qcenter
