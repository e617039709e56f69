#include "qcenter/builders.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace qcenter {

size_t GroupTable::identity() const {
  for (size_t e = 0; e < order(); ++e) {
    bool ok = true;
    for (size_t g = 0; g < order() && ok; ++g) ok = mult[e][g] == g && mult[g][e] == g;
    if (ok) return e;
  }
  throw std::invalid_argument("group table has no identity");
}

size_t GroupTable::inverse(size_t g) const {
  size_t e = identity();
  for (size_t h = 0; h < order(); ++h)
    if (mult[g][h] == e) return h;
  throw std::invalid_argument("group element without inverse");
}

void validate_group(const GroupTable& g) {
  size_t n = g.order();
  if (n == 0) throw std::invalid_argument("empty group table");
  if (!g.labels.empty() && g.labels.size() != n) throw std::invalid_argument("label count does not match table");
  for (const auto& row : g.mult) {
    if (row.size() != n) throw std::invalid_argument("group table is not square");
    for (size_t x : row)
      if (x >= n) throw std::invalid_argument("group table entry out of range");
  }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c)
        if (g.mult[g.mult[a][b]][c] != g.mult[a][g.mult[b][c]])
          throw std::invalid_argument("group table is not associative");
  g.identity();
  for (size_t a = 0; a < n; ++a) {
    size_t b = g.inverse(a);
    if (g.mult[b][a] != g.identity()) throw std::invalid_argument("group table has a one-sided inverse");
  }
}

namespace {

using Perm = std::vector<size_t>;

Perm compose(const Perm& p, const Perm& q) {  // (p q)(x) = p(q(x))
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

GroupTable from_elements(std::string name, const std::vector<Perm>& elems, std::vector<std::string> labels) {
  GroupTable g;
  g.name = std::move(name);
  g.labels = std::move(labels);
  std::map<Perm, size_t> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  g.mult.assign(elems.size(), std::vector<size_t>(elems.size()));
  for (size_t a = 0; a < elems.size(); ++a)
    for (size_t b = 0; b < elems.size(); ++b) g.mult[a][b] = index.at(compose(elems[a], elems[b]));
  return g;
}

// Closure of the generators under composition, breadth first from the identity.
std::vector<Perm> closure(const std::vector<Perm>& gens) {
  Perm id(gens.at(0).size());
  for (size_t i = 0; i < id.size(); ++i) id[i] = i;
  std::vector<Perm> out{id};
  for (size_t k = 0; k < out.size(); ++k)
    for (const auto& s : gens) {
      Perm p = compose(out[k], s);
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  return out;
}

}  // namespace

GroupTable cyclic_group(size_t n) {
  GroupTable g;
  g.name = "Z" + std::to_string(n);
  g.mult.assign(n, std::vector<size_t>(n));
  for (size_t a = 0; a < n; ++a) {
    g.labels.push_back(std::to_string(a));
    for (size_t b = 0; b < n; ++b) g.mult[a][b] = (a + b) % n;
  }
  return g;
}

GroupTable trivial_group() {
  GroupTable g = cyclic_group(1);
  g.name = "trivial";
  g.labels = {"e"};
  return g;
}

GroupTable klein_four_group() {
  GroupTable g;
  g.name = "Z2xZ2";
  g.labels = {"e", "a", "b", "ab"};
  g.mult.assign(4, std::vector<size_t>(4));
  for (size_t a = 0; a < 4; ++a)
    for (size_t b = 0; b < 4; ++b) g.mult[a][b] = a ^ b;
  return g;
}

GroupTable symmetric_group3() {
  std::vector<Perm> e = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  return from_elements("S3", e, {"e", "(12)", "(13)", "(23)", "(123)", "(132)"});
}

GroupTable dihedral_group4() {
  auto elems = closure({{1, 2, 3, 0}, {0, 3, 2, 1}});
  std::vector<std::string> labels;
  for (const auto& p : elems) {
    std::string s;
    for (size_t x : p) s += std::to_string(x);
    labels.push_back(s);
  }
  return from_elements("D4", elems, labels);
}

GroupTable quaternion_group() {
  // Elements (sign, unit) with units 1, i, j, k; index = 4 * (sign < 0) + unit.
  static const int table[4][4][2] = {{{1, 0}, {1, 1}, {1, 2}, {1, 3}},
                                     {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
                                     {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
                                     {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}};
  GroupTable g;
  g.name = "Q8";
  g.labels = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  g.mult.assign(8, std::vector<size_t>(8));
  for (size_t a = 0; a < 8; ++a)
    for (size_t b = 0; b < 8; ++b) {
      int sign = (a < 4 ? 1 : -1) * (b < 4 ? 1 : -1) * table[a % 4][b % 4][0];
      g.mult[a][b] = (sign < 0 ? 4 : 0) + size_t(table[a % 4][b % 4][1]);
    }
  return g;
}

std::vector<size_t> group_center(const GroupTable& g) {
  std::vector<size_t> z;
  for (size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (size_t b = 0; b < g.order() && central; ++b) central = g.mult[a][b] == g.mult[b][a];
    if (central) z.push_back(a);
  }
  return z;
}

bool is_normal_subset(const GroupTable& g, const std::vector<size_t>& h) {
  for (size_t t = 0; t < g.order(); ++t)
    for (size_t s : h) {
      size_t c = g.mult[g.mult[g.inverse(t)][s]][t];
      if (std::find(h.begin(), h.end(), c) == h.end()) return false;
    }
  return true;
}

std::vector<size_t> generated_subgroup(const GroupTable& g, const std::vector<size_t>& gens) {
  std::vector<size_t> out{g.identity()};
  for (size_t k = 0; k < out.size(); ++k)
    for (size_t s : gens) {
      size_t p = g.mult[out[k]][s];
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  std::sort(out.begin(), out.end());
  return out;
}

GroupTable subgroup_table(const GroupTable& g, const std::vector<size_t>& h, std::string name) {
  GroupTable s;
  s.name = std::move(name);
  s.mult.assign(h.size(), std::vector<size_t>(h.size()));
  for (size_t a = 0; a < h.size(); ++a) {
    s.labels.push_back(g.labels.empty() ? std::to_string(h[a]) : g.labels[h[a]]);
    for (size_t b = 0; b < h.size(); ++b) {
      auto it = std::find(h.begin(), h.end(), g.mult[h[a]][h[b]]);
      if (it == h.end()) throw std::invalid_argument("subset is not a subgroup");
      s.mult[a][b] = size_t(it - h.begin());
    }
  }
  validate_group(s);
  return s;
}

bool is_abelian(const GroupTable& g) { return group_center(g).size() == g.order(); }

HopfData function_algebra(const GroupTable& g) {
  validate_group(g);
  size_t n = g.order(), e = g.identity();
  HopfData h;
  h.name = "F(" + g.name + ")";
  h.dim = n;
  h.mult.assign(n, std::vector<Vec>(n, Vec(n)));
  h.unit = Vec(n, CycloScalar(1));
  h.comult.assign(n, Mat(n, n));
  h.counit = Vec(n);
  h.antipode = Mat(n, n);
  h.star = Mat::identity(n);
  h.haar = Vec(n, CycloScalar(Rational(1, int64_t(n))));
  for (size_t a = 0; a < n; ++a) {
    h.mult[a][a][a] = CycloScalar(1);
    for (size_t b = 0; b < n; ++b) h.comult[g.mult[a][b]](a, b) = CycloScalar(1);
    h.antipode(g.inverse(a), a) = CycloScalar(1);
  }
  h.counit[e] = CycloScalar(1);
  return h;
}

HopfData group_algebra(const GroupTable& g) {
  validate_group(g);
  size_t n = g.order(), e = g.identity();
  HopfData h;
  h.name = "C[" + g.name + "]";
  h.dim = n;
  h.mult.assign(n, std::vector<Vec>(n, Vec(n)));
  h.unit = Vec(n);
  h.unit[e] = CycloScalar(1);
  h.comult.assign(n, Mat(n, n));
  h.counit = Vec(n, CycloScalar(1));
  h.antipode = Mat(n, n);
  h.star = Mat(n, n);
  h.haar = Vec(n);
  h.haar[e] = CycloScalar(1);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) h.mult[a][b][g.mult[a][b]] = CycloScalar(1);
    h.comult[a](a, a) = CycloScalar(1);
    h.antipode(g.inverse(a), a) = CycloScalar(1);
    h.star(g.inverse(a), a) = CycloScalar(1);
  }
  return h;
}

std::pair<HopfData, HopfData> build_classical(const GroupTable& g) { return {function_algebra(g), group_algebra(g)}; }

HopfMorphism restriction_morphism(const GroupTable& g, const std::vector<size_t>& h) {
  subgroup_table(g, h, "H");
  HopfMorphism f;
  f.name = "restriction";
  f.matrix = Mat(h.size(), g.order());
  for (size_t i = 0; i < h.size(); ++i) f.matrix(i, h[i]) = CycloScalar(1);
  return f;
}

HopfData build_kac_paljutkin() {
  // Faithful representation on C^4 (+) C^2: four characters and the 2-dim block.
  const size_t n = 6, d = 8;
  CycloScalar i = CycloScalar::zeta(4), one(1), zero;
  Mat x(n, n), y(n, n), z(n, n);
  const std::array<CycloScalar, 4> xs{one, one, -one, -one}, zs{one, -one, i, -i};
  for (size_t k = 0; k < 4; ++k) {
    x(k, k) = xs[k];
    y(k, k) = xs[k];
    z(k, k) = zs[k];
  }
  x(4, 4) = one, x(5, 5) = -one;
  y(4, 4) = -one, y(5, 5) = one;
  z(4, 5) = one, z(5, 4) = one;

  auto power = [&](const Mat& m, size_t e) { return e ? m : Mat::identity(n); };
  std::vector<Mat> basis;
  for (size_t a = 0; a < 2; ++a)
    for (size_t b = 0; b < 2; ++b)
      for (size_t c = 0; c < 2; ++c) basis.push_back(power(x, a) * power(y, b) * power(z, c));
  auto space = OperatorSubspace::span(n, basis);
  if (space.dim() != d) throw std::logic_error("Kac-Paljutkin basis is not independent");
  // Coordinates in the monomial basis.
  Mat change(d, d);
  for (size_t k = 0; k < d; ++k) {
    Vec c = *space.coordinates(basis[k]);
    for (size_t r = 0; r < d; ++r) change(r, k) = c[r];
  }
  Mat change_inv = *inverse(change);
  auto coords = [&](const Mat& m) {
    auto c = space.coordinates(m);
    if (!c) throw std::logic_error("Kac-Paljutkin product leaves the algebra");
    Vec out(d);
    for (size_t r = 0; r < d; ++r)
      for (size_t k = 0; k < d; ++k)
        if (!change_inv(r, k).is_zero()) out[r] += change_inv(r, k) * (*c)[k];
    return out;
  };

  HopfData h;
  h.name = "KP";
  h.dim = d;
  h.mult.assign(d, std::vector<Vec>(d));
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b) h.mult[a][b] = coords(basis[a] * basis[b]);
  h.unit = coords(Mat::identity(n));
  h.star = Mat(d, d);
  h.antipode = Mat(d, d);
  for (size_t k = 0; k < d; ++k) {
    Vec s = coords(basis[k].adjoint());
    for (size_t r = 0; r < d; ++r) h.star(r, k) = s[r];
  }
  h.counit = Vec(d, one);

  // Delta on generators, extended multiplicatively in A (x) A.
  auto elem = [&](size_t a, size_t b, size_t c) { return 4 * a + 2 * b + c; };
  auto tensor_mul = [&](const Mat& p, const Mat& q) {
    Mat r(d, d);
    for (size_t a = 0; a < d; ++a)
      for (size_t b = 0; b < d; ++b) {
        if (p(a, b).is_zero()) continue;
        for (size_t c = 0; c < d; ++c)
          for (size_t e = 0; e < d; ++e) {
            if (q(c, e).is_zero()) continue;
            CycloScalar f = p(a, b) * q(c, e);
            const Vec& u = h.mult[a][c];
            const Vec& v = h.mult[b][e];
            for (size_t s = 0; s < d; ++s)
              for (size_t t = 0; t < d; ++t)
                if (!u[s].is_zero() && !v[t].is_zero()) r(s, t) += f * u[s] * v[t];
          }
      }
    return r;
  };
  auto pure = [&](size_t a, size_t b) {
    Mat m(d, d);
    m(a, b) = one;
    return m;
  };
  size_t e0 = elem(0, 0, 0), ex = elem(1, 0, 0), ey = elem(0, 1, 0), ez = elem(0, 0, 1);
  Mat dx = pure(ex, ex), dy = pure(ey, ey);
  CycloScalar half(Rational(1, 2));
  Mat pre = pure(e0, e0) + pure(e0, ex) + pure(ey, e0) - pure(ey, ex);
  pre *= half;
  Mat dz = tensor_mul(pre, pure(ez, ez));
  h.comult.assign(d, Mat(d, d));
  for (size_t a = 0; a < 2; ++a)
    for (size_t b = 0; b < 2; ++b)
      for (size_t c = 0; c < 2; ++c) {
        Mat m = pure(e0, e0);
        if (a) m = tensor_mul(m, dx);
        if (b) m = tensor_mul(m, dy);
        if (c) m = tensor_mul(m, dz);
        h.comult[elem(a, b, c)] = m;
      }
  // S is the anti-automorphism fixing x, y, z.
  for (size_t a = 0; a < 2; ++a)
    for (size_t b = 0; b < 2; ++b)
      for (size_t c = 0; c < 2; ++c) {
        Vec s = coords(power(z, c) * power(y, b) * power(x, a));
        for (size_t r = 0; r < d; ++r) h.antipode(r, elem(a, b, c)) = s[r];
      }
  // Haar state: normalized trace of the left regular representation.
  h.haar = Vec(d);
  for (size_t k = 0; k < d; ++k) {
    CycloScalar tr;
    for (size_t j = 0; j < d; ++j) tr += h.mult[k][j][j];
    h.haar[k] = tr * CycloScalar(Rational(1, int64_t(d)));
  }
  return h;
}

}  // namespace qcenter
