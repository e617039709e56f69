#include "qcenter/fusion.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qcenter {

bool FusionRing::closed() const { return rules.size() == size() * size(); }

size_t FusionRing::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::invalid_argument("unknown fusion label '" + label + "'");
  return size_t(it - labels.begin());
}

void FusionRing::validate() const {
  size_t n = size();
  auto fail = [&](const std::string& what) { throw std::invalid_argument("fusion ring " + name + ": " + what); };
  if (n == 0) fail("no labels");
  if (dims.size() != n || dual.size() != n) fail("label data has inconsistent length");
  if (unit >= n) fail("unit label out of range");
  for (size_t i = 0; i < n; ++i) {
    if (dual[i] >= n || dual[dual[i]] != i) fail("dual map is not an involution");
    if (dims[i] <= 0) fail("dimension of " + labels[i] + " is not positive");
  }
  if (dual[unit] != unit) fail("unit is not self-dual");
  for (const auto& [ij, row] : rules) {
    auto [i, j] = ij;
    if (i >= n || j >= n || row.size() != n) fail("rule has the wrong shape");
    int64_t total = 0;
    for (size_t k = 0; k < n; ++k) total += int64_t(row[k]) * dims[k];
    if (total != dims[i] * dims[j])
      fail("dimensions do not add up in " + labels[i] + " (x) " + labels[j]);
    if (i == unit || j == unit) {
      size_t other = i == unit ? j : i;
      for (size_t k = 0; k < n; ++k)
        if (row[k] != (k == other ? 1u : 0u)) fail("unit law fails for " + labels[other]);
    }
    if (j == dual[i] && row[unit] < 1) fail(labels[i] + " (x) dual does not contain the unit");
  }
}

// ---------------------------------------------------------------- Smith normal form

std::vector<mpz_class> AbelianGroupPresentation::cyclic_factors() const {
  std::vector<mpz_class> out;
  for (const auto& d : invariant_factors)
    if (d != 1) out.push_back(d);
  std::stable_partition(out.begin(), out.end(), [](const mpz_class& d) { return d != 0; });
  return out;
}

std::optional<mpz_class> AbelianGroupPresentation::order() const {
  mpz_class n = 1;
  for (const auto& d : invariant_factors) {
    if (d == 0) return std::nullopt;
    n *= d;
  }
  return n;
}

std::string AbelianGroupPresentation::str() const {
  auto f = cyclic_factors();
  if (f.empty()) return "trivial";
  std::string s;
  for (const auto& d : f) {
    if (!s.empty()) s += " x ";
    s += d == 0 ? "Z" : "Z/" + d.get_str();
  }
  return s;
}

AbelianGroupPresentation smith_normal_form(size_t g, std::vector<std::vector<mpz_class>> a,
                                           std::vector<std::vector<mpz_class>>* column_transform) {
  AbelianGroupPresentation out;
  out.generators = g;
  out.relations = a;
  size_t r = a.size();
  std::vector<std::vector<mpz_class>> v(g, std::vector<mpz_class>(g, 0));
  for (size_t i = 0; i < g; ++i) v[i][i] = 1;
  auto col_op = [&](size_t dst, size_t src, const mpz_class& q) {  // col dst -= q col src
    for (size_t i = 0; i < r; ++i) a[i][dst] -= q * a[i][src];
    for (size_t i = 0; i < g; ++i) v[i][dst] -= q * v[i][src];
  };
  auto col_swap = [&](size_t x, size_t y) {
    for (size_t i = 0; i < r; ++i) std::swap(a[i][x], a[i][y]);
    for (size_t i = 0; i < g; ++i) std::swap(v[i][x], v[i][y]);
  };
  size_t t = 0;
  for (; t < std::min(r, g); ++t) {
    while (true) {
      // Smallest nonzero entry of the remaining block goes to (t, t).
      size_t bi = r, bj = g;
      for (size_t i = t; i < r; ++i)
        for (size_t j = t; j < g; ++j)
          if (a[i][j] != 0 && (bi == r || abs(a[i][j]) < abs(a[bi][bj]))) bi = i, bj = j;
      if (bi == r) break;
      std::swap(a[t], a[bi]);
      col_swap(t, bj);
      bool clean = true;
      for (size_t i = t + 1; i < r; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q = a[i][t] / a[t][t];
        for (size_t j = t; j < g; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < g; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q = a[t][j] / a[t][t];
        col_op(j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      size_t bad = r;
      for (size_t i = t + 1; i < r && bad == r; ++i)
        for (size_t j = t + 1; j < g; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == r) break;
      for (size_t j = t; j < g; ++j) a[t][j] += a[bad][j];
    }
    if (t >= r || a[t][t] == 0) break;
    if (a[t][t] < 0) a[t][t] = -a[t][t];
  }
  for (size_t j = 0; j < g; ++j) out.invariant_factors.push_back(j < std::min(r, g) ? a[j][j] : mpz_class(0));
  if (column_transform) *column_transform = std::move(v);
  return out;
}

// ---------------------------------------------------------------- chain group

namespace {

std::vector<std::vector<mpz_class>> degree_coordinates(const AbelianGroupPresentation& p,
                                                       const std::vector<std::vector<mpz_class>>& v,
                                                       size_t count) {
  // Generator i maps to row i of V, read modulo the invariant factors.
  std::vector<size_t> keep;
  for (size_t j = 0; j < p.invariant_factors.size(); ++j)
    if (p.invariant_factors[j] != 1) keep.push_back(j);
  std::stable_partition(keep.begin(), keep.end(), [&](size_t j) { return p.invariant_factors[j] != 0; });
  std::vector<std::vector<mpz_class>> out(count);
  for (size_t i = 0; i < count; ++i)
    for (size_t j : keep) {
      mpz_class x = v[i][j];
      const mpz_class& d = p.invariant_factors[j];
      if (d != 0) {
        x %= d;
        if (x < 0) x += d;
      }
      out[i].push_back(x);
    }
  return out;
}

std::vector<std::vector<mpz_class>> label_relations(const FusionRing& f) {
  size_t n = f.size();
  std::vector<std::vector<mpz_class>> rel;
  std::vector<mpz_class> u(n, 0);
  u[f.unit] = 1;
  rel.push_back(u);
  for (const auto& [ij, row] : f.rules)
    for (size_t k = 0; k < n; ++k) {
      if (row[k] == 0) continue;
      std::vector<mpz_class> x(n, 0);
      x[ij.first] += 1;
      x[ij.second] += 1;
      x[k] -= 1;
      rel.push_back(std::move(x));
    }
  return rel;
}

size_t find_root(std::vector<size_t>& parent, size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::optional<mpz_class> ChainGroup::order() const {
  if (universal) return mpz_class(class_table.size());
  return abelian.order();
}

std::string ChainGroup::str() const {
  if (universal && !commutative) return "nonabelian group of order " + std::to_string(class_table.size());
  return abelian.str();
}

std::string ChainGroup::degree_str(size_t label) const {
  if (universal && !commutative) return "class " + std::to_string(label_class[label]);
  const auto& d = degrees[label];
  if (d.size() == 1) return d[0].get_str();
  std::string s = "(";
  for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + d[i].get_str();
  return s + ")";
}

bool ChainGroup::degree_is_zero(size_t label) const {
  if (universal) return label_class[label] == 0;
  for (const auto& x : degrees[label])
    if (x != 0) return false;
  return true;
}

ChainGroup chain_group(const FusionRing& f) {
  f.validate();
  size_t n = f.size();
  ChainGroup ch;
  std::vector<std::vector<mpz_class>> v;
  ch.abelian = smith_normal_form(n, label_relations(f), &v);
  ch.degrees = degree_coordinates(ch.abelian, v, n);
  if (!f.closed()) return ch;

  // Adjoint subring: closure of the constituents of X (x) dual(X).
  auto constituents = [&](size_t i, size_t j) {
    std::vector<size_t> out;
    const auto& row = f.rules.at({i, j});
    for (size_t k = 0; k < n; ++k)
      if (row[k]) out.push_back(k);
    return out;
  };
  std::vector<bool> adj(n, false);
  for (size_t i = 0; i < n; ++i)
    for (size_t k : constituents(i, f.dual[i])) adj[k] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        if (adj[a] && adj[b])
          for (size_t k : constituents(a, b))
            if (!adj[k]) adj[k] = grew = true;
  }
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (size_t j = 0; j < n; ++j)
    for (size_t z = 0; z < n; ++z)
      if (adj[z])
        for (size_t i : constituents(j, z)) parent[find_root(parent, i)] = find_root(parent, j);
  std::vector<size_t> rep_of;
  ch.label_class.assign(n, 0);
  // Classes numbered by first appearance, the unit class first.
  std::vector<size_t> order{f.unit};
  for (size_t i = 0; i < n; ++i)
    if (i != f.unit) order.push_back(i);
  std::map<size_t, size_t> class_id;
  for (size_t i : order) {
    size_t root = find_root(parent, i);
    if (!class_id.count(root)) {
      class_id[root] = rep_of.size();
      rep_of.push_back(i);
    }
    ch.label_class[i] = class_id[root];
  }
  size_t c = rep_of.size();
  ch.class_table.assign(c, std::vector<size_t>(c));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      auto ks = constituents(a, b);
      size_t cls = ch.label_class[ks.at(0)];
      for (size_t k : ks)
        if (ch.label_class[k] != cls) throw std::logic_error("grading classes are not compatible with fusion");
      size_t& slot = ch.class_table[ch.label_class[a]][ch.label_class[b]];
      if (a == rep_of[ch.label_class[a]] && b == rep_of[ch.label_class[b]]) slot = cls;
      else if (slot != cls) throw std::logic_error("grading classes are not compatible with fusion");
    }
  ch.universal = true;
  for (size_t a = 0; a < c; ++a)
    for (size_t b = 0; b < c; ++b)
      if (ch.class_table[a][b] != ch.class_table[b][a]) ch.commutative = false;
  if (ch.commutative) {
    std::vector<std::vector<mpz_class>> rel;
    std::vector<mpz_class> u(c, 0);
    u[0] = 1;
    rel.push_back(u);
    for (size_t a = 0; a < c; ++a)
      for (size_t b = 0; b < c; ++b) {
        std::vector<mpz_class> x(c, 0);
        x[a] += 1;
        x[b] += 1;
        x[ch.class_table[a][b]] -= 1;
        rel.push_back(std::move(x));
      }
    std::vector<std::vector<mpz_class>> cv;
    auto grading = smith_normal_form(c, rel, &cv);
    if (grading.order() != ch.abelian.order())
      throw std::logic_error("abelian grading group differs from the presented chain group");
    auto class_deg = degree_coordinates(grading, cv, c);
    ch.abelian = grading;
    for (size_t i = 0; i < n; ++i) ch.degrees[i] = class_deg[ch.label_class[i]];
  }
  return ch;
}

FusionRing degree_zero_subring(const FusionRing& f, const ChainGroup& ch) {
  std::vector<size_t> keep;
  for (size_t i = 0; i < f.size(); ++i)
    if (ch.degree_is_zero(i)) keep.push_back(i);
  std::map<size_t, size_t> pos;
  for (size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = i;
  FusionRing out;
  out.name = f.name + " degree zero";
  out.presentation_complete = f.presentation_complete;
  for (size_t i : keep) {
    out.labels.push_back(f.labels[i]);
    out.dims.push_back(f.dims[i]);
    if (!pos.count(f.dual[i])) throw std::logic_error("degree-zero part is not closed under duals");
    out.dual.push_back(pos.at(f.dual[i]));
  }
  out.unit = pos.at(f.unit);
  for (const auto& [ij, row] : f.rules) {
    if (!pos.count(ij.first) || !pos.count(ij.second)) continue;
    std::vector<uint64_t> r(keep.size(), 0);
    for (size_t k = 0; k < f.size(); ++k) {
      if (!row[k]) continue;
      if (!pos.count(k)) throw std::logic_error("degree-zero part is not closed under fusion");
      r[pos.at(k)] = row[k];
    }
    out.rules[{pos.at(ij.first), pos.at(ij.second)}] = std::move(r);
  }
  out.validate();
  return out;
}

std::vector<std::vector<bool>> projective_word_signatures(const FusionRing& f, const ChainGroup& ch,
                                                          size_t fundamental, size_t max_len) {
  if (fundamental >= f.size()) throw std::invalid_argument("fundamental label out of range");
  std::vector<std::vector<bool>> out;
  for (size_t len = 1; len <= max_len; ++len)
    for (uint64_t mask = 0; mask < (uint64_t(1) << len); ++mask) {
      std::vector<bool> sig(len);
      for (size_t i = 0; i < len; ++i) sig[i] = (mask >> (len - 1 - i)) & 1;
      bool zero;
      if (ch.universal && !ch.commutative) {
        size_t g = ch.label_class[fundamental], ginv = ch.label_class[f.dual[fundamental]], x = 0;
        for (bool s : sig) x = ch.class_table[x][s ? ginv : g];
        zero = x == 0;
      } else {
        int64_t k = 0;
        for (bool s : sig) k += s ? -1 : 1;
        auto factors = ch.abelian.cyclic_factors();
        zero = true;
        for (size_t j = 0; j < factors.size(); ++j) {
          mpz_class x = ch.degrees[fundamental][j] * k;
          if (factors[j] != 0) x %= factors[j];
          if (x != 0) zero = false;
        }
      }
      if (zero) out.push_back(std::move(sig));
    }
  return out;
}

std::string signature_str(const std::vector<bool>& s) {
  std::string out = "(";
  for (size_t i = 0; i < s.size(); ++i) out += std::string(i ? "," : "") + (s[i] ? "*" : "1");
  return out + ")";
}

// ---------------------------------------------------------------- from a realization

namespace {

using CorepCoords = std::vector<std::vector<Vec>>;

// dim {T : X T = T Y} for corepresentation matrices with entries in A coordinates.
size_t intertwiner_dim(const AlgebraTable& a, const CorepCoords& x, const CorepCoords& y) {
  size_t n1 = x.size(), n2 = y.size(), m = a.dim();
  std::vector<Vec> rows;
  for (size_t i = 0; i < n1; ++i)
    for (size_t f = 0; f < n2; ++f)
      for (size_t p = 0; p < m; ++p) {
        Vec row(n1 * n2);
        for (size_t b = 0; b < n1; ++b) row[b * n2 + f] += x[i][b][p];
        for (size_t e = 0; e < n2; ++e) row[i * n2 + e] -= y[e][f][p];
        rows.push_back(std::move(row));
      }
  return kernel(rows, n1 * n2).dim();
}

}  // namespace

FusionRing fusion_from_realization(const QGRealization& r) {
  const auto& alg = r.a_side.alg;
  auto coreps = irreducible_coreps(r);
  size_t n = coreps.size();
  FusionRing f;
  f.name = "Rep(" + r.hopf->name + ")";
  f.presentation_complete = true;
  f.unit = 0;
  for (size_t i = 0; i < n; ++i) {
    f.labels.push_back("u" + std::to_string(i));
    f.dims.push_back(int64_t(coreps[i].n));
  }
  f.dual.assign(n, n);
  for (size_t i = 0; i < n; ++i) {
    const auto& u = coreps[i].coords;
    CorepCoords bar(u.size(), std::vector<Vec>(u.size()));
    for (size_t a = 0; a < u.size(); ++a)
      for (size_t b = 0; b < u.size(); ++b) bar[a][b] = alg.adjoint(u[a][b]);
    for (size_t k = 0; k < n; ++k)
      if (coreps[k].n == u.size() && intertwiner_dim(alg, bar, coreps[k].coords) == 1) f.dual[i] = k;
    if (f.dual[i] == n) throw std::logic_error("conjugate corepresentation not found");
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const auto& u = coreps[i].coords;
      const auto& v = coreps[j].coords;
      size_t ni = u.size(), nj = v.size();
      CorepCoords t(ni * nj, std::vector<Vec>(ni * nj));
      for (size_t a = 0; a < ni; ++a)
        for (size_t c = 0; c < nj; ++c)
          for (size_t b = 0; b < ni; ++b)
            for (size_t e = 0; e < nj; ++e) t[a * nj + c][b * nj + e] = alg.mul(u[a][b], v[c][e]);
      std::vector<uint64_t> row(n, 0);
      for (size_t k = 0; k < n; ++k) row[k] = intertwiner_dim(alg, t, coreps[k].coords);
      f.rules[{i, j}] = std::move(row);
    }
  f.validate();
  return f;
}

}  // namespace qcenter

namespace qcenter {

FusionRing su2_fusion(size_t top) {
  if (top < 2) throw std::invalid_argument("su2_fusion needs top >= 2");
  FusionRing f;
  f.name = "SU2";
  size_t n = top + 1;
  for (size_t j = 0; j < n; ++j) {
    f.labels.push_back("V" + std::to_string(j));
    f.dims.push_back(int64_t(j + 1));
    f.dual.push_back(j);
  }
  f.unit = 0;
  for (size_t j = 0; j < n; ++j) {
    std::vector<uint64_t> row(n, 0);
    row[j] = 1;
    f.rules[{0, j}] = row;
  }
  for (size_t j = 1; j + 1 < n; ++j) {
    std::vector<uint64_t> row(n, 0);
    row[j - 1] = 1;
    row[j + 1] = 1;
    f.rules[{1, j}] = row;
  }
  f.presentation_complete = true;
  f.validate();
  return f;
}

FusionRing rep_s3_fusion() {
  FusionRing f;
  f.name = "RepS3";
  f.labels = {"triv", "sign", "std"};
  f.dims = {1, 1, 2};
  f.dual = {0, 1, 2};
  f.unit = 0;
  auto set = [&](size_t a, size_t b, std::vector<uint64_t> row) {
    f.rules[{a, b}] = row;
    f.rules[{b, a}] = row;
  };
  for (size_t j = 0; j < 3; ++j) {
    std::vector<uint64_t> row(3, 0);
    row[j] = 1;
    set(0, j, row);
  }
  set(1, 1, {1, 0, 0});
  set(1, 2, {0, 0, 1});
  set(2, 2, {1, 1, 1});
  f.presentation_complete = true;
  f.validate();
  return f;
}

FusionRing cyclic_fusion(size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic_fusion needs n >= 1");
  FusionRing f;
  f.name = "RepZ" + std::to_string(n);
  for (size_t j = 0; j < n; ++j) {
    f.labels.push_back("c" + std::to_string(j));
    f.dims.push_back(1);
    f.dual.push_back((n - j) % n);
  }
  f.unit = 0;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      std::vector<uint64_t> row(n, 0);
      row[(a + b) % n] = 1;
      f.rules[{a, b}] = row;
    }
  f.presentation_complete = true;
  f.validate();
  return f;
}

}  // namespace qcenter
