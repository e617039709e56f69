// Brute-force classical oracles shared by the unit tests. They read only the
// multiplication table and never call into the library's group helpers.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "qcenter/builders.hpp"

namespace oracle {

using qcenter::CycloScalar;
using qcenter::GroupTable;
using qcenter::Mat;

inline size_t identity(const GroupTable& g) {
  for (size_t e = 0; e < g.labels.size(); ++e) {
    bool ok = true;
    for (size_t x = 0; x < g.labels.size(); ++x) ok = ok && g.mult[e][x] == x && g.mult[x][e] == x;
    if (ok) return e;
  }
  return g.labels.size();
}

inline size_t inverse(const GroupTable& g, size_t x) {
  size_t e = identity(g);
  for (size_t y = 0; y < g.labels.size(); ++y)
    if (g.mult[x][y] == e) return y;
  return g.labels.size();
}

inline std::vector<size_t> center(const GroupTable& g) {
  std::vector<size_t> z;
  size_t n = g.labels.size();
  for (size_t x = 0; x < n; ++x) {
    bool central = true;
    for (size_t y = 0; y < n; ++y) central = central && g.mult[x][y] == g.mult[y][x];
    if (central) z.push_back(x);
  }
  return z;
}

inline size_t conjugacy_classes(const GroupTable& g) {
  size_t n = g.labels.size();
  std::set<std::set<size_t>> classes;
  for (size_t x = 0; x < n; ++x) {
    std::set<size_t> c;
    for (size_t t = 0; t < n; ++t) c.insert(g.mult[g.mult[t][x]][inverse(g, t)]);
    classes.insert(c);
  }
  return classes.size();
}

inline bool is_subgroup(const GroupTable& g, const std::vector<size_t>& h) {
  std::set<size_t> s(h.begin(), h.end());
  if (!s.count(identity(g))) return false;
  for (size_t a : h)
    for (size_t b : h)
      if (!s.count(g.mult[a][inverse(g, b)])) return false;
  return true;
}

inline bool is_normal(const GroupTable& g, const std::vector<size_t>& h) {
  std::set<size_t> s(h.begin(), h.end());
  for (size_t t = 0; t < g.labels.size(); ++t)
    for (size_t x : h)
      if (!s.count(g.mult[g.mult[t][x]][inverse(g, t)])) return false;
  return true;
}

/// Every subgroup, by exhausting subsets; only for small groups.
inline std::vector<std::vector<size_t>> subgroups(const GroupTable& g) {
  size_t n = g.labels.size();
  std::vector<std::vector<size_t>> out;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<size_t> h;
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) h.push_back(i);
    if (is_subgroup(g, h)) out.push_back(h);
  }
  return out;
}

/// Right regular representation on the basis delta_h: rho_t delta_h = delta_{h t^-1}.
inline Mat rho(const GroupTable& g, size_t t) {
  size_t n = g.labels.size();
  Mat m(n, n);
  for (size_t h = 0; h < n; ++h) m(g.mult[h][inverse(g, t)], h) = CycloScalar(1);
  return m;
}

/// Left regular representation: lambda_t delta_h = delta_{t h}.
inline Mat lambda(const GroupTable& g, size_t t) {
  size_t n = g.labels.size();
  Mat m(n, n);
  for (size_t h = 0; h < n; ++h) m(g.mult[t][h], h) = CycloScalar(1);
  return m;
}

inline Mat delta(size_t n, size_t t) {
  Mat m(n, n);
  m(t, t) = CycloScalar(1);
  return m;
}

}  // namespace oracle
