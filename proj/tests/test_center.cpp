#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qcenter/center.hpp"

using namespace qcenter;

namespace {

std::vector<GroupTable> battery_groups() {
  return {cyclic_group(4), klein_four_group(), symmetric_group3(), dihedral_group4(), quaternion_group()};
}

/// Functions on G constant on the cosets gZ(G), as diagonal operators.
OperatorSubspace coset_functions(const GroupTable& g, const std::vector<size_t>& z) {
  size_t n = g.order();
  std::set<std::set<size_t>> cosets;
  for (size_t x = 0; x < n; ++x) {
    std::set<size_t> c;
    for (size_t y : z) c.insert(g.mult[x][y]);
    cosets.insert(c);
  }
  std::vector<Mat> ops;
  for (const auto& c : cosets) {
    Mat m(n, n);
    for (size_t x : c) m(x, x) = CycloScalar(1);
    ops.push_back(m);
  }
  return OperatorSubspace::span(n, ops);
}

OperatorSubspace literal_codual(const QGRealization& r, const OperatorSubspace& n, AlgebraSide side) {
  const auto& other = side == AlgebraSide::in_A ? r.dual_space() : r.a_space();
  return intersect(commutant(n), other);
}

}  // namespace

TEST_CASE("F(G): Lhat is spanned by the central rho_z and inn is F(G/Z)") {
  for (const auto& g : battery_groups()) {
    CAPTURE(g.name);
    auto r = realize(function_algebra(g));
    size_t n = g.order();
    for (size_t x = 0; x < n; ++x) REQUIRE(r.pi[x] == oracle::delta(n, x));
    auto z = oracle::center(g);
    std::vector<Mat> rho;
    for (size_t t : z) rho.push_back(oracle::rho(g, t));
    auto lhat = compute_Lhat(r);
    CHECK(lhat == OperatorSubspace::span(n, rho));
    CHECK(lhat.dim() == z.size());
    auto inn = compute_inn(r);
    CHECK(inn == coset_functions(g, z));
    CHECK(inn.dim() * z.size() == n);
  }
}

TEST_CASE("C[G]: Lhat is the whole dual; inn is the scalars exactly when G is abelian") {
  for (const auto& g : battery_groups()) {
    CAPTURE(g.name);
    auto r = realize(group_algebra(g));
    CHECK(compute_Lhat(r) == r.dual_space());
    bool abelian = oracle::center(g).size() == g.order();
    if (abelian) CHECK(compute_inn(r) == OperatorSubspace::scalars(r.d));
    // Inner automorphisms of a dual group are trivial: inn is always the scalars here.
    CHECK(compute_inn(r).dim() == 1);
  }
}

TEST_CASE("the three Lhat routes and the three inn routes agree") {
  std::vector<HopfData> hs{function_algebra(dihedral_group4()), group_algebra(quaternion_group()),
                           build_kac_paljutkin()};
  for (const auto& h : hs) {
    CAPTURE(h.name);
    auto r = realize(h);
    auto l = compute_Lhat(r);
    CHECK(l == compute_Lhat_oracle(r));
    CHECK(l == compute_Lhat_zz(r));
    CHECK(compute_hatZ(r).contains(l));
    CHECK(compute_hatZ(r) == center_of_algebra(r.dual_space()));
    auto inn = compute_inn(r);
    CHECK(inn == compute_inn_alt(r));
    CHECK(inn == compute_inn_from_coreps(r));
  }
}

TEST_CASE("Kac-Paljutkin center report") {
  auto rep = compute_center_report(realize(build_kac_paljutkin()));
  CHECK(rep.ok());
  CHECK(rep.dim_A == 8);
  CHECK(rep.dim_Lhat == 2);
  CHECK(rep.dim_inn == 4);
  CHECK(rep.hatZ.dim() == 5);
}

TEST_CASE("codual matches the literal commutant and is an involution") {
  for (auto h : {function_algebra(symmetric_group3()), group_algebra(symmetric_group3()), build_kac_paljutkin()}) {
    CAPTURE(h.name);
    auto r = realize(h);
    CHECK(codual(r, OperatorSubspace::scalars(r.d), AlgebraSide::in_A) == r.dual_space());
    CHECK(codual(r, r.a_space(), AlgebraSide::in_A) == OperatorSubspace::scalars(r.d));
    CHECK(codual(r, compute_inn(r), AlgebraSide::in_A) == compute_Lhat(r));
    CHECK(codual(r, compute_Lhat(r), AlgebraSide::in_dual) == compute_inn(r));
    auto cs = random_left_coideals(r, 10, 7);
    CHECK(cs.size() == 10);
    for (const auto& [side, n] : cs) {
      CHECK(is_left_coideal(side_of(r, side), side_coords(r, side, n)));
      auto nd = codual(r, n, side);
      CHECK(nd == literal_codual(r, n, side));
      CHECK(codual(r, nd, opposite(side)) == n);
    }
  }
}

TEST_CASE("codual requires a left coideal") {
  auto g = symmetric_group3();
  auto r = realize(function_algebra(g));
  // Functions on S3 separating only (12) from the rest: not invariant under translation.
  auto n = OperatorSubspace::span(6, {Mat::identity(6), oracle::delta(6, 1)});
  CHECK_THROWS_AS(codual(r, n, AlgebraSide::in_A), std::invalid_argument);
}

TEST_CASE("random coideals are reproducible from the seed") {
  auto r = realize(function_algebra(dihedral_group4()));
  auto a = random_left_coideals(r, 10, 42), b = random_left_coideals(r, 10, 42);
  CHECK(a == b);
}

TEST_CASE("central morphisms and subgroup factorization") {
  auto q8 = quaternion_group();
  auto rq = realize(function_algebra(q8));
  auto z = oracle::center(q8);
  auto rz = realize(function_algebra(subgroup_table(q8, z, "Z")));
  CHECK(is_central_morphism(rq, rz, restriction_morphism(q8, z)));
  auto s3 = symmetric_group3();
  auto rs = realize(function_algebra(s3));
  auto r3 = realize(function_algebra(subgroup_table(s3, {0, 4, 5}, "Z3")));
  CHECK_FALSE(is_central_morphism(rs, r3, restriction_morphism(s3, {0, 4, 5})));

  auto z4 = cyclic_group(4);
  auto r4 = realize(function_algebra(z4));
  auto r2 = realize(function_algebra(subgroup_table(z4, {0, 2}, "Z2")));
  auto theta = subgroup_factor(r4, r4, identity_morphism(*r4.hopf), r2, restriction_morphism(z4, {0, 2}));
  REQUIRE(theta.has_value());
  CHECK(theta->matrix == restriction_morphism(z4, {0, 2}).matrix);
  auto ra = realize(function_algebra(subgroup_table(s3, {0, 1}, "A")));
  CHECK_FALSE(subgroup_factor(rs, ra, restriction_morphism(s3, {0, 1}), r3, restriction_morphism(s3, {0, 4, 5}))
                  .has_value());
}
