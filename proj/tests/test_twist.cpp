#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qcenter/battery.hpp"
#include "qcenter/center.hpp"
#include "qcenter/twist.hpp"

using namespace qcenter;

namespace {

/// Omega_23 (id (x) Delta_hat)(Omega) = Omega_12 (Delta_hat (x) id)(Omega), with the
/// coproducts applied as sigma_12 W_12^* Omega_23 W_12 sigma_12 and sigma_23 W_23^* Omega_13 W_23 sigma_23.
bool operator_cocycle_identity(const QGRealization& r, const Mat& omega) {
  std::array<size_t, 3> dims{r.d, r.d, r.d};
  SparseOp w12 = place(r.W, dims, 0, 1), w23 = place(r.W, dims, 1, 2);
  SparseOp o12 = place(omega, dims, 0, 1), o23 = place(omega, dims, 1, 2), o13 = place(omega, dims, 0, 2);
  SparseOp delta_id = flip(w12.adjoint() * o23 * w12, dims, 0, 1);
  SparseOp id_delta = flip(w23.adjoint() * o13 * w23, dims, 1, 2);
  return o23 * id_delta == o12 * delta_id;
}

bool same_coproduct(const Side& a, const Side& b) { return a.coprod == b.coprod; }

}  // namespace

TEST_CASE("shipped cocycles satisfy the cocycle identity by both routes") {
  auto rd = realize(function_algebra(dihedral_group4()));
  auto rq = realize(function_algebra(quaternion_group()));
  for (auto [r, c] : {std::pair{&rd, klein_cocycle_d4(rd)}, std::pair{&rq, cyclic_cocycle_q8(rq)}}) {
    CAPTURE(c.name);
    CHECK(validate_cocycle(*r, c));
    CHECK(operator_cocycle_identity(*r, c.omega));
    CHECK(c.omega * c.omega.adjoint() == Mat::identity(r->d * r->d));
  }
}

TEST_CASE("a unitary that is not a cocycle is rejected") {
  auto g = quaternion_group();
  auto r = realize(function_algebra(g));
  Mat omega = kron(oracle::rho(g, 1), Mat::identity(8));
  CHECK_FALSE(operator_cocycle_identity(r, omega));
  CHECK_FALSE(validate_cocycle(r, Cocycle{"bad", omega}));
  CHECK_THROWS_AS(twist(r, Cocycle{"bad", omega}), std::invalid_argument);
}

TEST_CASE("the trivial cocycle changes nothing") {
  auto r = realize(function_algebra(symmetric_group3()));
  Cocycle one{"one", Mat::identity(36)};
  CHECK(validate_cocycle(r, one));
  auto t = twist(r, one);
  CHECK(same_coproduct(t.gamma_side, r.dual_side));
  auto rep = verify_center_invariance(r, one);
  CHECK(rep.ok());
}

TEST_CASE("C[D4] and C[Q8] twists deform the coproduct and keep Lhat") {
  auto rd = realize(function_algebra(dihedral_group4()));
  auto rq = realize(function_algebra(quaternion_group()));
  for (auto [r, c] : {std::pair{&rd, klein_cocycle_d4(rd)}, std::pair{&rq, cyclic_cocycle_q8(rq)}}) {
    CAPTURE(c.name);
    auto t = twist(*r, c);
    CHECK_FALSE(same_coproduct(t.gamma_side, r->dual_side));
    CHECK(validate_hopf(t.twisted_dual).ok());
    CHECK(realization_structurally_valid(t.twisted));
    auto rep = verify_center_invariance(*r, c);
    CHECK(rep.ok());
    CHECK(rep.lhat_before == rep.lhat_after);
    CHECK(rep.lhat_before.dim() == 2);
    CHECK(compute_center_report(t.twisted).ok());
    CHECK(compute_Lhat(t.twisted).dim() == 2);
  }
}

TEST_CASE("bicharacter cocycles on a cyclic subgroup") {
  auto g = cyclic_group(4);
  auto r = realize(function_algebra(g));
  // omega(a, b) = i^{ab} on Z4 itself.
  auto c = bicharacter_cocycle(
      r, g, {1}, {4},
      [](const std::vector<size_t>& a, const std::vector<size_t>& b) { return CycloScalar::zeta(4, int64_t(a[0] * b[0])); },
      "z4");
  CHECK(validate_cocycle(r, c));
  CHECK(operator_cocycle_identity(r, c.omega));
  // Abelian and bicharacter: the twist is trivial on the coproduct.
  CHECK(same_coproduct(twist(r, c).gamma_side, r.dual_side));
}
