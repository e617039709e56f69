#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qcenter/builders.hpp"
#include "qcenter/center.hpp"

namespace qcenter {

/// Unitary Omega on H (x) H with both legs in the dual algebra.
struct Cocycle {
  std::string name;
  Mat omega;
};

/// Omega_23 (id (x) Delta)(Omega) = Omega_12 (Delta (x) id)(Omega) in coordinates,
/// for Omega = sum t(i, j) b_i (x) b_j over the side's algebra.
bool cocycle_identity(const Side& s, const Mat& t);
/// Unitarity, legs in dual (x) dual, and the cocycle identity for Delta_hat.
bool validate_cocycle(const QGRealization& r, const Cocycle& c);

/// Same algebra with Gamma(x) = Omega Delta(x) Omega^*.
Side twisted_side(const Side& s, const Mat& omega);

struct TwistResult {
  HopfData twisted_dual;     // the dual quantum group with coproduct Gamma, on the dual basis of r
  Side gamma_side;           // r.dual_side algebra with Gamma
  QGRealization twisted;     // realization of the twisted quantum group
  Mat identification;        // twisted_dual coordinates -> twisted.dual_side coordinates
};

/// Throws std::invalid_argument for an invalid cocycle and std::runtime_error when the
/// reconstructed Hopf data fails validation.
TwistResult twist(const QGRealization& r, const Cocycle& c);

struct TwistReport {
  std::string name;
  Subspace lhat_before, lhat_after;  // dual coordinates of r
  std::vector<CrossCheck> checks;
  bool ok() const;
};
TwistReport verify_center_invariance(const QGRealization& r, const Cocycle& c);

/// Omega = sum_{a, b} omega(a, b) p_a (x) p_b over the minimal projections p_a of C[K]
/// inside the dual of F(G), for the abelian subgroup K = <gens> with the given orders.
using Bicharacter = std::function<CycloScalar(const std::vector<size_t>&, const std::vector<size_t>&)>;
Cocycle bicharacter_cocycle(const QGRealization& f_of_g, const GroupTable& g, const std::vector<size_t>& gens,
                            const std::vector<size_t>& orders, const Bicharacter& omega, std::string name);

/// The shipped fixtures: Klein four subgroup of D4 with (-1)^{a_1 b_2}, and <i> in Q8 with
/// zeta_4^{ab} times a coboundary.
Cocycle klein_cocycle_d4(const QGRealization& f_of_d4);
Cocycle cyclic_cocycle_q8(const QGRealization& f_of_q8);

}  // namespace qcenter
