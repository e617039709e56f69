#pragma once

#include <vector>

#include "qcenter/center.hpp"

namespace qcenter {

struct CoidealFlags {
  bool left_coideal = false;
  bool right_coideal = false;
  bool invariant_subalgebra = false;
  /// Invariant *-subalgebra stable under the antipode (Kac case: trivial scaling group).
  bool baaj_vaes = false;
};

CoidealFlags classify_coideal(const QGRealization& r, const OperatorSubspace& n, AlgebraSide side);

/// X in P (x) Q, tested through all one-sided matrix-unit slices of X.
bool in_tensor(const Mat& x, size_t d, const OperatorSubspace& p, const OperatorSubspace& q);

/// Evaluates both normal-coideal conditions and throws std::logic_error if they differ.
bool is_normal_coideal(const QGRealization& r, const OperatorSubspace& l, AlgebraSide side);

enum class ActionSide { left, right };
/// alpha_R(x) = W(x (x) 1)W^*, alpha_L(x) = sigma(W^*(x (x) 1)W), checked to lie in
/// dual (x) inn, respectively inn (x) dual.
Mat inner_action(const QGRealization& r, const Mat& x, ActionSide side);

struct ActionReport {
  std::vector<CrossCheck> checks;
  bool ok() const;
};
ActionReport verify_action_axioms(const QGRealization& r);

/// Normality of the subgroup presented by rho: A_G -> A_H, by the normal-coideal test on
/// ran(gamma) and by alpha_L-invariance; throws std::logic_error if they disagree.
bool is_normal_subgroup(const QGRealization& g, const QGRealization& h, const HopfMorphism& f);

/// Trivial-corepresentation multiplicity in (id (x) rho)u is 0 or dim u for every irreducible u.
bool wang_normal(const QGRealization& k, const HopfData& l, const HopfMorphism& f);

struct PolQuotients {
  Subspace left_cosets;   // {a : (id (x) rho)Delta(a) = a (x) 1}, Hopf coordinates
  Subspace right_cosets;  // {a : (rho (x) id)Delta(a) = 1 (x) a}
  bool equal = false;
  bool left_stable = false;   // S maps it to itself
  bool right_stable = false;
  bool swapped_by_antipode = false;  // S(left) = right
};
PolQuotients pol_quotients(const HopfData& k, const HopfData& l, const HopfMorphism& f);

}  // namespace qcenter
