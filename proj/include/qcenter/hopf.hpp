#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcenter/legs.hpp"
#include "qcenter/opalg.hpp"

namespace qcenter {

/// Finite-dimensional Hopf *-algebra with Haar state, by structure constants
/// in a basis e_0, ..., e_{d-1}.
struct HopfData {
  std::string name;
  size_t dim = 0;
  std::vector<std::vector<Vec>> mult;  // mult[i][j] = coords of e_i e_j
  Vec unit;
  std::vector<Mat> comult;  // comult[i](j, k) = coefficient of e_j (x) e_k in Delta(e_i)
  Vec counit;
  Mat antipode;  // column i = S(e_i)
  Mat star;      // column i = e_i^*; (sum a_i e_i)^* = sum conj(a_i) e_i^*
  Vec haar;

  Vec mul(const Vec& a, const Vec& b) const;
  Vec adjoint(const Vec& a) const;
  Mat coproduct(const Vec& a) const;
  Vec apply_antipode(const Vec& a) const;
  CycloScalar eval_counit(const Vec& a) const;
  CycloScalar eval_haar(const Vec& a) const;
  Vec basis_vector(size_t i) const;
  AlgebraTable algebra() const;
  bool is_commutative() const;
  bool is_cocommutative() const;
};

struct AxiomCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
  /// Name of the first failing axiom, empty when all pass.
  std::string first_failure() const;
};

/// Checks every axiom exactly. Throws std::invalid_argument on shape mismatch.
ValidationReport validate_hopf(const HopfData& h);

/// The dual Hopf *-algebra on the dual basis of functionals.
HopfData dual_hopf_data(const HopfData& h);
/// Unique normalized two-sided invariant functional, nullopt if none or not unique.
std::optional<Vec> solve_haar(const HopfData& h);
/// Counit and antipode determined by the remaining structure.
std::optional<Vec> solve_counit(const HopfData& h);
std::optional<Mat> solve_antipode(const HopfData& h);

/// One of the two von Neumann algebras of a realization in coordinates:
/// Delta(b_k) = sum_ij coprod[k](i, j) b_i (x) b_j and the unitary antipode.
struct Side {
  AlgebraTable alg;
  std::vector<Mat> coprod;
  Mat antipode;  // column k = R(b_k), linear

  size_t dim() const { return alg.dim(); }
  /// Coefficient matrix of Delta(x) for x in coordinates.
  Mat coproduct(const Vec& x) const;
};

struct QGRealization {
  std::shared_ptr<const HopfData> hopf;
  size_t d = 0;
  Mat gns;       // columns: GNS basis vectors in Hopf coordinates (orthogonal, equal norms)
  Mat gns_inv;
  std::vector<Mat> pi;  // pi[i] = left multiplication by e_i
  Mat W;                // on H (x) H, W in dual (x) pi(A)
  Side a_side;          // pi(A)
  Side dual_side;       // dual algebra generated by slices of W
  Mat a_to_hopf;        // a_side coords -> Hopf coords
  Mat hopf_to_a;
  Mat J;     // antilinear: J xi = J * conj(xi), Lambda(a) -> Lambda(a^*)
  Mat J_hat; // antilinear: Lambda(a) -> Lambda(S(a)^*)

  Mat pi_of(const Vec& hopf_coords) const;
  /// Hopf coordinates of an operator in pi(A); nullopt if outside.
  std::optional<Vec> hopf_coords(const Mat& x) const;
  const OperatorSubspace& a_space() const { return a_side.alg.operator_space(); }
  const OperatorSubspace& dual_space() const { return dual_side.alg.operator_space(); }
};

/// Builds the realization and verifies unitarity, the pentagon equation and
/// Delta(x) = W(x (x) 1)W^*. Throws std::runtime_error on failure.
QGRealization realize(const HopfData& h);
QGRealization realize(std::shared_ptr<const HopfData> h);

/// Delta_hat(y) = sigma(W^*(1 (x) y)W); throws if y is outside the dual algebra.
Mat dual_coproduct(const QGRealization& r, const Mat& y);

/// Coefficients t with X = sum t(i, j) f_i (x) s_j for the echelon bases of the
/// two algebras; nullopt when X is outside first (x) second.
std::optional<Mat> tensor_coords(const Mat& x, const AlgebraTable& first, const AlgebraTable& second);
Mat tensor_element(const Mat& t, const AlgebraTable& first, const AlgebraTable& second);

bool pentagon_holds(const Mat& w, size_t d);

/// V in dual(r1) (x) pi(A of r2): unitary, legs in place, and
/// (Delta_hat_1 (x) id)V = V23 V13, (id (x) Delta_2)V = V12 V13.
bool is_bicharacter(const QGRealization& r1, const QGRealization& r2, const Mat& v);

struct Corep {
  size_t n = 0;
  std::vector<std::vector<Mat>> u;      // operators u_ab in pi(A)
  std::vector<std::vector<Vec>> coords; // a_side coordinates of u_ab
  Vec dual_projection;                  // minimal central projection in dual coordinates
};

/// Irreducible corepresentations read off W = sum e_ab (x) u_ab over the
/// matrix units of the dual algebra; trivial corepresentation first.
std::vector<Corep> irreducible_coreps(const QGRealization& r);

/// Surjective Hopf *-morphism rho: A_source -> A_target, matrix in Hopf coordinates.
struct HopfMorphism {
  std::string name;
  Mat matrix;  // d_target x d_source
};

ValidationReport validate_morphism(const HopfData& source, const HopfData& target, const HopfMorphism& f);
/// Identity morphism.
HopfMorphism identity_morphism(const HopfData& h);

/// The transported dual inclusion gamma: dual(target) -> dual(source) with
/// (gamma (x) id)W^target = (id (x) rho)W^source; matrix maps dual coordinates.
struct DualInclusion {
  Mat gamma;           // m_source x m_target
  Mat bicharacter;     // (id (x) rho) W^source on H_source (x) H_target
  Subspace range;      // in source dual coordinates
};
DualInclusion dual_inclusion(const QGRealization& source, const QGRealization& target, const HopfMorphism& f);

}  // namespace qcenter
