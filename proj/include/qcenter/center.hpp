#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcenter/hopf.hpp"

namespace qcenter {

enum class AlgebraSide { in_A, in_dual };

const Side& side_of(const QGRealization& r, AlgebraSide s);
AlgebraSide opposite(AlgebraSide s);
std::string to_string(AlgebraSide s);

/// Conversions between operator subspaces and side coordinates.
Subspace side_coords(const QGRealization& r, AlgebraSide s, const OperatorSubspace& n);
OperatorSubspace side_operators(const QGRealization& r, AlgebraSide s, const Subspace& n);

/// {y in domain : Delta(y) in left (x) right}, all in side coordinates.
Subspace coproduct_preimage(const Side& s, const Subspace& domain, const Subspace& left, const Subspace& right);
bool is_left_coideal(const Side& s, const Subspace& n);
/// Span of the slices (omega (x) id)Delta(x) over x in X.
Subspace slice_span(const Side& s, const Subspace& x);

OperatorSubspace compute_hatZ(const QGRealization& r);
/// {y : Delta_hat(y) in dual (x) hatZ}, verified to be a central Baaj-Vaes subalgebra.
OperatorSubspace compute_Lhat(const QGRealization& r);
/// Largest left coideal inside hatZ, by the decreasing iteration.
OperatorSubspace compute_Lhat_oracle(const QGRealization& r);
/// {y : Delta_hat(y) in hatZ (x) hatZ}.
OperatorSubspace compute_Lhat_zz(const QGRealization& r);

OperatorSubspace compute_inn(const QGRealization& r);
OperatorSubspace compute_inn_alt(const QGRealization& r);
OperatorSubspace compute_inn_from_coreps(const QGRealization& r);

/// Relative commutant of a left coideal inside the opposite algebra.
/// Throws std::invalid_argument when N is not a left coideal.
OperatorSubspace codual(const QGRealization& r, const OperatorSubspace& n, AlgebraSide side);

/// Left coideal *-subalgebras generated by slices of Delta at seeded random elements.
std::vector<std::pair<AlgebraSide, OperatorSubspace>> random_left_coideals(const QGRealization& r, size_t count,
                                                                           uint64_t seed);

struct CrossCheck {
  std::string name;
  bool ok = false;
};

struct CenterReport {
  std::string name;
  OperatorSubspace hatZ, Lhat, inn;
  size_t dim_A = 0, dim_Lhat = 0, dim_inn = 0;
  /// dim A = dim Lhat * dim inn, recorded per fixture and never asserted.
  bool dims_multiply = false;
  std::vector<CrossCheck> cross_checks;
  bool ok() const;
};

CenterReport compute_center_report(const QGRealization& r);

/// Both readings of centrality; throws std::logic_error if they disagree.
bool is_central_morphism(const QGRealization& source, const QGRealization& target, const HopfMorphism& f);

/// theta with rho_2 = theta rho_1 when ran(gamma_2) is inside ran(gamma_1), after
/// checking T23 V12 = V12 U13 T23; nullopt when the ranges are not nested.
std::optional<HopfMorphism> subgroup_factor(const QGRealization& g, const QGRealization& h1, const HopfMorphism& f1,
                                            const QGRealization& h2, const HopfMorphism& f2);

}  // namespace qcenter
