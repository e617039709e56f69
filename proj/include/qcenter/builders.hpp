#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcenter/hopf.hpp"

namespace qcenter {

/// Finite group by its multiplication table: mult[a][b] = index of a*b.
struct GroupTable {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<size_t>> mult;

  size_t order() const { return mult.size(); }
  size_t identity() const;
  size_t inverse(size_t g) const;
};

/// Throws std::invalid_argument unless the table is a group.
void validate_group(const GroupTable& g);

GroupTable cyclic_group(size_t n);
GroupTable klein_four_group();
GroupTable symmetric_group3();
GroupTable dihedral_group4();
GroupTable quaternion_group();
GroupTable trivial_group();

/// Brute-force classical data used as oracles.
std::vector<size_t> group_center(const GroupTable& g);
bool is_normal_subset(const GroupTable& g, const std::vector<size_t>& h);
std::vector<size_t> generated_subgroup(const GroupTable& g, const std::vector<size_t>& gens);
GroupTable subgroup_table(const GroupTable& g, const std::vector<size_t>& h, std::string name);
bool is_abelian(const GroupTable& g);

/// F(G) on the delta basis and C[G] on the group basis.
std::pair<HopfData, HopfData> build_classical(const GroupTable& g);
HopfData function_algebra(const GroupTable& g);
HopfData group_algebra(const GroupTable& g);

/// Restriction F(G) -> F(H) for a subgroup listed by element indices of G.
HopfMorphism restriction_morphism(const GroupTable& g, const std::vector<size_t>& h);

/// The 8-dimensional Kac-Paljutkin quantum group on the basis x^a y^b z^c.
HopfData build_kac_paljutkin();

}  // namespace qcenter
