#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcenter/hopf.hpp"

namespace qcenter {

/// Fusion ring given by rules X_i (x) X_j = sum_k N^k_ij X_k on the declared pairs.
struct FusionRing {
  std::string name;
  std::vector<std::string> labels;
  std::vector<int64_t> dims;
  size_t unit = 0;
  std::vector<size_t> dual;
  std::map<std::pair<size_t, size_t>, std::vector<uint64_t>> rules;
  /// The user attests that the declared rules present the whole ring.
  bool presentation_complete = false;

  size_t size() const { return labels.size(); }
  /// Every pair has a declared rule.
  bool closed() const;
  size_t index_of(const std::string& label) const;
  /// Throws std::invalid_argument on a broken invariant.
  void validate() const;
};

/// Finitely generated abelian group Z^g / (row span of the relations).
struct AbelianGroupPresentation {
  size_t generators = 0;
  std::vector<std::vector<mpz_class>> relations;
  /// Smith normal form diagonal, including 1s; 0 marks a free factor.
  std::vector<mpz_class> invariant_factors;

  /// Nontrivial cyclic factors d_1 | d_2 | ..., then zeros for free factors.
  std::vector<mpz_class> cyclic_factors() const;
  std::optional<mpz_class> order() const;
  std::string str() const;
};

struct ChainGroup {
  AbelianGroupPresentation abelian;
  /// Degree of each label as coordinates in the cyclic factors (reduced mod d).
  std::vector<std::vector<mpz_class>> degrees;
  /// For closed rings: the universal grading group on classes of labels.
  bool universal = false;
  std::vector<size_t> label_class;
  std::vector<std::vector<size_t>> class_table;
  bool commutative = true;

  std::optional<mpz_class> order() const;
  std::string str() const;
  std::string degree_str(size_t label) const;
  bool degree_is_zero(size_t label) const;
};

AbelianGroupPresentation smith_normal_form(size_t generators, std::vector<std::vector<mpz_class>> relations,
                                           std::vector<std::vector<mpz_class>>* column_transform = nullptr);

ChainGroup chain_group(const FusionRing& f);
FusionRing degree_zero_subring(const FusionRing& f, const ChainGroup& ch);

/// Sign patterns of length 1..max_len (true = adjoint) whose signed degree sum vanishes.
std::vector<std::vector<bool>> projective_word_signatures(const FusionRing& f, const ChainGroup& ch,
                                                          size_t fundamental, size_t max_len);
std::string signature_str(const std::vector<bool>& s);

/// Fusion rules of the irreducible corepresentations, from intertwiner dimensions.
FusionRing fusion_from_realization(const QGRealization& r);

}  // namespace qcenter

namespace qcenter {

/// Rep SU(2) truncated to V0..V_top, presented by V1 (x) Vj = V(j-1) + V(j+1).
FusionRing su2_fusion(size_t top = 4);
/// Full table of Rep S3 on labels triv, sign, std.
FusionRing rep_s3_fusion();
/// Full table of Rep Z_n on labels c0..c(n-1).
FusionRing cyclic_fusion(size_t n);

}  // namespace qcenter
