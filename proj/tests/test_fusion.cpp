#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "qcenter/center.hpp"
#include "qcenter/fusion.hpp"

using namespace qcenter;

namespace {

using Row = std::vector<mpz_class>;

mpz_class gcd_all(const std::vector<mpz_class>& xs) {
  mpz_class g = 0;
  for (const auto& x : xs) g = gcd(g, x);
  return g;
}

mpz_class det2(const std::vector<Row>& m, size_t r0, size_t r1, size_t c0, size_t c1) {
  return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
}

/// Determinantal divisors of a 3 x 3 integer matrix: gcds of the k x k minors.
std::vector<mpz_class> determinantal_divisors(const std::vector<Row>& m) {
  std::vector<mpz_class> e, minors;
  for (const auto& r : m)
    for (const auto& x : r) e.push_back(x);
  for (size_t r0 = 0; r0 < 3; ++r0)
    for (size_t r1 = r0 + 1; r1 < 3; ++r1)
      for (size_t c0 = 0; c0 < 3; ++c0)
        for (size_t c1 = c0 + 1; c1 < 3; ++c1) minors.push_back(det2(m, r0, r1, c0, c1));
  mpz_class det = m[0][0] * det2(m, 1, 2, 1, 2) - m[0][1] * det2(m, 1, 2, 0, 2) + m[0][2] * det2(m, 1, 2, 0, 1);
  return {gcd_all(e), gcd_all(minors), abs(det)};
}

std::vector<std::string> zero_labels(const FusionRing& f) { return degree_zero_subring(f, chain_group(f)).labels; }

}  // namespace

TEST_CASE("Smith normal form matches the determinantal divisors") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Row> m(3, Row(3));
    for (auto& r : m)
      for (auto& x : r) x = int(rng() % 13) - 6;
    auto dd = determinantal_divisors(m);
    auto p = smith_normal_form(3, m);
    REQUIRE(p.invariant_factors.size() == 3);
    mpz_class prod = 1;
    for (size_t k = 0; k < 3; ++k) {
      prod *= p.invariant_factors[k];
      CHECK(prod == dd[k]);
    }
  }
}

TEST_CASE("abelian group presentations print canonically") {
  CHECK(smith_normal_form(1, {{mpz_class(2)}}).str() == "Z/2");
  CHECK(smith_normal_form(2, {{mpz_class(2), mpz_class(0)}, {mpz_class(0), mpz_class(2)}}).str() == "Z/2 x Z/2");
  CHECK(smith_normal_form(2, {{mpz_class(2), mpz_class(0)}, {mpz_class(0), mpz_class(3)}}).str() == "Z/6");
  CHECK(smith_normal_form(1, {}).str() == "Z");
  CHECK(smith_normal_form(1, {{mpz_class(1)}}).str() == "trivial");
  CHECK_FALSE(smith_normal_form(1, {}).order().has_value());
}

TEST_CASE("SU(2): chain group Z/2, integer spins in degree zero") {
  for (size_t top : {2, 3, 4, 6}) {
    CAPTURE(top);
    auto f = su2_fusion(top);
    auto ch = chain_group(f);
    CHECK(ch.str() == "Z/2");
    CHECK(ch.degree_str(1) == "1");
    std::vector<std::string> even;
    for (size_t j = 0; j <= top; j += 2) even.push_back("V" + std::to_string(j));
    CHECK(zero_labels(f) == even);
  }
  auto f = su2_fusion(4);
  auto ch = chain_group(f);
  std::vector<std::string> sigs;
  for (const auto& s : projective_word_signatures(f, ch, 1, 2)) sigs.push_back(signature_str(s));
  CHECK(sigs == std::vector<std::string>{"(1,1)", "(1,*)", "(*,1)", "(*,*)"});
}

TEST_CASE("Rep S3 and Rep Z_n") {
  auto s3 = chain_group(rep_s3_fusion());
  CHECK(s3.str() == "trivial");
  CHECK(zero_labels(rep_s3_fusion()).size() == 3);
  for (size_t n = 1; n <= 9; ++n) {
    CAPTURE(n);
    auto f = cyclic_fusion(n);
    auto ch = chain_group(f);
    CHECK(ch.order() == std::optional<mpz_class>(n));
    CHECK(ch.str() == (n == 1 ? std::string("trivial") : "Z/" + std::to_string(n)));
    CHECK(zero_labels(f) == std::vector<std::string>{"c0"});
  }
}

TEST_CASE("fusion rings validate their invariants") {
  auto f = rep_s3_fusion();
  f.dims[2] = 3;
  CHECK_THROWS_AS(f.validate(), std::invalid_argument);
  auto g = cyclic_fusion(3);
  g.dual[1] = 1;
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}

TEST_CASE("corepresentation fusion of F(G) is Rep G; its chain group has order |Z(G)|") {
  for (const auto& g : {cyclic_group(4), klein_four_group(), symmetric_group3(), dihedral_group4(), quaternion_group()}) {
    CAPTURE(g.name);
    auto r = realize(function_algebra(g));
    auto f = fusion_from_realization(r);
    CHECK(f.closed());
    CHECK(f.size() == oracle::conjugacy_classes(g));
    auto ch = chain_group(f);
    CHECK(ch.order() == std::optional<mpz_class>(oracle::center(g).size()));
    CHECK(ch.order() == std::optional<mpz_class>(compute_Lhat(r).dim()));
  }
}

TEST_CASE("C[G]: corepresentations are the group elements") {
  for (const auto& g : {cyclic_group(4), symmetric_group3(), quaternion_group()}) {
    CAPTURE(g.name);
    auto f = fusion_from_realization(realize(group_algebra(g)));
    CHECK(f.size() == g.order());
    auto ch = chain_group(f);
    CHECK(ch.order() == std::optional<mpz_class>(g.order()));
    bool abelian = oracle::center(g).size() == g.order();
    CHECK(ch.commutative == abelian);
    if (!abelian) CHECK(ch.str() == "nonabelian group of order " + std::to_string(g.order()));
  }
}

TEST_CASE("Kac-Paljutkin chain group") {
  auto r = realize(build_kac_paljutkin());
  auto f = fusion_from_realization(r);
  auto ch = chain_group(f);
  CHECK(ch.str() == "Z/2");
  CHECK(ch.order() == std::optional<mpz_class>(compute_Lhat(r).dim()));
  // The four characters have degree zero; the 2-dimensional corepresentation does not.
  auto zero = degree_zero_subring(f, ch);
  CHECK(zero.size() == 4);
  for (size_t i = 0; i < f.size(); ++i) CHECK(ch.degree_is_zero(i) == (f.dims[i] == 1));
}
