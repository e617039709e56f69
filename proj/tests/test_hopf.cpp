#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qcenter/center.hpp"
#include "qcenter/hopf.hpp"

using namespace qcenter;

namespace {

std::vector<GroupTable> groups() {
  return {cyclic_group(2), cyclic_group(4), klein_four_group(), symmetric_group3(), dihedral_group4(), quaternion_group()};
}

bool failed(const ValidationReport& v, const std::string& axiom) {
  for (const auto& c : v.checks)
    if (c.name == axiom) return !c.ok;
  return false;
}

}  // namespace

TEST_CASE("classical pairs validate") {
  for (const auto& g : groups()) {
    auto [f, c] = build_classical(g);
    CAPTURE(g.name);
    CHECK(validate_hopf(f).ok());
    CHECK(validate_hopf(c).ok());
    CHECK(f.dim == g.order());
    CHECK(f.is_commutative());
    CHECK(c.is_cocommutative());
    bool abelian = oracle::conjugacy_classes(g) == g.order();
    CHECK(f.is_cocommutative() == abelian);
    CHECK(c.is_commutative() == abelian);
  }
}

TEST_CASE("non-group tables are rejected") {
  GroupTable g = cyclic_group(3);
  g.mult[1][1] = 1;
  CHECK_THROWS_AS(validate_group(g), std::invalid_argument);
}

TEST_CASE("corrupted structure constants name the failing axiom") {
  auto h = function_algebra(cyclic_group(2));
  SUBCASE("counit") {
    std::swap(h.counit[0], h.counit[1]);
    auto v = validate_hopf(h);
    CHECK_FALSE(v.ok());
    CHECK(v.first_failure() == "counit");
  }
  SUBCASE("haar") {
    h.haar[0] = CycloScalar(1);
    h.haar[1] = CycloScalar(0);
    auto v = validate_hopf(h);
    CHECK(failed(v, "haar invariance"));
  }
  SUBCASE("star") {
    h.star(0, 0) = CycloScalar(2);
    CHECK_FALSE(validate_hopf(h).ok());
  }
}

TEST_CASE("the solvers recover counit, antipode and haar") {
  for (auto h : {function_algebra(symmetric_group3()), group_algebra(quaternion_group()), build_kac_paljutkin()}) {
    CAPTURE(h.name);
    CHECK(solve_counit(h) == std::optional<Vec>(h.counit));
    CHECK(solve_antipode(h) == std::optional<Mat>(h.antipode));
    CHECK(solve_haar(h) == std::optional<Vec>(h.haar));
    CHECK(validate_hopf(dual_hopf_data(h)).ok());
  }
}

TEST_CASE("W on F(Z2) is the permutation (s,t) -> (s+t,t)") {
  auto r = realize(function_algebra(cyclic_group(2)));
  REQUIRE(r.d == 2);
  Mat w(4, 4);
  for (size_t s = 0; s < 2; ++s)
    for (size_t t = 0; t < 2; ++t) w(((s + t) % 2) * 2 + t, s * 2 + t) = CycloScalar(1);
  // Lambda(delta_g) is a positive multiple of the g-th basis vector, so W is a permutation either way.
  CHECK(r.W == w);
  CHECK(pentagon_holds(r.W, 2));
}

TEST_CASE("realizations implement the coproduct") {
  for (const auto& g : groups()) {
    for (auto h : {function_algebra(g), group_algebra(g)}) {
      CAPTURE(h.name);
      auto r = realize(h);
      CHECK(r.W * r.W.adjoint() == Mat::identity(r.d * r.d));
      CHECK(pentagon_holds(r.W, r.d));
      Mat id = Mat::identity(r.d);
      for (size_t i = 0; i < h.dim; ++i) {
        Mat lhs = r.W * kron(r.pi[i], id) * r.W.adjoint();
        Mat rhs(r.d * r.d, r.d * r.d);
        for (size_t j = 0; j < h.dim; ++j)
          for (size_t k = 0; k < h.dim; ++k)
            if (!h.comult[i](j, k).is_zero()) rhs = rhs + h.comult[i](j, k) * kron(r.pi[j], r.pi[k]);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("the dual of F(G) is the right regular representation") {
  for (const auto& g : groups()) {
    CAPTURE(g.name);
    auto r = realize(function_algebra(g));
    std::vector<Mat> rho;
    for (size_t t = 0; t < g.order(); ++t) rho.push_back(oracle::rho(g, t));
    CHECK(r.dual_space() == generate_algebra(g.order(), rho));
    for (size_t t = 0; t < g.order(); ++t) CHECK(dual_coproduct(r, rho[t]) == kron(rho[t], rho[t]));
  }
}

TEST_CASE("C[S3] has a commutative dual") {
  auto r = realize(group_algebra(symmetric_group3()));
  CHECK(is_abelian(r.dual_space()));
  CHECK_FALSE(is_abelian(r.a_space()));
}

TEST_CASE("irreducible corepresentations of F(G) are the irreducible representations of G") {
  for (const auto& g : groups()) {
    CAPTURE(g.name);
    auto cs = irreducible_coreps(realize(function_algebra(g)));
    CHECK(cs.size() == oracle::conjugacy_classes(g));
    size_t squares = 0;
    for (const auto& c : cs) squares += c.n * c.n;
    CHECK(squares == g.order());
    CHECK(cs.front().n == 1);
  }
}

TEST_CASE("Kac-Paljutkin") {
  auto h = build_kac_paljutkin();
  CHECK(h.dim == 8);
  CHECK(validate_hopf(h).ok());
  CHECK_FALSE(h.is_commutative());
  CHECK_FALSE(h.is_cocommutative());
  auto r = realize(h);
  CHECK(compute_hatZ(r).dim() == 5);
  std::vector<size_t> sizes;
  for (const auto& c : irreducible_coreps(r)) sizes.push_back(c.n);
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 1, 1, 1, 2});
  // Self-dual up to the invariants: the dual has the same center dimension and corepresentation sizes.
  auto rd = realize(dual_hopf_data(h));
  CHECK(compute_hatZ(rd).dim() == 5);
  CHECK(center_of_algebra(r.dual_space()).dim() == center_of_algebra(r.a_space()).dim());
}

TEST_CASE("bicharacters and dual inclusions of restriction morphisms") {
  auto g = symmetric_group3();
  auto r = realize(function_algebra(g));
  std::vector<size_t> h{0, 4, 5};
  auto l = function_algebra(subgroup_table(g, h, "Z3"));
  auto rl = realize(l);
  auto f = restriction_morphism(g, h);
  CHECK(validate_morphism(*r.hopf, l, f).ok());
  auto inc = dual_inclusion(r, rl, f);
  CHECK(is_bicharacter(r, rl, inc.bicharacter));
  CHECK(inc.range.dim() == 3);
  // The range is spanned by rho_h for h in the subgroup.
  std::vector<Mat> rho;
  for (size_t t : h) rho.push_back(oracle::rho(g, t));
  CHECK(side_operators(r, AlgebraSide::in_dual, inc.range) == OperatorSubspace::span(6, rho));
  CHECK(is_bicharacter(r, r, r.W));
}
