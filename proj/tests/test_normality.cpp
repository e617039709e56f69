#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qcenter/battery.hpp"
#include "qcenter/center.hpp"
#include "qcenter/normality.hpp"

using namespace qcenter;

namespace {

struct Sub {
  QGRealization k;
  HopfData l;
  QGRealization rl;
  HopfMorphism f;
};

Sub make_sub(const GroupTable& g, const std::vector<size_t>& h) {
  auto l = function_algebra(subgroup_table(g, h, "H"));
  auto rl = realize(l);
  return {realize(function_algebra(g)), l, std::move(rl), restriction_morphism(g, h)};
}

}  // namespace

TEST_CASE("coideal taxonomy") {
  auto z4 = cyclic_group(4);
  auto r = realize(function_algebra(z4));
  auto flags = classify_coideal(r, OperatorSubspace::scalars(4), AlgebraSide::in_A);
  CHECK(flags.left_coideal);
  CHECK(flags.right_coideal);
  CHECK(flags.invariant_subalgebra);
  CHECK(flags.baaj_vaes);
  Mat even = oracle::delta(4, 0) + oracle::delta(4, 2), odd = oracle::delta(4, 1) + oracle::delta(4, 3);
  auto quotient = OperatorSubspace::span(4, {even, odd});
  flags = classify_coideal(r, quotient, AlgebraSide::in_A);
  CHECK(flags.invariant_subalgebra);
  CHECK(flags.baaj_vaes);
}

TEST_CASE("normal coideals on the dual side follow classical normality") {
  auto s3 = symmetric_group3();
  auto r = realize(function_algebra(s3));
  auto span_rho = [&](std::vector<size_t> h) {
    std::vector<Mat> ops;
    for (size_t t : h) ops.push_back(oracle::rho(s3, t));
    return OperatorSubspace::span(6, ops);
  };
  CHECK(is_normal_coideal(r, span_rho({0, 4, 5}), AlgebraSide::in_dual));
  CHECK_FALSE(is_normal_coideal(r, span_rho({0, 1}), AlgebraSide::in_dual));
  CHECK(is_normal_coideal(r, OperatorSubspace::scalars(6), AlgebraSide::in_dual));
}

TEST_CASE("classical soundness over every subgroup") {
  for (const auto& g : {symmetric_group3(), dihedral_group4(), quaternion_group()}) {
    for (const auto& h : oracle::subgroups(g)) {
      CAPTURE(g.name);
      CAPTURE(h.size());
      auto s = make_sub(g, h);
      bool expected = oracle::is_normal(g, h);
      CHECK(is_normal_subgroup(s.k, s.rl, s.f) == expected);
      CHECK(wang_normal(s.k, s.l, s.f) == expected);
      auto pol = pol_quotients(*s.k.hopf, s.l, s.f);
      CHECK(pol.equal == expected);
      CHECK(pol.swapped_by_antipode);
      CHECK(pol.left_cosets.dim() * h.size() == g.order());
    }
  }
}

TEST_CASE("coset algebras") {
  auto z4 = cyclic_group(4);
  auto s = make_sub(z4, {0, 2});
  auto pol = pol_quotients(*s.k.hopf, s.l, s.f);
  CHECK(pol.equal);
  CHECK(pol.left_cosets.dim() == 2);
  CHECK(pol.left_stable);
  CHECK(pol.right_stable);

  auto trivial = make_sub(symmetric_group3(), {0});
  auto all = pol_quotients(*trivial.k.hopf, trivial.l, trivial.f);
  CHECK(all.left_cosets.dim() == 6);
  CHECK(all.equal);
  CHECK(wang_normal(trivial.k, trivial.l, trivial.f));
}

TEST_CASE("inner actions") {
  auto q8 = quaternion_group();
  auto r = realize(function_algebra(q8));
  size_t d = r.d;
  Mat one = Mat::identity(d);
  CHECK(inner_action(r, one, ActionSide::left) == Mat::identity(d * d));
  CHECK(inner_action(r, one, ActionSide::right) == Mat::identity(d * d));
  // A central class sum: rho of the central element -1.
  Mat x = oracle::rho(q8, 4);
  REQUIRE(compute_Lhat(r).contains(x));
  CHECK(inner_action(r, x, ActionSide::right) == kron(x, one));
  CHECK(verify_action_axioms(r).ok());
}

TEST_CASE("alpha_L on F(S3) is conjugation") {
  auto s3 = symmetric_group3();
  auto r = realize(function_algebra(s3));
  size_t n = 6, s = 1;
  Mat expected(n * n, n * n);
  for (size_t t = 0; t < n; ++t) {
    size_t c = s3.mult[s3.mult[oracle::inverse(s3, t)][s]][t];
    expected = expected + kron(oracle::delta(n, t), oracle::rho(s3, c));
  }
  CHECK(inner_action(r, oracle::rho(s3, s), ActionSide::left) == expected);
  CHECK(alpha_left_matches_conjugation(r, s3, s));
}

TEST_CASE("action axioms on the quantum fixtures") {
  for (auto h : {group_algebra(symmetric_group3()), build_kac_paljutkin()}) {
    CAPTURE(h.name);
    CHECK(verify_action_axioms(realize(h)).ok());
  }
}
