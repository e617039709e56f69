#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qcenter/opalg.hpp"

using namespace qcenter;

namespace {

std::vector<Mat> regular_lambda(const GroupTable& g) {
  std::vector<Mat> out;
  for (size_t t = 0; t < g.order(); ++t) out.push_back(oracle::lambda(g, t));
  return out;
}

Mat diag(std::initializer_list<int64_t> xs) {
  Mat m(xs.size(), xs.size());
  size_t i = 0;
  for (auto x : xs) {
    m(i, i) = CycloScalar(x);
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("scalars, full algebra and their commutants") {
  auto s = OperatorSubspace::scalars(3);
  auto f = OperatorSubspace::full(3);
  CHECK(s.dim() == 1);
  CHECK(f.dim() == 9);
  CHECK(commutant(s) == f);
  CHECK(commutant(f) == s);
  CHECK(s.flags().is_algebra);
  CHECK(s.flags().is_unital);
  CHECK(s.flags().is_star_closed);
}

TEST_CASE("diagonal algebra is maximal abelian") {
  auto d = generate_algebra(3, {diag({1, 2, 3})});
  CHECK(d.dim() == 3);
  CHECK(is_abelian(d));
  CHECK(commutant(d) == d);
  CHECK(center_of_algebra(d) == d);
}

TEST_CASE("group algebra of S3 in the left regular representation") {
  auto g = symmetric_group3();
  auto a = generate_algebra(6, regular_lambda(g));
  CHECK(a.dim() == 6);
  CHECK_FALSE(is_abelian(a));
  SUBCASE("double commutant") { CHECK(commutant(commutant(a)) == a); }
  SUBCASE("center has one dimension per conjugacy class") {
    CHECK(center_of_algebra(a).dim() == oracle::conjugacy_classes(g));
    CHECK(center_of_algebra(a).dim() == 3);
  }
  SUBCASE("commutant is the right regular algebra") {
    std::vector<Mat> rho;
    for (size_t t = 0; t < 6; ++t) rho.push_back(oracle::rho(g, t));
    CHECK(commutant(a) == generate_algebra(6, rho));
  }
  SUBCASE("relative commutant agrees with commutant then intersection") {
    auto sub = generate_algebra(6, {oracle::lambda(g, 1)});
    CHECK(relative_commutant(sub, a) == intersect(commutant(sub), a));
  }
}

TEST_CASE("center_of_algebra rejects a non-algebra") {
  Mat e(2, 2), f(2, 2);
  e(0, 1) = CycloScalar(1);
  f(1, 0) = CycloScalar(1);
  auto span = OperatorSubspace::span(2, {e, f});
  CHECK_FALSE(span.flags().is_algebra);
  CHECK_THROWS_AS(center_of_algebra(span), std::invalid_argument);
}

TEST_CASE("algebra tables from operators keep the structure") {
  auto g = quaternion_group();
  auto a = generate_algebra(8, regular_lambda(g));
  auto t = AlgebraTable::from_operators(a);
  CHECK(t.dim() == 8);
  CHECK(t.has_operators());
  CHECK(t.operator_space() == a);
  auto gens = t.generate({});
  CHECK(gens.dim() == 1);
}
