#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcenter/subspace.hpp"

using namespace qcenter;

namespace {

CycloScalar z(uint64_t n, int64_t k = 1) { return CycloScalar::zeta(n, k); }

CycloScalar random_scalar(std::mt19937_64& rng) {
  static const uint64_t conductors[] = {1, 3, 4, 5, 8, 12};
  uint64_t n = conductors[rng() % 6];
  CycloScalar s;
  for (int t = 0; t < 3; ++t) {
    Rational c(int64_t(rng() % 11) - 5, int64_t(rng() % 4) + 1);
    s += CycloScalar(c) * z(n, int64_t(rng() % n));
  }
  return s;
}

Vec v(std::initializer_list<int64_t> xs) {
  Vec out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

Mat random_mat(std::mt19937_64& rng, size_t r, size_t c) {
  Mat m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      if (rng() % 2) m(i, j) = random_scalar(rng);
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic spills to GMP and comes back") {
  Rational big(INT64_MAX);
  Rational sq = big * big;
  CHECK(sq / big == big);
  CHECK((sq - sq).is_zero());
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("field examples") {
  CHECK(z(4) * z(4) == CycloScalar(-1));
  CHECK(z(8).conj() == z(8, 7));
  CycloScalar half(Rational(1, 2));
  CHECK((half * (1 + z(4))) * (half * (1 - z(4))) == half);
  CHECK_THROWS_AS(z(4) / CycloScalar(), std::domain_error);
}

TEST_CASE("conductor normalization and mixed fields") {
  CHECK(z(6) == -z(3, 2));
  CHECK(z(2) == CycloScalar(-1));
  CHECK(z(8, 2) == z(4));
  CHECK((z(8, 2) + z(3)).conductor() == 12);
  CHECK((z(8) * z(8, 7)).is_one());
  CycloScalar x = z(8, 2);
  CHECK(x.canonical().conductor() == 4);
  // 1 + z3 + z3^2 = 0
  CHECK((1 + z(3) + z(3, 2)).is_zero());
  CHECK((z(5) + z(5, 2) + z(5, 3) + z(5, 4)) == CycloScalar(-1));
}

TEST_CASE("conductor bound is enforced") {
  uint64_t old = conductor_bound();
  set_conductor_bound(20);
  CHECK_THROWS_AS(z(7) * z(5), std::overflow_error);
  set_conductor_bound(old);
  CHECK_NOTHROW(z(7) * z(5));
}

TEST_CASE("literal grammar round-trips") {
  for (const char* s : {"0", "-3/7", "1/2-1/2*z4^1", "z8", "-z4^3", "2*z3^2+1", "1/2*z12^5"}) {
    CycloScalar x = CycloScalar::parse(s);
    CHECK(CycloScalar::parse(x.str()) == x);
  }
  CHECK(CycloScalar::parse("z4").str() == "1*z4^1");
  CHECK(CycloScalar::parse("1/2-1/2*z4^1") == CycloScalar(Rational(1, 2)) * (1 - z(4)));
  try {
    CycloScalar::parse("1+*z4");
    FAIL("expected parse error");
  } catch (const ScalarParseError& e) {
    CHECK(e.offset == 2);
  }
  CHECK_THROWS_AS(CycloScalar::parse(""), ScalarParseError);
  CHECK_THROWS_AS(CycloScalar::parse("3 z4"), ScalarParseError);
}

TEST_CASE("field axioms on random scalars") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    CycloScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("square roots via Gauss sums") {
  for (auto q : {Rational(2), Rational(3), Rational(5), Rational(1, 2), Rational(12), Rational(7, 3),
                 Rational(-1), Rational(-2)}) {
    CycloScalar r = sqrt_rational(q);
    CHECK(r * r == CycloScalar(q));
    if (q.sign() > 0) CHECK(real_sign(r) == 1);
  }
  CHECK(sqrt_rational(Rational(4)) == CycloScalar(2));
  CHECK(real_sign(z(5) + z(5, 4)) == 1);       // 2 cos(72 deg)
  CHECK(real_sign(z(5, 2) + z(5, 3)) == -1);   // 2 cos(144 deg)
  CHECK_THROWS(real_sign(z(4)));
}

TEST_CASE("matrix identities on random matrices") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 10; ++it) {
    Mat a = random_mat(rng, 3, 3), b = random_mat(rng, 3, 3);
    Mat c = random_mat(rng, 2, 2), d = random_mat(rng, 2, 2);
    CHECK((a * b).adjoint() == b.adjoint() * a.adjoint());
    CHECK(a.adjoint().adjoint() == a);
    CHECK(kron(a, c) * kron(b, d) == kron(a * b, c * d));
    CHECK((a * b).trace() == (b * a).trace());
  }
  Mat x = kron(Mat::unit(2, 0, 1), Mat::unit(3, 2, 0));
  CHECK(swap_legs(x, 2, 3) == kron(Mat::unit(3, 2, 0), Mat::unit(2, 0, 1)));
  CHECK(left_slice(x, 2, 3, 0, 1) == Mat::unit(3, 2, 0));
  CHECK(right_slice(x, 2, 3, 2, 0) == Mat::unit(2, 0, 1));
}

TEST_CASE("echelonize examples") {
  auto s = Subspace::span(2, {v({1, 0}), v({2, 0})});
  CHECK(s.dim() == 1);
  CHECK(s.basis()[0] == v({1, 0}));
  CHECK(Subspace::span(2, {}).dim() == 0);
  auto f = Subspace::span(2, {v({1, 1}), v({1, -1})});
  CHECK(f.basis() == std::vector<Vec>{v({1, 0}), v({0, 1})});
  CHECK(Subspace::span(2, f.basis()) == f);
  CHECK_THROWS(Subspace::span(2, {v({1, 2, 3})}));
}

TEST_CASE("subspace operation examples") {
  auto x = Subspace::span(2, {v({1, 0})}), y = Subspace::span(2, {v({0, 1})});
  CHECK(intersect(x, y).dim() == 0);
  CHECK(Subspace::full(2).contains(x));
  auto a = Subspace::span(3, {v({1, 1, 0}), v({0, 0, 1})});
  auto b = Subspace::span(3, {v({1, 1, 1})});
  CHECK(intersect(a, b) == b);
  CHECK((x + y) == Subspace::full(2));
  CHECK_THROWS(intersect(x, a));
}

TEST_CASE("dimension formula on random subspaces") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 20; ++it) {
    size_t n = 5;
    auto rand_space = [&](size_t k) {
      std::vector<Vec> vs;
      for (size_t i = 0; i < k; ++i) {
        Vec w(n);
        for (auto& e : w) e = CycloScalar(int64_t(rng() % 3) - 1) * (rng() % 2 ? z(4) : CycloScalar(1));
        vs.push_back(w);
      }
      return Subspace::span(n, vs);
    };
    auto a = rand_space(rng() % 4 + 1), b = rand_space(rng() % 4 + 1);
    CHECK(a.dim() + b.dim() == (a + b).dim() + intersect(a, b).dim());
    CHECK(Subspace::span(n, a.basis()) == a);
    auto k = kernel(a.basis(), n);
    CHECK(k.dim() + a.dim() == n);
  }
}

TEST_CASE("linear solve") {
  auto x = solve({v({1, 1}), v({1, -1})}, v({3, 1}), 2);
  REQUIRE(x);
  CHECK(*x == v({2, 1}));
  CHECK_FALSE(solve({v({1, 1}), v({2, 2})}, v({1, 3}), 2));
}
