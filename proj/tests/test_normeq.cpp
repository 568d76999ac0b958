#include <random>

#include "doctest.h"
#include "realcyc/normeq.hpp"
#include "support/generators.hpp"

using namespace realcyc;

namespace {

Cyclotomic z(int n, long k = 1) { return Cyclotomic::zeta(n, k); }
Cyclotomic q(int n, long num, long den = 1) { return Cyclotomic(n, Rational(num, den)); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("rational squares") {
  for (int n = 1; n <= 24; ++n) {
    const auto s = solve_norm(q(1, 4), n, 4);
    CHECK(s.x == q(n, 2));
    CHECK(s.strategy == NormStrategy::RationalSquare);
  }
  const auto s = solve_norm(q(4, 1, 64));
  CHECK(s.x == q(4, 1, 8));
  CHECK(rational_sqrt(Rational(9, 49)) == Rational(3, 7));
  CHECK_FALSE(rational_sqrt(Rational(2)).has_value());
  CHECK_FALSE(rational_sqrt(Rational(-4)).has_value());
}

TEST_CASE("square root of 2 in conductor 8") {
  const auto s = solve_norm(q(8, 2), 8, 1);
  CHECK(s.x * s.x.conj() == q(8, 2));
  CHECK(s.x == z(8) - z(8, 3));
  // the root is real, so the real-subfield search is the one that finds it
  CHECK(s.strategy == NormStrategy::RealSqrtSearch);
}

TEST_CASE("real subfield search") {
  const auto s = solve_norm(q(12, 3), 12, 2);
  CHECK(s.strategy == NormStrategy::RealSqrtSearch);
  CHECK(s.x * s.x == q(12, 3));
  CHECK(s.x.is_real());
  // 2 + sqrt(3) = ((1 + sqrt 3)/sqrt 2)^2 is not a square in Q(sqrt 3); it is a norm.
  const Cyclotomic mu = q(12, 2) + z(12) + z(12, -1);
  const auto t = solve_norm(mu, 12, 2);
  CHECK(t.x * t.x.conj() == mu);
}

TEST_CASE("power-basis search") {
  const auto s = solve_norm(q(4, 5), 4, 2);
  CHECK(s.strategy == NormStrategy::BoundedSearch);
  CHECK(s.x == q(4, 1) + z(4) * Rational(2));
  const auto direct = normeq_detail::bounded_search(q(4, 5), {2, {}, false});
  REQUIRE(direct.has_value());
  CHECK(*direct == s.x);
}

TEST_CASE("exhausted search never returns a wrong answer") {
  CHECK(kind_of([] { (void)solve_norm(q(8, 2), 8, 0); }) == ErrorKind::NormEquationNotSolved);
  // 3 is not a sum of two rational squares, so no x in Q(i) works at any bound
  CHECK(kind_of([] { (void)solve_norm(q(4, 3), 4, 3); }) == ErrorKind::NormEquationNotSolved);
  CHECK(kind_of([] { (void)solve_norm(Cyclotomic(5)); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { (void)solve_norm(z(5)); }) == ErrorKind::MuNotReal);
}

TEST_CASE("norms of random elements are solved") {
  std::mt19937_64 rng(12);
  for (int n : {3, 4, 5, 7, 8, 12}) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto x = realcyc::testing::random_nonzero(rng, n, 1);
      const Cyclotomic mu = x * x.conj();
      CAPTURE(mu.to_string());
      const auto s = solve_norm(mu, {2, {}, true});
      CHECK(s.x * s.x.conj() == mu);
    }
  }
}

TEST_CASE("parallel and serial searches return the same point") {
  std::mt19937_64 rng(77);
  for (int n : {5, 7, 8, 12}) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto x = realcyc::testing::random_nonzero(rng, n, 1);
      const Cyclotomic mu = x * x.conj();
      NormSearchOptions serial{2, {}, false};
      NormSearchOptions parallel{2, {}, true};
      CHECK(normeq_detail::bounded_search(mu, serial) == normeq_detail::bounded_search(mu, parallel));
      CHECK(normeq_detail::real_sqrt_search(mu, serial) == normeq_detail::real_sqrt_search(mu, parallel));
    }
  }
}

TEST_CASE("odd-degree closed form") {
  {
    const auto p = CycMatrix::scalar(z(7), 1);
    const auto s = solve_norm_odd_degree(p, q(7, 1));
    CHECK(s.x == z(7));
    CHECK(s.strategy == NormStrategy::OddDegreeClosedForm);
  }
  CHECK(solve_norm_odd_degree(CycMatrix::identity(3, 3), q(3, 1)).x.is_one());
  {
    const auto s = solve_norm_odd_degree(CycMatrix::scalar(z(5), 3), q(5, 1));
    CHECK(s.x == z(5, 3));
    CHECK(s.x * z(5, -3) == q(5, 1));
  }
  {
    // c * diag(swap, 1): P conj(P) = c conj(c) I
    const Cyclotomic c = q(8, 1) + z(8);
    const Cyclotomic mu = c * c.conj();
    CycMatrix p(8, 3, 3);
    p(0, 1) = c;
    p(1, 0) = c;
    p(2, 2) = c;
    CHECK((p * conj_entries(p)).is_scalar());
    const auto s = solve_norm_odd_degree(p, mu);
    CHECK(s.x * s.x.conj() == mu);
  }
  CHECK_THROWS_AS(solve_norm_odd_degree(CycMatrix::identity(3, 2), q(3, 1)), Error);
  CHECK_THROWS_AS(solve_norm_odd_degree(CycMatrix::identity(3, 3), q(3, 2)), Error);
}

TEST_CASE("default denominators") {
  CHECK(normeq_detail::default_denominators(4) == std::vector<long>{1, 2, 4, 8});
  CHECK(normeq_detail::default_denominators(1) == std::vector<long>{1, 2});
}
