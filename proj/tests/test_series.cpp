#include <doctest.h>

#include "support/oracles.hpp"
#include "trijac/jacobi.hpp"
#include "trijac/series.hpp"

using namespace trijac;
using trijac::testing::RationalGen;

namespace {

Series from_constants(unsigned order, std::vector<Rational> c) {
  std::vector<Poly> p;
  for (auto& v : c) p.push_back(Poly::constant(v));
  return Series(order, std::move(p));
}

Series random_unit_series(RationalGen& gen, unsigned order) {
  std::vector<Poly> c(order + 1);
  c[0] = Poly::constant(1);
  for (unsigned i = 1; i <= order; ++i) c[i] = gen.next_poly(2);
  return Series(order, std::move(c));
}

}  // namespace

TEST_CASE("series_mul") {
  CHECK(series_mul(from_constants(2, {1, 1}), from_constants(2, {1, -1})) == from_constants(2, {1, 0, -1}));
  RationalGen gen(3);
  const Series s = random_unit_series(gen, 5);
  CHECK(series_mul(s, Series::constant(5, 1)) == s);
  const Series root = series_pow(Series::gegenbauer_base(8), Rational(1, 2));
  CHECK(series_mul(root, root) == Series::gegenbauer_base(8));
  CHECK_THROWS_AS(series_mul(Series(2), Series(3)), std::invalid_argument);
}

TEST_CASE("series_recip") {
  CHECK(series_recip(from_constants(3, {1, -1})) == from_constants(3, {1, 1, 1, 1}));
  CHECK(series_recip(Series::constant(5, 1)) == Series::constant(5, 1));
  const Series inv = series_recip(Series::gegenbauer_base(4));
  const auto oracle = trijac::testing::gegenbauer_by_recurrence(4, 1);
  for (unsigned n = 0; n <= 4; ++n) {
    CHECK(inv[n] == oracle[n]);
    CHECK(inv[n] == gegenbauer(n, 1));
  }
  CHECK_THROWS_AS(series_recip(from_constants(3, {0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(series_recip(Series(3, {Poly::x()})), std::invalid_argument);
}

TEST_CASE("series_pow") {
  CHECK(series_pow(from_constants(3, {1, 1}), 2) == from_constants(3, {1, 2, 1}));
  // (1 - 2xw + w^2)^(1/2) = 1 - x w + (1 - x^2)/2 w^2 + O(w^3)
  const Series r = series_pow(Series::gegenbauer_base(2), Rational(1, 2));
  CHECK(r[0] == Poly::constant(1));
  CHECK(r[1] == Poly::monomial(-1, 1));
  CHECK(r[2] == Poly({Rational(1, 2), 0, Rational(-1, 2)}));
  RationalGen gen(4);
  CHECK(series_pow(random_unit_series(gen, 4), 0) == Series::constant(4, 1));
  CHECK_THROWS_AS(series_pow(from_constants(3, {2, 1}), Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("series identities on random inputs") {
  RationalGen gen(5);
  for (int trial = 0; trial < 8; ++trial) {
    const Series s = random_unit_series(gen, 6);
    CHECK(series_mul(s, series_recip(s)) == Series::constant(6, 1));
    const Rational e1 = gen.next();
    const Rational e2 = gen.next();
    CHECK(series_pow(s, e1) * series_pow(s, e2) == series_pow(s, e1 + e2));
  }
}

TEST_CASE("Jacobi generating function") {
  const Series legendre_gf = jacobi_generating(0, 0, 6);
  const auto legendre_oracle = trijac::testing::jacobi_by_recurrence(6, 0, 0);
  for (unsigned n = 0; n <= 6; ++n) CHECK(legendre_gf[n] == legendre_oracle[n]);

  const Rational a(1, 3), b(-2, 5);
  const Series gf = jacobi_generating(a, b, 10);
  CHECK(gf[0] == Poly::constant(1));
  const auto oracle = trijac::testing::jacobi_by_recurrence(10, a, b);
  for (unsigned n = 0; n <= 10; ++n) {
    CHECK(gf[n] == jacobi(n, a, b));
    CHECK(gf[n] == oracle[n]);
  }

  RationalGen gen(6);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational ra = gen.next();
    const Rational rb = gen.next();
    const Series g = jacobi_generating(ra, rb, 8);
    for (unsigned n = 0; n <= 8; ++n) CHECK(g[n] == jacobi(n, ra, rb));
  }
}

TEST_CASE("Gegenbauer generating function") {
  const Series zero = gegenbauer_generating(0, 5);
  CHECK(zero == Series::constant(5, 1));
  const Series half = gegenbauer_generating(Rational(1, 2), 6);
  for (unsigned n = 0; n <= 6; ++n) CHECK(half[n] == legendre(n));
  CHECK(gegenbauer_generating(Rational(-1, 2), 4)[1] == Poly::monomial(-1, 1));

  RationalGen gen(8);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational lam = gen.next();
    const Series g = gegenbauer_generating(lam, 10);
    const auto oracle = trijac::testing::gegenbauer_by_recurrence(10, lam);
    for (unsigned n = 0; n <= 10; ++n) {
      CHECK(g[n] == gegenbauer(n, lam));
      CHECK(g[n] == oracle[n]);
    }
  }
}

TEST_CASE("Gegenbauer convolution from the generating function") {
  RationalGen gen(9);
  for (int trial = 0; trial < 6; ++trial) {
    const Rational nu = gen.next();
    const Rational lam = gen.next();
    const Series prod = gegenbauer_generating(nu, 10) * gegenbauer_generating(lam, 10);
    CHECK(prod == gegenbauer_generating(nu + lam, 10));
    CHECK(gegenbauer_generating(nu, 10) * gegenbauer_generating(-nu, 10) == Series::constant(10, 1));
    for (unsigned n = 0; n <= 10; ++n) {
      Poly conv;
      for (unsigned k = 0; k <= n; ++k) conv += gegenbauer(k, nu) * gegenbauer(n - k, lam);
      CHECK(conv == gegenbauer(n, nu + lam));
    }
  }
}
