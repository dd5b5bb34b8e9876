#include <doctest.h>

#include "support/oracles.hpp"
#include "trijac/triangle.hpp"

#include <array>

using namespace trijac;
using trijac::testing::RationalGen;

namespace {

bool is_identity(const TriWindow& w) {
  return w == TriWindow::identity(w.base_index(), w.size());
}

}  // namespace

TEST_CASE("window basics") {
  const TriWindow id = TriWindow::identity(-3, 5);
  CHECK(id.unitriangular());
  CHECK(id.at(-3, -3) == Poly::constant(1));
  CHECK(id.at(-3, 1).is_zero());
  CHECK_THROWS_AS(id.at(2, 0), std::out_of_range);
  CHECK_FALSE(TriWindow::zero(0, 3).unitriangular());
  CHECK_THROWS_AS(TriWindow::identity(0, 0), std::invalid_argument);
}

TEST_CASE("tri_mul") {
  RationalGen gen(31);
  const ParameterPoint p{gen.next(), gen.next()};
  const TriWindow l = build_L(p, -2, 7);
  CHECK(tri_mul(TriWindow::identity(-2, 7), l) == l);
  CHECK(is_identity(tri_mul(l, build_M(p, -2, 7))));
  const TriWindow prod = tri_mul(build_P(p, 0, 8), build_Q({gen.next(), gen.next()}, 0, 8));
  CHECK(prod.is_toeplitz());
  CHECK(prod.unitriangular());
  CHECK_THROWS_AS(tri_mul(l, build_M(p, -1, 7)), std::invalid_argument);
  CHECK_THROWS_AS(tri_mul(l, build_M(p, -2, 6)), std::invalid_argument);
}

TEST_CASE("tri_inverse") {
  CHECK(is_identity(tri_inverse(TriWindow::identity(4, 6))));
  RationalGen gen(32);
  for (int trial = 0; trial < 4; ++trial) {
    const ParameterPoint p{gen.next(), gen.next()};
    CHECK(tri_inverse(build_L(p, -4, 9)) == build_M(p, -4, 9));
  }
  const TriWindow inv_p = tri_inverse(build_P({0, 0}, 0, 10));
  for (long m = 0; m < 10; ++m) {
    for (long n = 0; n <= m; ++n) CHECK(inv_p.at(m, n) == gegenbauer(m - n, Rational(-1, 2)));
  }
  CHECK_THROWS_AS(tri_inverse(TriWindow::zero(0, 3)), std::invalid_argument);
}

TEST_CASE("L entries") {
  RationalGen gen(33);
  const ParameterPoint p{gen.next(), gen.next()};
  const TriWindow l = build_L(p, -5, 10);
  for (long i = -5; i < 5; ++i) CHECK(l.at(i, i) == Poly::constant(1));
  CHECK(l.unitriangular());
  // shift covariance
  for (long k = -3; k <= 3; ++k) {
    const ParameterPoint shifted{p.alpha + k, p.beta + k};
    for (long m = -2; m <= 4; ++m) {
      for (long n = -2; n <= m; ++n) {
        CHECK(l_entry(p, m, n) == l_entry(shifted, m - k, n - k));
        CHECK(m_entry(p, m, n) == m_entry(shifted, m - k, n - k));
      }
    }
  }
}

TEST_CASE("M entries") {
  RationalGen gen(34);
  const ParameterPoint p{gen.next(), gen.next()};
  for (long n = -4; n <= 4; ++n) CHECK(m_entry(p, n, n) == Poly::constant(1));
  // Legendre case: (m/n) P_{m-n}^(-m,-m) away from n = 0.
  const ParameterPoint zero{0, 0};
  for (long m = -5; m <= 6; ++m) {
    for (long n = -5; n <= m; ++n) {
      if (n == 0) continue;
      CHECK(m_entry(zero, m, n) == jacobi(static_cast<unsigned>(m - n), -m, -m) * (Rational(m) / n));
    }
  }
  // The expansion and the closed form agree wherever both are defined.
  for (int trial = 0; trial < 10; ++trial) {
    const ParameterPoint q{gen.next_fraction(), gen.next()};
    for (long m = -4; m <= 5; ++m) {
      for (long n = -4; n <= m; ++n) CHECK(m_entry_expanded(q, m, n) == m_entry_closed(q, m, n));
    }
  }
  CHECK_THROWS_AS(m_entry_closed({2, 1}, 0, -2), ApparentSingularity);
}

TEST_CASE("singular branch keeps LM = I") {
  for (long n0 : {-6L, 0L, 3L}) {
    const Rational singular = -n0 - 2;
    const ParameterPoint exact{singular, Rational(1, 3)};
    const ParameterPoint nearby{singular + Rational(1, 1000), Rational(1, 3)};
    CHECK(is_identity(tri_mul(build_L(exact, n0, 8), build_M(exact, n0, 8))));
    CHECK(is_identity(tri_mul(build_M(exact, n0, 8), build_L(exact, n0, 8))));
    CHECK(is_identity(tri_mul(build_L(nearby, n0, 8), build_M(nearby, n0, 8))));
  }
}

TEST_CASE("LM = I = ML on random parameters") {
  RationalGen gen(35);
  for (int trial = 0; trial < 10; ++trial) {
    const long n0 = std::array<long, 3>{-6, 0, 3}[static_cast<std::size_t>(trial % 3)];
    // every other draw puts a singular index inside the window
    const Rational alpha = trial % 2 == 0 ? Rational(-(n0 + gen.next_int(0, 11))) : gen.next();
    const ParameterPoint p{alpha, gen.next()};
    const TriWindow l = build_L(p, n0, 12);
    const TriWindow m = build_M(p, n0, 12);
    CHECK(is_identity(tri_mul(l, m)));
    CHECK(is_identity(tri_mul(m, l)));
  }
}

TEST_CASE("alpha = beta = 1 and the C-form pair") {
  const ParameterPoint one{1, 1};
  CHECK(is_identity(tri_mul(build_L(one, 0, 10), build_M(one, 0, 10))));

  const Rational h(1, 2);
  const ParameterPoint half{h, h};
  const std::size_t size = 9;
  // Their L(x) and the inverse they were after, in both printed forms.
  const TriWindow theirs(0, size, [&](long m, long n) {
    const auto mm = static_cast<unsigned>(m), nn = static_cast<unsigned>(n);
    const Rational c = factorial(mm) * factorial(2 * nn + 1) / (factorial(mm + nn + 1) * factorial(nn));
    const Poly via_c = gegenbauer(mm - nn, n + 1) * c;
    const Rational c2 = factorial(mm) * pochhammer(3 * h, nn) / (pochhammer(3 * h, mm) * factorial(nn));
    CHECK(via_c == l_entry(half, m, n) * c2);
    return via_c;
  });
  const TriWindow their_inverse(0, size, [&](long m, long n) {
    const auto mm = static_cast<unsigned>(m), nn = static_cast<unsigned>(n);
    const Rational c = factorial(mm) * factorial(mm + nn) / (factorial(2 * mm) * factorial(nn));
    const Poly via_c = gegenbauer(mm - nn, -m) * c;
    const Rational c2 = factorial(mm) * pochhammer(-h, nn + 1) / (pochhammer(-h, mm + 1) * factorial(nn));
    CHECK(via_c == jacobi(mm - nn, -m - h, -m - h) * c2);
    // and it is the rescaled M^(1/2,1/2)
    const Rational c3 = factorial(mm) * pochhammer(3 * h, nn) / (pochhammer(3 * h, mm) * factorial(nn));
    CHECK(via_c == m_entry(half, m, n) * c3);
    return via_c;
  });
  CHECK(is_identity(tri_mul(theirs, their_inverse)));
  CHECK(is_identity(tri_mul(their_inverse, theirs)));
}

TEST_CASE("Toeplitz families") {
  CHECK(is_identity(build_Q({0, 0}, -3, 8)));
  CHECK(build_P({0, 0}, 0, 5).at(1, 0) == Poly::x());
  RationalGen gen(36);
  const ParameterPoint p{gen.next(), gen.next()};
  const ParameterPoint q{gen.next(), gen.next()};
  CHECK(build_P(p, -2, 7).is_toeplitz());
  CHECK(build_Q(p, -2, 7).is_toeplitz());
  CHECK_FALSE(build_L(p, -2, 7).is_toeplitz());
  const TriWindow a = build_P(p, 0, 8), b = build_Q(q, 0, 8);
  CHECK(tri_mul(a, b) == tri_mul(b, a));
}

TEST_CASE("L is a row of Q and a column of P") {
  RationalGen gen(37);
  const ParameterPoint p{gen.next(), gen.next()};
  const long n0 = -3;
  const std::size_t size = 8;
  const TriWindow l = build_L(p, n0, size);
  for (long m = n0; m < n0 + static_cast<long>(size); ++m) {
    const TriWindow q = build_Q({p.alpha + m, p.beta + m}, n0, size);
    for (long n = n0; n <= m; ++n) CHECK(q.at(m, n) == l.at(m, n));
  }
  for (long n = n0; n < n0 + static_cast<long>(size); ++n) {
    const TriWindow pw = build_P({p.alpha + n, p.beta + n}, n0, size);
    for (long m = n; m < n0 + static_cast<long>(size); ++m) CHECK(pw.at(m, n) == l.at(m, n));
  }
}

TEST_CASE("Koekoek pair") {
  RationalGen gen(38);
  int checked = 0;
  while (checked < 6) {
    const ParameterPoint p{gen.next(), gen.next()};
    const Rational y = gen.next();
    TriWindow b = TriWindow::identity(0, 1);
    try {
      b = build_koekoek_b(p, y, 8);
    } catch (const SingularParameters&) {
      continue;
    }
    const TriWindow a = build_koekoek_a(p, y, 8);
    CHECK(a.at(0, 0) == Poly::constant(1));
    CHECK(b.at(0, 0) == Poly::constant(1));
    CHECK(is_identity(tri_mul(a, b)));
    CHECK(is_identity(tri_mul(b, a)));
    ++checked;
  }
  CHECK_THROWS_AS(build_koekoek_b({-1, -1}, 0, 4), SingularParameters);
}

TEST_CASE("convolution identities: worked examples") {
  using R = Rational;
  auto pass = [](const IdentitySpec& s) { return run_convolution_suite(s).all_passed(); };
  CHECK(pass({IdentityId::ShiftedConvolution,
              {{"alpha1", R(1, 2)}, {"beta1", R(-1, 3)}, {"alpha2", 2}, {"beta2", R(3, 7)}},
              10}));
  CHECK(pass({IdentityId::GegenbauerInverse, {{"nu", R(5, 3)}}, 12}));
  const R alpha(2, 5);
  CHECK(pass({IdentityId::GegenbauerLinearInverse, {{"mu", -1}, {"nu", -alpha - R(1, 2)}}, 10}));
  CHECK(pass({IdentityId::GegenbauerPochhammerInverse, {{"alpha", alpha}}, 10}));

  // WeightedConvolution is only stated for n > 0; n_max = 0 evaluates nothing.
  const auto r14 = run_convolution_suite(
      {IdentityId::WeightedConvolution, {{"alpha1", 1}, {"beta1", 2}, {"alpha2", 3}, {"beta2", 4}}, 0});
  CHECK(r14.all_passed());

  CHECK_THROWS_AS(run_convolution_suite({IdentityId::SymmetricInverse, {{"beta", 1}}, 3}), std::invalid_argument);
  CHECK_THROWS_AS(run_convolution_suite({IdentityId::SymmetricInverse, {}, 3}), std::invalid_argument);
  CHECK_THROWS_AS(run_convolution_suite({IdentityId::SymmetricInverse, {{"alpha", 0}}, 3}), SingularParameters);
  CHECK(identity_from_string("legendre_splitting") == IdentityId::LegendreSplitting);
  CHECK_THROWS_AS(identity_from_string("no_such_identity"), std::invalid_argument);
}

TEST_CASE("every convolution identity on random parameters") {
  RationalGen gen(39);
  for (auto id : all_identities()) {
    int done = 0;
    while (done < 3) {
      IdentitySpec spec{id, {}, 8};
      for (const auto& name : identity_signature(id)) spec.parameters.emplace_back(name, gen.next());
      try {
        const auto rep = run_convolution_suite(spec);
        CAPTURE(to_string(id));
        CHECK(rep.all_passed());
        ++done;
      } catch (const SingularParameters&) {
      }
    }
  }
}

TEST_CASE("Legendre splittings agree") {
  RationalGen gen(40);
  const Rational a1 = gen.next(), b1 = gen.next(), a2 = gen.next(), b2 = gen.next();
  const Rational shift_a = gen.next(), shift_b = gen.next();
  for (unsigned n = 0; n <= 8; ++n) {
    Poly first, second;
    for (unsigned k = 0; k <= n; ++k) {
      first += jacobi(n - k, a1, b1) * jacobi(k, a2, b2);
      second += jacobi(n - k, a1 + shift_a, b1 + shift_b) * jacobi(k, a2 - shift_a, b2 - shift_b);
    }
    CHECK(first == second);
  }
}

TEST_CASE("first_difference reports the smallest failing entry") {
  const TriWindow a = build_P({0, 0}, 0, 5);
  const TriWindow b = build_P({1, 0}, 0, 5);
  const auto ce = first_difference(a, b);
  REQUIRE(ce.has_value());
  CHECK(ce->indices == std::vector<NamedIndex>{{"m", 1}, {"n", 0}});
  CHECK(ce->residual == a.at(1, 0) - b.at(1, 0));
  const auto c = compare_windows("x", {}, a, b);
  CHECK(c.status == Status::Fail);
  CHECK(c.counterexample.has_value());
  CHECK_FALSE(compare_windows("y", {}, a, a).counterexample.has_value());
}
