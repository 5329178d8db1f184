#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bifree/errors.hpp"
#include "bifree/rng.hpp"
#include "bifree/series.hpp"

using namespace bifree;

namespace {

Series1 s1(std::vector<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.emplace_back(v);
  return Series1::from_coeffs(std::move(c));
}

Series1 random_series1(Rng& rng, int order) {
  Series1 s(order);
  for (int k = 0; k <= order; ++k) s.set_coeff(k, random_rational(rng));
  return s;
}

Series2 random_series2(Rng& rng, int nz, int nw) {
  Series2 s(nz, nw);
  for (int i = 0; i <= nz; ++i)
    for (int j = 0; j <= nw; ++j) s.set_coeff(i, j, random_rational(rng));
  return s;
}

// Independent inversion oracle: Lagrange's formula
// g_k = (1/k) [z^{k-1}] (z / f(z))^k.
Series1 lagrange_invert(const Series1& f) {
  const int n = f.order();
  Series1 shifted(n);  // f(z)/z as a unit series
  for (int k = 0; k < n; ++k) shifted.set_coeff(k, f.coeff(k + 1));
  Series1 base = div_unit(Series1::constant(1, n), shifted);
  Series1 g(n), power = Series1::constant(1, n);
  for (int k = 1; k <= n; ++k) {
    power = power * base;
    g.set_coeff(k, power.coeff(k - 1) / k);
  }
  return g;
}

}  // namespace

TEST_CASE("ring operation examples") {
  Series1 a = s1({1, 1, 0});   // 1 + z
  Series1 b = s1({1, -1, 0});  // 1 - z
  CHECK(a * b == s1({1, 0, -1}));
  CHECK(a + Series1::zero(2) == a);

  Series2 z = Series2::var_z(2, 2), w = Series2::var_w(2, 2);
  Series2 zw = z * w;
  CHECK(zw.coeff(1, 1) == 1);
  CHECK(zw == Series2::zero(2, 2).times_z().times_w() + zw);
}

TEST_CASE("ring axioms on random rational series") {
  Rng rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    Series1 a = random_series1(rng, 6), b = random_series1(rng, 6),
            c = random_series1(rng, 6);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Series1::zero(6));

    Series2 x = random_series2(rng, 4, 3), y = random_series2(rng, 4, 3),
            z = random_series2(rng, 4, 3);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
  }
}

TEST_CASE("div_unit examples and round trip") {
  Series1 a = s1({0, 1, 1, 0});
  CHECK(div_unit(a, Series1::constant(1, 3)) == a);
  // 1 / (1 - z) = 1 + z + z^2 + z^3.
  CHECK(div_unit(Series1::constant(1, 3), s1({1, -1, 0, 0})) == s1({1, 1, 1, 1}));
  // (z + z^2) / (1 + z) = z.
  CHECK(div_unit(s1({0, 1, 1}), s1({1, 1, 0})) == s1({0, 1, 0}));

  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Series1 x = random_series1(rng, 6);
    Series1 u = random_series1(rng, 6);
    u.set_coeff(0, random_nonzero_rational(rng));
    CHECK(div_unit(x, u) * u == x);

    Series2 x2 = random_series2(rng, 4, 4);
    Series2 u2 = random_series2(rng, 4, 4);
    u2.set_coeff(0, 0, random_nonzero_rational(rng));
    CHECK(div_unit(x2, u2) * u2 == x2);
  }
  CHECK_THROWS_AS(div_unit(a, s1({0, 1, 0, 0})), division_error);
}

TEST_CASE("div_monomial shifts exponents and shrinks the valid grid") {
  Series2 zw = Series2::var_z(3, 3) * Series2::var_w(3, 3);
  Series2 one = div_monomial(zw, kMonZW);
  CHECK(one.coeff(0, 0) == 1);
  CHECK(one.valid_z() == 2);
  CHECK(one.valid_w() == 2);

  // (z^2 w + z w^2) / z = zw + w^2.
  Series2 f(3, 3);
  f.set_coeff(2, 1, 1);
  f.set_coeff(1, 2, 1);
  Series2 g = div_monomial(f, kMonZ);
  CHECK(g.coeff(1, 1) == 1);
  CHECK(g.coeff(0, 2) == 1);
  CHECK(g.valid_z() == 2);
  CHECK(g.valid_w() == 3);

  Series2 bad = Series2::one(2, 2);
  CHECK_THROWS_AS(div_monomial(bad, kMonZ), divisibility_error);

  // Multiplying back restores the original on the valid grid.
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Series2 x = random_series2(rng, 4, 4);
    for (int j = 0; j <= 4; ++j) x.set_coeff(0, j, 0);
    Series2 q = div_monomial(x, kMonZ);
    CHECK(q.valid_z() == 3);
    SeriesMatch m = match_on_common_grid(q.times_z(), x);
    CHECK(m.equal);
    CHECK(m.common_z == 4);  // shifting back up re-validates the top row
  }
}

TEST_CASE("valid-grid tracking intersects through binary operations") {
  Series2 a = Series2::one(4, 4).restricted(2, 4);
  Series2 b = Series2::one(4, 4).restricted(4, 3);
  CHECK((a + b).valid_z() == 2);
  CHECK((a + b).valid_w() == 3);
  CHECK((a * b).valid_z() == 2);
  CHECK((a * b).valid_w() == 3);
}

TEST_CASE("compose1 examples") {
  Series1 f = s1({0, 1, 1, 0});
  CHECK(compose1(Series1::identity(3), f) == f);
  // z^2 composed with z + z^2 at order 3: z^2 + 2 z^3.
  CHECK(compose1(s1({0, 0, 1, 0}), f) == s1({0, 0, 1, 2}));
  CHECK_THROWS_AS(compose1(f, s1({1, 1, 0, 0})), composition_error);
}

TEST_CASE("invert1 matches the frozen example and the Lagrange oracle") {
  // z + z^2 inverts to z - z^2 + 2 z^3 - 5 z^4.
  Series1 f = s1({0, 1, 1, 0, 0});
  Series1 g = invert1(f);
  CHECK(g == s1({0, 1, -1, 2, -5}));
  CHECK(g == lagrange_invert(f));

  CHECK(invert1(Series1::identity(4)) == Series1::identity(4));
  CHECK(invert1(s1({0, 2, 0})) == Series1::from_coeffs({Rat(0), Rat(1, 2), Rat(0)}));

  CHECK_THROWS_AS(invert1(s1({1, 1, 0})), inversion_error);
  CHECK_THROWS_AS(invert1(s1({0, 0, 1})), inversion_error);
}

TEST_CASE("invert1 round trips and agrees with Lagrange on random admissible series") {
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    Series1 f = random_series1(rng, 7);
    f.set_coeff(0, 0);
    f.set_coeff(1, random_nonzero_rational(rng));
    Series1 g = invert1(f);
    CHECK(compose1(f, g) == Series1::identity(7));
    CHECK(compose1(g, f) == Series1::identity(7));
    CHECK(g == lagrange_invert(f));
  }
}

TEST_CASE("compose2 examples") {
  Series2 zw = Series2::var_z(3, 3) * Series2::var_w(3, 3);
  Series1 idz = Series1::identity(3);
  CHECK(compose2(zw, idz, idz) == zw);

  // zw composed with (z + z^2, w) adds the z^2 w cell.
  Series2 out = compose2(zw, s1({0, 1, 1, 0}), idz);
  CHECK(out.coeff(1, 1) == 1);
  CHECK(out.coeff(2, 1) == 1);
  CHECK(out.coeff(3, 1) == 0);

  CHECK_THROWS_AS(compose2(zw, s1({1, 1, 0, 0}), idz), composition_error);
  CHECK_THROWS_AS(compose2(zw, Series1::identity(2), idz), argument_error);
}

TEST_CASE("compose2 respects multiplication") {
  Rng rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    Series2 a = random_series2(rng, 3, 3), b = random_series2(rng, 3, 3);
    Series1 iz = random_series1(rng, 3), iw = random_series1(rng, 3);
    iz.set_coeff(0, 0);
    iw.set_coeff(0, 0);
    CHECK(compose2(a * b, iz, iw) == compose2(a, iz, iw) * compose2(b, iz, iw));
    CHECK(compose2(a + b, iz, iw) == compose2(a, iz, iw) + compose2(b, iz, iw));
  }
}

TEST_CASE("series equality comparison reports the first failing cell") {
  Series2 a = Series2::one(3, 3);
  Series2 b = Series2::one(3, 3);
  b.set_coeff(2, 1, 5);
  SeriesMatch m = match_on_common_grid(a, b);
  CHECK_FALSE(m.equal);
  CHECK(m.fail_i == 2);
  CHECK(m.fail_j == 1);
  CHECK(match_on_common_grid(a, a).equal);
}

TEST_CASE("order mismatches are rejected") {
  CHECK_THROWS_AS(s1({1, 2}) + s1({1, 2, 3}), argument_error);
  CHECK_THROWS_AS(Series2::one(2, 2) * Series2::one(2, 3), argument_error);
}
