#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bifree/bnc.hpp"
#include "bifree/errors.hpp"
#include "bifree/rng.hpp"
#include "bifree/transforms.hpp"

using namespace bifree;

namespace {

std::vector<Rat> rats(std::vector<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// kappa_1 = 1 on both faces, single mixed cumulant kappa_{1,1} = t.
PairSpec coupling_only(int na, int nb, const Rat& t) {
  std::vector<Rat> ka(na, Rat(0)), kb(nb, Rat(0));
  ka[0] = 1;
  kb[0] = 1;
  std::vector<std::vector<Rat>> kab(na, std::vector<Rat>(nb, Rat(0)));
  kab[0][0] = t;
  return PairSpec(ka, kb, kab);
}

PairSpec independent_pair(Rng& rng, int na, int nb, bool nonzero_means) {
  PairSpec p = random_pair_spec(rng, na, nb, nonzero_means);
  std::vector<std::vector<Rat>> zero_grid(na, std::vector<Rat>(nb, Rat(0)));
  return PairSpec(p.kappa_a_seq(), p.kappa_b_seq(), zero_grid);
}

// Definition-level oracle for bi-free moments: enumerate BNC(n,m) directly.
Rat moment_oracle(const PairSpec& p, int n, int m) {
  if (n + m == 0) return 1;
  Rat acc = 0;
  for (const BNCPartition& pi : enumerate_bnc(n, m)) {
    Rat term(1);
    for (auto [i, j] : pi.block_types()) term *= p.kappa(i, j);
    acc += term;
  }
  return acc;
}

}  // namespace

TEST_CASE("free cumulants to moments: frozen examples") {
  // kappa = (1,0,0,...): every moment is 1.
  CHECK(free_cumulants_to_moments(rats({1, 0, 0, 0, 0})) == rats({1, 1, 1, 1, 1}));
  // kappa = (1,1,0,...): m2 = 2 (and the Catalan-ish continuation 1,2,4,9).
  std::vector<Rat> m = free_cumulants_to_moments(rats({1, 1, 0, 0}));
  CHECK(m[0] == 1);
  CHECK(m[1] == 2);
  // m1 = kappa1.
  CHECK(free_cumulants_to_moments(rats({7}))[0] == 7);
}

TEST_CASE("free moments to cumulants inverts the moment map") {
  CHECK(free_moments_to_cumulants(rats({1, 1, 1, 1})) == rats({1, 0, 0, 0}));
  Rng rng(1);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Rat> k = random_rationals(rng, 8);
    CHECK(free_moments_to_cumulants(free_cumulants_to_moments(k)) == k);
    std::vector<Rat> m = random_rationals(rng, 8);
    CHECK(free_cumulants_to_moments(free_moments_to_cumulants(m)) == m);
  }
}

TEST_CASE("free moment-cumulant relation psi(z) = c(z h(z))") {
  Rng rng(2);
  PairSpec p = random_pair_spec(rng, 6, 6, false);
  Series1 h = series_h(p, Side::Left);
  CHECK(series_psi(p, Side::Left) == compose1(series_c(p, Side::Left), h.times_z()));
}

TEST_CASE("bifree cumulants to moments: examples and the BNC oracle") {
  Rng rng(3);
  PairSpec p = random_pair_spec(rng, 3, 3, false);
  MomentSpec ms = bifree_cumulants_to_moments(p);
  CHECK(ms.moment(1, 0) == p.kappa_a(1));
  CHECK(ms.moment(1, 1) == p.kappa_ab(1, 1) + p.kappa_a(1) * p.kappa_b(1));
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) CHECK(ms.moment(n, m) == moment_oracle(p, n, m));
}

TEST_CASE("bifree moments factor for independent pairs") {
  Rng rng(4);
  PairSpec p = independent_pair(rng, 4, 4, false);
  MomentSpec ms = bifree_cumulants_to_moments(p);
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      CHECK(ms.moment(n, m) == ms.moment(n, 0) * ms.moment(0, m));

  // And conversely, factoring moments force a vanishing mixed grid.
  PairSpec back = bifree_moments_to_cumulants(ms);
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) CHECK(back.kappa_ab(n, m) == 0);
}

TEST_CASE("bifree round trips are exact") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    PairSpec p = random_pair_spec(rng, 4, 3, false);
    CHECK(bifree_moments_to_cumulants(bifree_cumulants_to_moments(p)) == p);
    MomentSpec ms = random_moment_spec(rng, 3, 4);
    CHECK(bifree_cumulants_to_moments(bifree_moments_to_cumulants(ms)) == ms);
  }
}

TEST_CASE("kappa_{1,1} recovers the covariance") {
  Rng rng(6);
  PairSpec p = random_pair_spec(rng, 2, 2, false);
  MomentSpec ms = bifree_cumulants_to_moments(p);
  CHECK(p.kappa_ab(1, 1) == ms.moment(1, 1) - ms.moment(1, 0) * ms.moment(0, 1));
}

TEST_CASE("series_h / series_c / series_psi shapes") {
  PairSpec p(rats({1, 0, 0, 0}), rats({1}), {{Rat(0)}, {Rat(0)}, {Rat(0)}, {Rat(0)}});
  CHECK(series_c(p, Side::Left) == Series1::identity(4));
  Series1 h = series_h(p, Side::Left);
  CHECK(h == Series1::from_coeffs(rats({1, 1, 1, 1, 1})));
  CHECK(series_psi(p, Side::Left).coeff(0) == 0);
  CHECK(series_h(p, Side::Left) ==
        series_psi(p, Side::Left) + Series1::constant(1, 4));
}

TEST_CASE("s_transform frozen examples") {
  PairSpec trivial(rats({1, 0, 0, 0}), rats({1}),
                   {{Rat(0)}, {Rat(0)}, {Rat(0)}, {Rat(0)}});
  CHECK(s_transform(trivial, Side::Left) == Series1::constant(1, 3));

  PairSpec semicirc(rats({1, 1, 0, 0}), rats({1}),
                    {{Rat(0)}, {Rat(0)}, {Rat(0)}, {Rat(0)}});
  CHECK(s_transform(semicirc, Side::Left) ==
        Series1::from_coeffs(rats({1, -1, 2, -5})));

  PairSpec scaled(rats({2, 0}), rats({1}), {{Rat(0)}, {Rat(0)}});
  CHECK(s_transform(scaled, Side::Left) ==
        Series1::from_coeffs({Rat(1, 2), Rat(0)}));

  PairSpec degenerate(rats({0, 1}), rats({1}), {{Rat(0)}, {Rat(0)}});
  CHECK_THROWS_AS(s_transform(degenerate, Side::Left), domain_error);
}

TEST_CASE("the two s_transform routes agree") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    PairSpec p = random_pair_spec(rng, 8, 2, true);
    CHECK(s_transform(p, Side::Left) == s_transform_via_moments(p, Side::Left));
    CHECK(s_transform(p, Side::Right) == s_transform_via_moments(p, Side::Right));
  }
}

TEST_CASE("h(X(z)) = 1 + z") {
  Rng rng(8);
  PairSpec p = random_pair_spec(rng, 7, 1, true);
  Series1 h = series_h(p, Side::Left);
  Series1 chi = invert1(series_psi(p, Side::Left));
  Series1 expect = Series1::constant(1, 7) + Series1::identity(7);
  CHECK(compose1(h, chi) == expect);
}

TEST_CASE("series_hck shapes") {
  Rng rng(9);
  PairSpec p = random_pair_spec(rng, 4, 4, false);
  BiSeries s = series_hck(p);
  // K vanishes on both axes.
  for (int i = 0; i <= 4; ++i) CHECK(s.k.coeff(i, 0) == 0);
  for (int j = 0; j <= 4; ++j) CHECK(s.k.coeff(0, j) == 0);
  // C(z, 0) = 1 + c_a(z).
  for (int i = 1; i <= 4; ++i) CHECK(s.c.coeff(i, 0) == p.kappa_a(i));
  CHECK(s.c.coeff(0, 0) == 1);
  // K = C - c_a - c_b - 1 cellwise.
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(s.k.coeff(i, j) == s.c.coeff(i, j));

  PairSpec ind = independent_pair(rng, 4, 4, false);
  CHECK(series_hck(ind).k == Series2::zero(4, 4));
}

TEST_CASE("h/H/C exchange identity") {
  Rng rng(10);
  for (int trial = 0; trial < 5; ++trial) {
    PairSpec p = random_pair_spec(rng, 4, 4, false);
    SeriesMatch m = verify_moment_cumulant_identity(p);
    CHECK(m.equal);
    CHECK(m.common_z == 4);
    CHECK(m.common_w == 4);
  }
  CHECK(verify_moment_cumulant_identity(independent_pair(rng, 4, 4, false)).equal);
  CHECK(verify_moment_cumulant_identity(coupling_only(4, 4, Rat(0))).equal);
}

TEST_CASE("partial_s: independence gives the constant 1") {
  Rng rng(11);
  PairSpec p = independent_pair(rng, 4, 4, true);
  Series2 s = partial_s(p);
  CHECK(s == Series2::one(4, 4).restricted(s.valid_z(), s.valid_w()));
}

TEST_CASE("partial_s: the pure-coupling expansion is exact") {
  Rat t(3, 2);
  Series2 s = partial_s(coupling_only(4, 4, t));
  Series2 expect(4, 4);
  expect.set_coeff(0, 0, Rat(1) + t);
  expect.set_coeff(1, 0, t);
  expect.set_coeff(0, 1, t);
  CHECK(match_on_common_grid(s, expect).equal);
}

TEST_CASE("partial_s two forms agree and swap symmetry holds") {
  Rng rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    PairSpec p = random_pair_spec(rng, 4, 4, true);
    CHECK(partial_s_forms_match(p).equal);
    CHECK(match_on_common_grid(partial_s(swapped(p)), partial_s(p).transposed()).equal);
  }
}

TEST_CASE("opposite_partial_s: independence gives the constant 1") {
  Rng rng(13);
  PairSpec p = independent_pair(rng, 4, 4, true);
  Series2 s = opposite_partial_s(p);
  CHECK(s == Series2::one(4, 4).restricted(s.valid_z(), s.valid_w()));
}

TEST_CASE("opposite_partial_s: pure-coupling leading terms") {
  Rat t(5, 3);
  Series2 s = opposite_partial_s(coupling_only(4, 4, t));
  // (1 + tw)/(1 + tz) = 1 + t(w - z) + ...
  CHECK(s.coeff(0, 0) == 1);
  CHECK(s.coeff(0, 1) == t);
  CHECK(s.coeff(1, 0) == -t);
}

TEST_CASE("opposite_partial_s: the two forms agree") {
  Rng rng(14);
  for (int trial = 0; trial < 5; ++trial) {
    PairSpec p = random_pair_spec(rng, 4, 4, true);
    SeriesMatch m = opposite_s_forms_match(p);
    CHECK(m.equal);
    CHECK(m.common_z == 4);
    CHECK(m.common_w == 4);
  }
}

TEST_CASE("opposite_partial_s: swap inverts through the transpose") {
  Rng rng(15);
  PairSpec p = random_pair_spec(rng, 4, 4, true);
  Series2 sop = opposite_partial_s(p);
  Series2 lhs = opposite_partial_s(swapped(p));
  Series2 rhs = div_unit(Series2::one(4, 4), sop.transposed());
  CHECK(match_on_common_grid(lhs, rhs).equal);
}

TEST_CASE("rescale acts diagonally and leaves S^op fixed") {
  Rng rng(16);
  PairSpec p = random_pair_spec(rng, 4, 4, true);
  CHECK(rescale(p, Rat(1), Rat(1)) == p);

  PairSpec q = rescale(p, Rat(1, 2), Rat(3));
  CHECK(q.kappa_a(1) == p.kappa_a(1) / 2);
  CHECK(q.kappa_a(2) == p.kappa_a(2) / 4);
  CHECK(q.kappa_ab(2, 1) == p.kappa_ab(2, 1) * Rat(3, 4));

  CHECK(match_on_common_grid(opposite_partial_s(q), opposite_partial_s(p)).equal);
  CHECK_THROWS_AS(rescale(p, Rat(0), Rat(1)), argument_error);

  PairSpec two(rats({2, 0}), rats({1, 0}), {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}});
  CHECK(rescale(two, Rat(1, 2), Rat(1)).kappa_a(1) == 1);
}

TEST_CASE("pair spec validation") {
  CHECK_THROWS_AS(PairSpec(rats({}), rats({1}), {}), argument_error);
  CHECK_THROWS_AS(PairSpec(rats({1}), rats({1}), {}), argument_error);
  CHECK_THROWS_AS(PairSpec(rats({1}), rats({1}), {{Rat(0), Rat(0)}}), argument_error);
  CHECK_THROWS_AS(MomentSpec(2, 2).set_moment(0, 0, Rat(2)), argument_error);
}
