#include "bifree/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "bifree/bnc.hpp"
#include "bifree/conditional.hpp"
#include "bifree/errors.hpp"
#include "bifree/mult_fn.hpp"
#include "bifree/product.hpp"
#include "bifree/rng.hpp"
#include "bifree/series.hpp"
#include "bifree/transforms.hpp"

namespace bifree {

namespace {

using Clock = std::chrono::steady_clock;

struct Recorder {
  std::vector<IdentityResult>& out;
  std::string suite;
  int order_a, order_b;
  int trial = -1;

  void boolean(const std::string& name, bool ok) {
    out.push_back({suite, name, trial, order_a, order_b, ok, std::nullopt, 0.0});
  }
  void matched(const std::string& name, const SeriesMatch& m) {
    IdentityResult r{suite, name, trial, order_a, order_b, m.equal, std::nullopt, 0.0};
    if (!m.equal) r.first_failure = std::make_pair(m.fail_i, m.fail_j);
    out.push_back(r);
  }
};

PairSpec random_normalized_pair_spec(Rng& rng, int na, int nb) {
  std::vector<Rat> ka(na), kb(nb);
  ka[0] = 1;
  kb[0] = 1;
  for (int n = 2; n <= na; ++n) ka[n - 1] = random_rational(rng);
  for (int m = 2; m <= nb; ++m) kb[m - 1] = random_rational(rng);
  std::vector<std::vector<Rat>> kab(na, std::vector<Rat>(nb));
  for (auto& row : kab)
    for (auto& cell : row) cell = random_rational(rng);
  return PairSpec(std::move(ka), std::move(kb), std::move(kab));
}

ConditionalPairSpec random_conditional_spec(Rng& rng, int na, int nb) {
  PairSpec base = random_normalized_pair_spec(rng, na, nb);
  std::vector<Rat> kca(na), kcb(nb);
  for (auto& v : kca) v = random_rational(rng);
  for (auto& v : kcb) v = random_rational(rng);
  std::vector<std::vector<Rat>> grid(na, std::vector<Rat>(nb));
  for (auto& row : grid)
    for (auto& cell : row) cell = random_rational(rng);
  return ConditionalPairSpec(std::move(base), std::move(kca), std::move(kcb),
                             std::move(grid));
}

// ---- trial-independent suites -------------------------------------------

void suite_counts(Recorder& rec, const VerifyConfig& cfg) {
  const int nmax = std::min(8, cfg.cap);
  bool nc_ok = true, prime_ok = true;
  for (int n = 1; n <= nmax; ++n) {
    nc_ok = nc_ok && Int(enumerate_nc(n, cfg.cap).size()) == catalan(n);
    prime_ok = prime_ok && Int(enumerate_nc_prime(n, cfg.cap).size()) == catalan(n - 1);
  }
  rec.boolean("nc_counts_catalan", nc_ok);
  rec.boolean("nc_prime_counts_catalan", prime_ok);
  bool bnc_ok = true;
  for (int n = 0; n <= nmax; ++n)
    for (int m = 0; n + m <= nmax; ++m) {
      if (n + m < 1) continue;
      bnc_ok = bnc_ok && Int(enumerate_bnc(n, m, cfg.cap).size()) == catalan(n + m);
    }
  rec.boolean("bnc_counts_catalan", bnc_ok);
}

void suite_kreweras(Recorder& rec, const VerifyConfig& cfg) {
  Partition golden =
      Partition::from_blocks(7, {{1, 4}, {2, 3}, {5}, {6, 7}});
  Partition expected = Partition::from_blocks(7, {{1, 3}, {2}, {4, 5, 7}, {6}});
  rec.boolean("kreweras_golden_example", kreweras_nc(golden) == expected);

  bool blocks_ok = true;
  for (int n = 1; n <= std::min(6, cfg.cap); ++n)
    for (const Partition& p : enumerate_nc(n, cfg.cap))
      blocks_ok = blocks_ok &&
                  p.block_count() + kreweras_nc(p).block_count() == n + 1;
  rec.boolean("kreweras_block_count", blocks_ok);

  // Join characterization: for p in NC'(n) put p on odd interleaved slots;
  // K(p) is the unique q on even slots keeping the union non-crossing and
  // joining with the pairing {2k-1, 2k} to the full partition.
  bool join_ok = true;
  for (int n = 2; n <= std::min(5, cfg.cap); ++n) {
    std::vector<std::vector<int>> pair_blocks;
    for (int k = 1; k <= n; ++k) pair_blocks.push_back({2 * k - 1, 2 * k});
    Partition pairing = Partition::from_blocks(2 * n, pair_blocks);
    for (const Partition& p : enumerate_nc_prime(n, cfg.cap)) {
      int witnesses = 0;
      bool match = false;
      for (const Partition& q : enumerate_nc(n, cfg.cap)) {
        std::vector<int> m(2 * n);
        for (int e = 1; e <= n; ++e) {
          m[2 * e - 2] = p.block_id(e);
          m[2 * e - 1] = p.block_count() + q.block_id(e);
        }
        Partition united = Partition::from_membership(m);
        if (!united.is_noncrossing()) continue;
        if (join_nc(united, pairing).block_count() != 1) continue;
        ++witnesses;
        match = q == kreweras_nc(p);
      }
      join_ok = join_ok && witnesses == 1 && match;
    }
  }
  rec.boolean("kreweras_join_characterization", join_ok);

  bool mobius_ok = true;
  for (int n = 1; n <= std::min(6, cfg.cap); ++n) {
    for (const Partition& p : enumerate_nc(n, cfg.cap))
      mobius_ok = mobius_ok &&
                  mobius_nc(p, Partition::full(n)) == Rat(mobius_top(p));
  }
  rec.boolean("mobius_recursion_vs_closed_form", mobius_ok);
}

// ---- per-trial suites ----------------------------------------------------

void suite_conversions(Recorder& rec, Rng& rng, int na, int nb) {
  std::vector<Rat> k = random_rationals(rng, na + nb);
  rec.boolean("free_round_trip",
              free_moments_to_cumulants(free_cumulants_to_moments(k)) == k);
  PairSpec p = random_pair_spec(rng, na, nb, false);
  rec.boolean("bifree_round_trip",
              bifree_moments_to_cumulants(bifree_cumulants_to_moments(p)) == p);
  MomentSpec ms = random_moment_spec(rng, na, nb);
  rec.boolean("bifree_round_trip_from_moments",
              bifree_cumulants_to_moments(bifree_moments_to_cumulants(ms)) == ms);
}

void suite_stransform(Recorder& rec, Rng& rng, int na, int nb) {
  PairSpec p = random_pair_spec(rng, na, nb, true);
  rec.boolean("s_transform_routes_agree_a",
              s_transform(p, Side::Left) == s_transform_via_moments(p, Side::Left));
  rec.boolean("s_transform_routes_agree_b",
              s_transform(p, Side::Right) == s_transform_via_moments(p, Side::Right));
  Series1 h = series_h(p, Side::Left);
  Series1 chi = invert1(series_psi(p, Side::Left));
  Series1 expect = Series1::constant(1, h.order());
  if (h.order() >= 1) expect.set_coeff(1, 1);
  rec.boolean("h_of_chi_is_one_plus_z", compose1(h, chi) == expect);
}

void suite_multfn(Recorder& rec, Rng& rng, int order) {
  std::vector<Rat> v1 = random_rationals(rng, order), v2 = random_rationals(rng, order);
  v1[0] = 1;
  v2[0] = 1;
  MultFn f1{std::move(v1)}, f2{std::move(v2)};
  rec.boolean("star_commutative", star_convolve(f1, f2) == star_convolve(f2, f1));

  Series1 phi1 = phi_series(f1);
  Series1 phi_star = phi_series(star_convolve(f1, f2));
  Series1 phi_pinch = phi_series(pinched_convolve(f1, f2));
  rec.boolean("pinch_compose_identity", compose1(phi1, phi_pinch) == phi_star);
  rec.boolean("eq_3_1", compose1(phi_pinch, invert1(phi_star)) == invert1(phi1));
  Series1 lhs = invert1(phi_star).times_z();
  Series1 rhs = invert1(phi1) * invert1(phi_series(f2));
  rec.boolean("eq_3_2", lhs == rhs);
}

void suite_hck(Recorder& rec, Rng& rng, int na, int nb) {
  PairSpec p = random_pair_spec(rng, na, nb, false);
  rec.matched("h_H_C_identity", verify_moment_cumulant_identity(p));
}

void suite_prop_sop(Recorder& rec, Rng& rng, int na, int nb) {
  PairSpec p = random_pair_spec(rng, na, nb, true);
  rec.matched("partial_s_forms", partial_s_forms_match(p));
  rec.matched("opposite_s_forms", opposite_s_forms_match(p));
  rec.matched("s_swap_symmetry",
              match_on_common_grid(partial_s(swapped(p)), partial_s(p).transposed()));
  Series2 sop = opposite_partial_s(p);
  rec.matched("sop_swap_antisymmetry",
              match_on_common_grid(
                  opposite_partial_s(swapped(p)),
                  div_unit(Series2::one(sop.order_w(), sop.order_z()),
                           sop.transposed())));
  PairSpec scaled = rescale(p, random_nonzero_rational(rng), random_nonzero_rational(rng));
  rec.matched("sop_rescale_invariance",
              match_on_common_grid(opposite_partial_s(scaled), sop));
}

ProductContext random_context(Rng& rng, int na, int nb) {
  PairSpec p1 = random_pair_spec(rng, na, nb, true);
  PairSpec p2 = random_pair_spec(rng, na, nb, true);
  return ProductContext(p1, p2);
}

void suite_decomposition(Recorder& rec, Rng& rng, int na, int nb) {
  ProductContext ctx = random_context(rng, na, nb);
  rec.matched("phi_l_plus_phi_r_is_k", verify_decomposition(ctx));
}

void suite_lemmas(Recorder& rec, Rng& rng, int na, int nb) {
  ProductContext ctx = random_context(rng, na, nb);
  rec.matched("lemma_phi_l", verify_lemma_phi_l(ctx));
  rec.matched("lemma_phi_r", verify_lemma_phi_r(ctx));
  rec.matched("lemma_psi_l", verify_lemma_psi_l(ctx));
  rec.matched("lemma_psi_r", verify_lemma_psi_r(ctx));
  rec.matched("lemma_psi_solved", verify_lemma_psi_solved(ctx));
}

void suite_kexpr(Recorder& rec, Rng& rng, int na, int nb) {
  ProductContext ctx = random_context(rng, na, nb);
  rec.matched("main_k_expression", verify_main_k_expression(ctx));
}

void suite_sop(Recorder& rec, Rng& rng, int na, int nb) {
  ProductContext ctx = random_context(rng, na, nb);
  rec.matched("sop_multiplicative", verify_sop_multiplicativity(ctx));
  PairSpec s1 = rescale(ctx.pair1(), random_nonzero_rational(rng),
                        random_nonzero_rational(rng));
  PairSpec s2 = rescale(ctx.pair2(), random_nonzero_rational(rng),
                        random_nonzero_rational(rng));
  rec.matched("sop_multiplicative_rescaled",
              verify_sop_multiplicativity(ProductContext(s1, s2)));
}

void suite_conditional(Recorder& rec, Rng& rng, int na, int nb) {
  ConditionalPairSpec cs1 = random_conditional_spec(rng, na, nb);
  ConditionalPairSpec cs2 = random_conditional_spec(rng, na, nb);
  ConditionalPairSpec r1 = ConditionalPairSpec::from_base(cs1.base());
  ConditionalPairSpec r2 = ConditionalPairSpec::from_base(cs2.base());

  // phi = psi turns the opposite-order display into the main expression.
  ProductContext ctx(cs1.base(), cs2.base());
  rec.matched("conditional_opposite_reduction",
              match_on_common_grid(conditional_k_rhs_opposite_order(r1, r2),
                                   main_k_expression_rhs(ctx)));

  // ... and the same-order display into the kernel S_{a,b} multiplicativity
  // implies: (S1 S2 - 1) zw / (1+z+w).
  const int nz = na, nw = nb;
  Series2 s_prod = partial_s(cs1.base()) * partial_s(cs2.base());
  Series2 kernel = div_unit(
      (s_prod - Series2::one(nz, nw)).times_z().times_w(),
      Series2::one(nz, nw) + Series2::var_z(nz, nw) + Series2::var_w(nz, nw));
  rec.matched("conditional_same_order_reduction",
              match_on_common_grid(conditional_k_rhs_same_order(r1, r2), kernel));

  // S^c S = 1 under phi = psi.
  Series1 sc = conditional_s(r1, Side::Left);
  Series1 s = s_transform(cs1.base(), Side::Left);
  rec.boolean("conditional_s_reduction",
              sc * s == Series1::constant(1, sc.order()));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "counts", "kreweras", "conversions", "stransform", "multfn",  "hck",
      "prop_sop", "decomposition", "lemmas", "kexpr", "sop", "conditional"};
  return names;
}

bool all_ok(const std::vector<IdentityResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const IdentityResult& r) { return r.ok; });
}

std::vector<IdentityResult> run_verify(const VerifyConfig& cfg) {
  if (cfg.order_a < 1 || cfg.order_b < 1)
    throw parse_error("verify: orders must be >= 1");
  if (cfg.trials < 1) throw parse_error("verify: trials must be >= 1");
  if (cfg.order_a + cfg.order_b > cfg.cap)
    throw parse_error("verify: orders exceed the enumeration cap");

  std::vector<std::string> selected = cfg.suites.empty() ? suite_names() : cfg.suites;
  for (const auto& s : selected)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw parse_error("verify: unknown suite '" + s + "'");

  // The psi sums enumerate words of length 2(N-1)+1+2M and 2N+2(M-1)+1.
  const bool lemmas_selected =
      std::find(selected.begin(), selected.end(), "lemmas") != selected.end();
  if (lemmas_selected && 2 * cfg.order_a + 2 * cfg.order_b - 1 > cfg.cap)
    throw parse_error("verify: lemma suite word length exceeds the cap");

  std::vector<IdentityResult> results;
  for (const std::string& name : selected) {
    auto suite_index = static_cast<std::uint64_t>(
        std::find(suite_names().begin(), suite_names().end(), name) -
        suite_names().begin());
    Recorder rec{results, name, cfg.order_a, cfg.order_b};
    auto timed = [&](auto&& fn) {
      std::size_t first = results.size();
      auto t0 = Clock::now();
      fn();
      double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      for (std::size_t i = first; i < results.size(); ++i)
        results[i].elapsed_ms = ms / static_cast<double>(results.size() - first);
    };
    if (name == "counts" || name == "kreweras") {
      timed([&] {
        if (name == "counts")
          suite_counts(rec, cfg);
        else
          suite_kreweras(rec, cfg);
      });
      continue;
    }
    for (int trial = 0; trial < cfg.trials; ++trial) {
      Rng rng(cfg.seed + 1000003ull * suite_index + static_cast<std::uint64_t>(trial));
      rec.trial = trial;
      timed([&] {
        if (name == "conversions")
          suite_conversions(rec, rng, cfg.order_a, cfg.order_b);
        else if (name == "stransform")
          suite_stransform(rec, rng, cfg.order_a, cfg.order_b);
        else if (name == "multfn")
          suite_multfn(rec, rng, cfg.order_a);
        else if (name == "hck")
          suite_hck(rec, rng, cfg.order_a, cfg.order_b);
        else if (name == "prop_sop")
          suite_prop_sop(rec, rng, cfg.order_a, cfg.order_b);
        else if (name == "decomposition")
          suite_decomposition(rec, rng, cfg.order_a, cfg.order_b);
        else if (name == "lemmas")
          suite_lemmas(rec, rng, cfg.order_a, cfg.order_b);
        else if (name == "kexpr")
          suite_kexpr(rec, rng, cfg.order_a, cfg.order_b);
        else if (name == "sop")
          suite_sop(rec, rng, cfg.order_a, cfg.order_b);
        else if (name == "conditional")
          suite_conditional(rec, rng, cfg.order_a, cfg.order_b);
      });
    }
  }
  return results;
}

}  // namespace bifree
