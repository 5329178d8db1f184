#include "bifree/product.hpp"

#include <stdexcept>

#include "bifree/errors.hpp"
#include "lattice_sums.hpp"

namespace bifree {

namespace {

void check_same_orders(const PairSpec& p1, const PairSpec& p2, const char* who) {
  if (p1.order_a() != p2.order_a() || p1.order_b() != p2.order_b())
    throw argument_error(std::string(who) + ": the two pairs must share orders");
}

Rat eval_types(const PairSpec& p, const std::vector<std::pair<int, int>>& types) {
  Rat acc(1);
  for (auto [i, j] : types) acc *= p.kappa(i, j);
  return acc;
}

Series2 class_sum(const PairSpec& p1, const PairSpec& p2, bool left_class) {
  check_same_orders(p1, p2, "phi_series");
  const int nz = p1.order_a(), nw = p1.order_b();
  Series2 out(nz, nw);
  for (int n = 1; n <= nz; ++n)
    for (int m = 1; m <= nw; ++m) {
      const auto& tables = detail::bnc_product_tables(n, m);
      const auto& rows = left_class ? tables.left : tables.right;
      Rat acc = 0;
      for (const auto& row : rows)
        acc += Rat(row.count) * eval_types(p1, row.pi_types) * eval_types(p2, row.k_types);
      out.set_coeff(n, m, acc);
    }
  return out;
}

MultFn face_fn(const PairSpec& p, Side side) {
  return MultFn(side == Side::Left ? p.kappa_a_seq() : p.kappa_b_seq());
}

}  // namespace

ProductContext::ProductContext(const PairSpec& p1, const PairSpec& p2)
    : p1_(p1), p2_(p2) {
  check_same_orders(p1, p2, "ProductContext");
  sa1_ = p1.kappa_a(1);
  sb1_ = p1.kappa_b(1);
  sa2_ = p2.kappa_a(1);
  sb2_ = p2.kappa_b(1);
  if (sa1_ == 0 || sb1_ == 0 || sa2_ == 0 || sb2_ == 0)
    throw domain_error("ProductContext: every face needs kappa_1 != 0");
  p1_ = rescale(p1, Rat(1) / sa1_, Rat(1) / sb1_);
  p2_ = rescale(p2, Rat(1) / sa2_, Rat(1) / sb2_);
}

PairSpec product_pair_cumulants(const PairSpec& p1, const PairSpec& p2) {
  check_same_orders(p1, p2, "product_pair_cumulants");
  const int nz = p1.order_a(), nw = p1.order_b();
  auto cell = [&](int n, int m) {
    Rat acc = 0;
    for (const auto& row : detail::bnc_product_tables(n, m).all)
      acc += Rat(row.count) * eval_types(p1, row.pi_types) * eval_types(p2, row.k_types);
    return acc;
  };
  std::vector<Rat> ka(nz), kb(nw);
  for (int n = 1; n <= nz; ++n) ka[n - 1] = cell(n, 0);
  for (int m = 1; m <= nw; ++m) kb[m - 1] = cell(0, m);
  std::vector<std::vector<Rat>> kab(nz, std::vector<Rat>(nw));
  for (int n = 1; n <= nz; ++n)
    for (int m = 1; m <= nw; ++m) kab[n - 1][m - 1] = cell(n, m);
  return PairSpec(std::move(ka), std::move(kb), std::move(kab));
}

PairSpec product_pair_cumulants(const ProductContext& ctx) {
  return product_pair_cumulants(ctx.pair1(), ctx.pair2());
}

Series2 phi_series_l(const PairSpec& p1, const PairSpec& p2) {
  return class_sum(p1, p2, true);
}

Series2 phi_series_r(const PairSpec& p1, const PairSpec& p2) {
  return class_sum(p1, p2, false);
}

Series2 phi_series_l(const ProductContext& ctx) {
  return phi_series_l(ctx.pair1(), ctx.pair2());
}

Series2 phi_series_r(const ProductContext& ctx) {
  return phi_series_r(ctx.pair1(), ctx.pair2());
}

namespace {

// Shared evaluator for the two bottom-class series. `rows` describe blocks
// as (pair, lefts, rights); the word shape fixes which pair owns a parity.
Series2 psi_sum(const PairSpec& p1, const PairSpec& p2, bool left_variant, int cap) {
  check_same_orders(p1, p2, "psi_series");
  const int nz = p1.order_a(), nw = p1.order_b();
  Series2 out(nz, nw);
  for (int n = 0; n <= (left_variant ? nz - 1 : nz); ++n)
    for (int m = 0; m <= (left_variant ? nw : nw - 1); ++m) {
      const int word = left_variant ? 2 * n + 1 + 2 * m : 2 * n + 2 * m + 1;
      if (word > cap) throw size_error("psi_series: word length exceeds cap");
      const auto& rows =
          left_variant ? detail::psi_l_rows(n, m) : detail::psi_r_rows(n, m);
      Rat acc = 0;
      for (const auto& row : rows) {
        Rat term(row.count);
        for (auto [pair, lefts, rights] : row.blocks)
          term *= (pair == 1 ? p1 : p2).kappa(lefts, rights);
        acc += term;
      }
      if (left_variant)
        out.set_coeff(n + 1, m, acc);
      else
        out.set_coeff(n, m + 1, acc);
    }
  return out;
}

}  // namespace

Series2 psi_series_l(const PairSpec& p1, const PairSpec& p2, int cap) {
  return psi_sum(p1, p2, true, cap);
}

Series2 psi_series_r(const PairSpec& p1, const PairSpec& p2, int cap) {
  return psi_sum(p1, p2, false, cap);
}

Series2 psi_series_l(const ProductContext& ctx) {
  return psi_series_l(ctx.pair1(), ctx.pair2());
}

Series2 psi_series_r(const ProductContext& ctx) {
  return psi_series_r(ctx.pair1(), ctx.pair2());
}

Series2 q_series(const ProductContext& ctx, int which) {
  if (which != 1 && which != 2) throw argument_error("q_series: which must be 1 or 2");
  return k_hat(which == 1 ? ctx.pair1() : ctx.pair2());
}

Series2 main_k_expression_rhs(const ProductContext& ctx) {
  const int nz = ctx.order_a(), nw = ctx.order_b();
  Series2 q1 = q_series(ctx, 1), q2 = q_series(ctx, 2);
  Series2 qq = q1 * q2;
  Series2 numer = q1 + q2 + div_monomial(qq, kMonZ) + div_monomial(qq, kMonW);
  Series2 denom = Series2::one(nz, nw) - div_monomial(qq, kMonZW);
  return div_unit(numer, denom);
}

SeriesMatch verify_decomposition(const ProductContext& ctx) {
  Series2 k_prod = series_hck(product_pair_cumulants(ctx)).k;
  return match_on_common_grid(phi_series_l(ctx) + phi_series_r(ctx), k_prod);
}

namespace {

struct PinchedSeries {
  Series1 f12, f21;  // pinched convolutions of the left-face functions
  Series1 g12, g21;  // and of the right-face functions
};

PinchedSeries pinched(const ProductContext& ctx) {
  MultFn f1 = face_fn(ctx.pair1(), Side::Left), f2 = face_fn(ctx.pair2(), Side::Left);
  MultFn g1 = face_fn(ctx.pair1(), Side::Right), g2 = face_fn(ctx.pair2(), Side::Right);
  return {phi_series(pinched_convolve(f1, f2)), phi_series(pinched_convolve(f2, f1)),
          phi_series(pinched_convolve(g1, g2)), phi_series(pinched_convolve(g2, g1))};
}

}  // namespace

SeriesMatch verify_lemma_phi_l(const ProductContext& ctx) {
  const int nz = ctx.order_a(), nw = ctx.order_b();
  PinchedSeries ps = pinched(ctx);
  Series2 lhs = phi_series_l(ctx) * embed_z(ps.f12, nz, nw);
  Series2 rhs = compose2(series_hck(ctx.pair1()).k, ps.f12, ps.g12) * psi_series_l(ctx);
  return match_on_common_grid(lhs, rhs);
}

SeriesMatch verify_lemma_phi_r(const ProductContext& ctx) {
  const int nz = ctx.order_a(), nw = ctx.order_b();
  PinchedSeries ps = pinched(ctx);
  Series2 lhs = phi_series_r(ctx) * embed_w(ps.g21, nz, nw);
  Series2 rhs = compose2(series_hck(ctx.pair2()).k, ps.f21, ps.g21) * psi_series_r(ctx);
  return match_on_common_grid(lhs, rhs);
}

SeriesMatch verify_lemma_psi_l(const ProductContext& ctx) {
  const int nz = ctx.order_a(), nw = ctx.order_b();
  PinchedSeries ps = pinched(ctx);
  Series2 f21 = embed_z(ps.f21, nz, nw), g21 = embed_w(ps.g21, nz, nw);
  Series2 lhs = psi_series_l(ctx) * f21 * g21;
  Series2 rhs = embed_z(ps.f12, nz, nw) * f21 * g21 +
                (compose2(series_hck(ctx.pair2()).k, ps.f21, ps.g21) * psi_series_r(ctx))
                    .times_z();
  return match_on_common_grid(lhs, rhs);
}

SeriesMatch verify_lemma_psi_r(const ProductContext& ctx) {
  const int nz = ctx.order_a(), nw = ctx.order_b();
  PinchedSeries ps = pinched(ctx);
  Series2 f12 = embed_z(ps.f12, nz, nw), g12 = embed_w(ps.g12, nz, nw);
  Series2 lhs = psi_series_r(ctx) * f12 * g12;
  Series2 rhs = embed_w(ps.g21, nz, nw) * f12 * g12 +
                (compose2(series_hck(ctx.pair1()).k, ps.f12, ps.g12) * psi_series_l(ctx))
                    .times_w();
  return match_on_common_grid(lhs, rhs);
}

SeriesMatch verify_lemma_psi_solved(const ProductContext& ctx) {
  const int nz = ctx.order_a(), nw = ctx.order_b();
  PairSpec prod = product_pair_cumulants(ctx);
  Series1 inv_f = invert1(series_c(prod, Side::Left));
  Series1 inv_g = invert1(series_c(prod, Side::Right));
  Series2 psi_big_l = compose2(psi_series_l(ctx), inv_f, inv_g);
  Series2 psi_big_r = compose2(psi_series_r(ctx), inv_f, inv_g);
  Series2 q1 = q_series(ctx, 1), q2 = q_series(ctx, 2);
  Series2 one = Series2::one(nz, nw);
  Series2 denom = one - div_monomial(q1 * q2, kMonZW);
  Series1 inv_f1 = invert1(series_c(ctx.pair1(), Side::Left));
  Series1 inv_g2 = invert1(series_c(ctx.pair2(), Side::Right));
  SeriesMatch left = match_on_common_grid(
      psi_big_l * denom, embed_z(inv_f1, nz, nw) * (one + div_monomial(q2, kMonZ)));
  if (!left.equal) return left;
  return match_on_common_grid(
      psi_big_r * denom, embed_w(inv_g2, nz, nw) * (one + div_monomial(q1, kMonW)));
}

SeriesMatch verify_main_k_expression(const ProductContext& ctx) {
  const int nz = ctx.order_a(), nw = ctx.order_b();
  PairSpec prod = product_pair_cumulants(ctx);
  Series2 k_comp = k_hat(prod);
  Series2 q1 = q_series(ctx, 1), q2 = q_series(ctx, 2);
  Series2 qq = q1 * q2;
  Series2 lhs = k_comp * (Series2::one(nz, nw) - div_monomial(qq, kMonZW));
  Series2 rhs = q1 + q2 + div_monomial(qq, kMonZ) + div_monomial(qq, kMonW);
  return match_on_common_grid(lhs, rhs);
}

SeriesMatch verify_sop_multiplicativity(const ProductContext& ctx) {
  const int nz = ctx.order_a(), nw = ctx.order_b();
  PairSpec prod = product_pair_cumulants(ctx);
  SeriesMatch transforms = match_on_common_grid(
      opposite_partial_s(prod),
      opposite_partial_s(ctx.pair1()) * opposite_partial_s(ctx.pair2()));
  if (!transforms.equal) return transforms;
  // The proof's pivot identity, cleared of denominators:
  // (1 + Q1/w)(1 + Q2/w)(1 + Khat/z) = (1 + Q1/z)(1 + Q2/z)(1 + Khat/w).
  Series2 one = Series2::one(nz, nw);
  Series2 q1 = q_series(ctx, 1), q2 = q_series(ctx, 2);
  Series2 kc = k_hat(prod);
  Series2 lhs = (one + div_monomial(q1, kMonW)) * (one + div_monomial(q2, kMonW)) *
                (one + div_monomial(kc, kMonZ));
  Series2 rhs = (one + div_monomial(q1, kMonZ)) * (one + div_monomial(q2, kMonZ)) *
                (one + div_monomial(kc, kMonW));
  return match_on_common_grid(lhs, rhs);
}

}  // namespace bifree
