#pragma once

#include "bifree/mult_fn.hpp"
#include "bifree/series.hpp"
#include "bifree/transforms.hpp"

namespace bifree {

/// Two bi-free two-faced pairs (a1, b1), (a2, b2) destined for the
/// opposite-order product (a1 a2, b2 b1). Construction normalizes all four
/// first cumulants to 1 (the identities downstream assume it; nothing is
/// lost since every transform involved is invariant under the rescaling) and
/// retains the original scalars so round-trip checks can undo it.
class ProductContext {
public:
  ProductContext(const PairSpec& p1, const PairSpec& p2);

  const PairSpec& pair1() const { return p1_; }
  const PairSpec& pair2() const { return p2_; }
  int order_a() const { return p1_.order_a(); }
  int order_b() const { return p1_.order_b(); }

  /// Original kappa_1 values, in the order a1, b1, a2, b2.
  const Rat& scale_a1() const { return sa1_; }
  const Rat& scale_b1() const { return sb1_; }
  const Rat& scale_a2() const { return sa2_; }
  const Rat& scale_b2() const { return sb2_; }

private:
  PairSpec p1_, p2_;
  Rat sa1_, sb1_, sa2_, sb2_;
};

/// kappa_{n,m}(a1 a2, b2 b1) = sum over BNC(n,m) of
/// kappa_pi(a1,b1) kappa_{K(pi)}(a2,b2), including the marginal rows, which
/// the same sum turns into free multiplicative convolutions. Works for any
/// input specs with matching orders; no normalization is assumed here.
PairSpec product_pair_cumulants(const PairSpec& p1, const PairSpec& p2);
PairSpec product_pair_cumulants(const ProductContext& ctx);

/// The class decompositions of the same sum: phi_L collects the partitions
/// whose doubled block through 1_l reaches an even right node, phi_R the
/// complement. By construction phi_L + phi_R = K of the product pair.
Series2 phi_series_l(const PairSpec& p1, const PairSpec& p2);
Series2 phi_series_r(const PairSpec& p1, const PairSpec& p2);
Series2 phi_series_l(const ProductContext& ctx);
Series2 phi_series_r(const ProductContext& ctx);

/// The bottom-class sums: the (n+1, m) coefficient of psi_L sums
/// kappa_pi over BNC_Lb(2n+1, 2m) on the alternating word starting and
/// ending with the second pair's left face; psi_R mirrors with weight
/// z^n w^{m+1}. Parity purity makes every block read a single pair's
/// cumulant. Enumerations run over words up to `cap` positions.
Series2 psi_series_l(const PairSpec& p1, const PairSpec& p2, int cap = kDefaultEnumCap);
Series2 psi_series_r(const PairSpec& p1, const PairSpec& p2, int cap = kDefaultEnumCap);
Series2 psi_series_l(const ProductContext& ctx);
Series2 psi_series_r(const ProductContext& ctx);

/// Q_k(z,w) = K_{a_k,b_k}(c_{a_k}^{<-1>}(z), c_{b_k}^{<-1>}(w)).
Series2 q_series(const ProductContext& ctx, int which);

/// [Q1 + Q2 + (1/z + 1/w) Q1 Q2] / [1 - Q1 Q2 / (zw)], the closed form the
/// main expression lemma equates with K of the product pair composed at the
/// product's inverted cumulant series.
Series2 main_k_expression_rhs(const ProductContext& ctx);

/// The five lemma verifications and the head theorem, each an exact
/// truncated-series identity. Checks with series denominators compare in
/// cross-multiplied polynomial form.
SeriesMatch verify_decomposition(const ProductContext& ctx);
SeriesMatch verify_lemma_phi_l(const ProductContext& ctx);
SeriesMatch verify_lemma_phi_r(const ProductContext& ctx);
SeriesMatch verify_lemma_psi_l(const ProductContext& ctx);
SeriesMatch verify_lemma_psi_r(const ProductContext& ctx);
SeriesMatch verify_lemma_psi_solved(const ProductContext& ctx);
SeriesMatch verify_main_k_expression(const ProductContext& ctx);
/// S^op of the product equals the product of the S^op's, plus the
/// cross-multiplied identity the theorem's proof pivots on.
SeriesMatch verify_sop_multiplicativity(const ProductContext& ctx);

}  // namespace bifree
