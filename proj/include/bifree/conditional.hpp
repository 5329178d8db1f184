#pragma once

#include "bifree/series.hpp"
#include "bifree/transforms.hpp"

namespace bifree {

/// A two-faced pair in a two-state setting: the base cumulants (with respect
/// to the second state) plus conditional cumulant data. The conditional
/// grids are free parameters here; no two-state moment theory is derived
/// from them.
class ConditionalPairSpec {
public:
  ConditionalPairSpec(PairSpec base, std::vector<Rat> kappa_c_a,
                      std::vector<Rat> kappa_c_b,
                      std::vector<std::vector<Rat>> kappa_c_ab);

  /// The phi = psi degenerate case: conditional data copied from the base.
  static ConditionalPairSpec from_base(const PairSpec& base);

  const PairSpec& base() const { return base_; }
  const Rat& kappa_c_a(int n) const { return kca_.at(n - 1); }
  const Rat& kappa_c_b(int m) const { return kcb_.at(m - 1); }
  const Rat& kappa_c_ab(int n, int m) const { return kcab_.at(n - 1).at(m - 1); }
  const std::vector<Rat>& kappa_c_a_seq() const { return kca_; }
  const std::vector<Rat>& kappa_c_b_seq() const { return kcb_; }

  /// c^c(z) = sum kappa^c_n z^n for the chosen face.
  Series1 conditional_c(Side side) const;
  /// K^c(z,w) = sum_{n,m>=1} kappa^c_{n,m} z^n w^m.
  Series2 conditional_k() const;

private:
  PairSpec base_;
  std::vector<Rat> kca_, kcb_;
  std::vector<std::vector<Rat>> kcab_;
};

/// Pop-Wang conditional S-transform S^c(z) = c^c(c^{<-1>}(z)) / c^{<-1>}(z),
/// multiplicative for conditionally free products. Requires kappa_1 != 0 in
/// the base; the order drops by one and the constant term is kappa^c_1.
Series1 conditional_s(const ConditionalPairSpec& cs, Side side);

/// Right-hand side of the conditional kernel expression for the same-order
/// product (a1 a2, b1 b2): the c^c-weighted K^c_{a2,b2} term plus the
/// bracketed K_{a2,b2} factor applied to K^c_{a1,b1}, everything composed at
/// the matching inverted cumulant series. Base specs must be normalized
/// (kappa_1 = 1 on every face). Under kappa^c = kappa this reduces to the
/// kernel implied by multiplicativity of the partial S-transform.
Series2 conditional_k_rhs_same_order(const ConditionalPairSpec& cs1,
                                     const ConditionalPairSpec& cs2);

/// Right-hand side of the conditional analogue of the main expression lemma
/// for the opposite-order product (a1 a2, b2 b1). Under kappa^c = kappa this
/// reduces to [Q1 + Q2 + (1/z + 1/w) Q1 Q2] / [1 - Q1 Q2/(zw)].
Series2 conditional_k_rhs_opposite_order(const ConditionalPairSpec& cs1,
                                         const ConditionalPairSpec& cs2);

}  // namespace bifree
