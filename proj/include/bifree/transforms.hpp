#pragma once

#include <vector>

#include "bifree/bnc.hpp"
#include "bifree/series.hpp"

namespace bifree {

/// The distribution data of a two-faced pair (a, b), given by free cumulant
/// sequences for both faces and the mixed bi-free cumulant grid. Cumulants
/// are free parameters: any rational data is a valid distribution for the
/// formal identities in this library.
class PairSpec {
public:
  PairSpec(std::vector<Rat> kappa_a, std::vector<Rat> kappa_b,
           std::vector<std::vector<Rat>> kappa_ab);

  int order_a() const { return static_cast<int>(ka_.size()); }
  int order_b() const { return static_cast<int>(kb_.size()); }

  /// kappa_n(a), 1 <= n <= order_a.
  const Rat& kappa_a(int n) const { return ka_.at(n - 1); }
  /// kappa_m(b), 1 <= m <= order_b.
  const Rat& kappa_b(int m) const { return kb_.at(m - 1); }
  /// kappa_{n,m}(a, b), n, m >= 1.
  const Rat& kappa_ab(int n, int m) const { return kab_.at(n - 1).at(m - 1); }
  /// Block form: kappa(i, 0) = kappa_i(a), kappa(0, j) = kappa_j(b).
  const Rat& kappa(int i, int j) const;

  const std::vector<Rat>& kappa_a_seq() const { return ka_; }
  const std::vector<Rat>& kappa_b_seq() const { return kb_; }

  friend bool operator==(const PairSpec&, const PairSpec&) = default;

private:
  std::vector<Rat> ka_, kb_;
  std::vector<std::vector<Rat>> kab_;
};

/// Ordered joint moments phi(a^n b^m) on the rectangle 0..N x 0..M, with the
/// (0,0) entry pinned to 1.
class MomentSpec {
public:
  MomentSpec(int order_a, int order_b);

  int order_a() const { return na_; }
  int order_b() const { return nb_; }
  const Rat& moment(int n, int m) const { return grid_.at(n).at(m); }
  void set_moment(int n, int m, const Rat& v);

  friend bool operator==(const MomentSpec&, const MomentSpec&) = default;

private:
  int na_, nb_;
  std::vector<std::vector<Rat>> grid_;
};

/// m_n = sum over NC(n) of the block-wise cumulant products.
std::vector<Rat> free_cumulants_to_moments(const std::vector<Rat>& kappa);
/// kappa_n = sum over NC(n) of mu(pi, 1_n) times block-wise moment products;
/// exact inverse of the previous map.
std::vector<Rat> free_moments_to_cumulants(const std::vector<Rat>& moments);

/// phi(a^n b^m) = sum over BNC(n,m) of kappa_pi(a,b).
MomentSpec bifree_cumulants_to_moments(const PairSpec& p);
/// Exact inverse through the bi-non-crossing Moebius function.
PairSpec bifree_moments_to_cumulants(const MomentSpec& m);

/// Moment series h (constant term 1), cumulant series c, and psi = h - 1 of
/// the chosen face, truncated at that face's order.
Series1 series_h(const PairSpec& p, Side side);
Series1 series_c(const PairSpec& p, Side side);
Series1 series_psi(const PairSpec& p, Side side);

/// S-transform via cumulants: (1/z) c^{<-1>}(z). Order drops by one; the
/// constant term is 1/kappa_1. Requires kappa_1 != 0.
Series1 s_transform(const PairSpec& p, Side side);
/// The same function via the moment route ((1+z)/z) psi^{<-1>}(z); the two
/// must agree coefficient-wise, which the verification suites check.
Series1 s_transform_via_moments(const PairSpec& p, Side side);

struct BiSeries {
  Series2 h;  ///< H_{a,b}, moments
  Series2 c;  ///< C_{a,b}, all cumulants (kappa_{0,0} = 1)
  Series2 k;  ///< K_{a,b} = C - c_a - c_b - 1, support n,m >= 1
};
BiSeries series_hck(const PairSpec& p);

/// K_{a,b}(c_a^{<-1>}(z), c_b^{<-1>}(w)), the composed kernel every
/// S-transform formula is built from. Scale-invariant.
Series2 k_hat(const PairSpec& p);

/// The h/H/C exchange identity
/// h_a(z) + h_b(w) = h_a h_b / H + C(z h_a(z), w h_b(w)).
SeriesMatch verify_moment_cumulant_identity(const PairSpec& p);

/// Partial bi-free S-transform, cumulant form
/// 1 + (1+z+w)/(zw) K(c_a^{<-1>}, c_b^{<-1>}); computed both ways with the
/// moment (H) form and checked for agreement before returning.
Series2 partial_s(const PairSpec& p);
Series2 partial_s_cumulant_form(const PairSpec& p);
Series2 partial_s_moment_form(const PairSpec& p);
SeriesMatch partial_s_forms_match(const PairSpec& p);

/// Opposite partial S-transform, ratio form
/// (1 + K_hat/z) / (1 + K_hat/w); the moment form is evaluated on the
/// kappa_1-normalized spec and both are checked for agreement (in
/// cross-multiplied polynomial form) before returning.
Series2 opposite_partial_s(const PairSpec& p);
Series2 opposite_partial_s_ratio_form(const PairSpec& p);
SeriesMatch opposite_s_forms_match(const PairSpec& p);

/// kappa_n(a) -> lambda^n kappa_n(a), kappa_m(b) -> mu^m kappa_m(b),
/// kappa_{n,m} -> lambda^n mu^m kappa_{n,m}.
PairSpec rescale(const PairSpec& p, const Rat& lambda, const Rat& mu);

/// The pair (b, a): faces and the mixed grid transpose.
PairSpec swapped(const PairSpec& p);

}  // namespace bifree
