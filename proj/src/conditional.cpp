#include "bifree/conditional.hpp"

#include "bifree/errors.hpp"

namespace bifree {

ConditionalPairSpec::ConditionalPairSpec(PairSpec base, std::vector<Rat> kappa_c_a,
                                         std::vector<Rat> kappa_c_b,
                                         std::vector<std::vector<Rat>> kappa_c_ab)
    : base_(std::move(base)),
      kca_(std::move(kappa_c_a)),
      kcb_(std::move(kappa_c_b)),
      kcab_(std::move(kappa_c_ab)) {
  if (static_cast<int>(kca_.size()) != base_.order_a() ||
      static_cast<int>(kcb_.size()) != base_.order_b())
    throw argument_error("ConditionalPairSpec: conditional orders must match the base");
  if (static_cast<int>(kcab_.size()) != base_.order_a())
    throw argument_error("ConditionalPairSpec: conditional grid has wrong row count");
  for (const auto& row : kcab_)
    if (static_cast<int>(row.size()) != base_.order_b())
      throw argument_error("ConditionalPairSpec: conditional grid has wrong column count");
}

ConditionalPairSpec ConditionalPairSpec::from_base(const PairSpec& base) {
  std::vector<std::vector<Rat>> grid(base.order_a(), std::vector<Rat>(base.order_b()));
  for (int n = 1; n <= base.order_a(); ++n)
    for (int m = 1; m <= base.order_b(); ++m) grid[n - 1][m - 1] = base.kappa_ab(n, m);
  return ConditionalPairSpec(base, base.kappa_a_seq(), base.kappa_b_seq(), std::move(grid));
}

Series1 ConditionalPairSpec::conditional_c(Side side) const {
  const auto& seq = side == Side::Left ? kca_ : kcb_;
  Series1 s(static_cast<int>(seq.size()));
  for (std::size_t n = 0; n < seq.size(); ++n) s.set_coeff(static_cast<int>(n) + 1, seq[n]);
  return s;
}

Series2 ConditionalPairSpec::conditional_k() const {
  Series2 k(base_.order_a(), base_.order_b());
  for (int n = 1; n <= base_.order_a(); ++n)
    for (int m = 1; m <= base_.order_b(); ++m) k.set_coeff(n, m, kcab_[n - 1][m - 1]);
  return k;
}

Series1 conditional_s(const ConditionalPairSpec& cs, Side side) {
  const PairSpec& base = cs.base();
  if ((side == Side::Left ? base.kappa_a(1) : base.kappa_b(1)) == 0)
    throw domain_error("conditional_s: kappa_1 of the requested face is zero");
  Series1 cinv = invert1(series_c(base, side));
  Series1 numer = compose1(cs.conditional_c(side), cinv);
  return div_unit(div_z(numer), div_z(cinv));
}

namespace {

void require_normalized(const ConditionalPairSpec& cs, const char* who) {
  if (cs.base().kappa_a(1) != 1 || cs.base().kappa_b(1) != 1)
    throw domain_error(std::string(who) + ": base specs must be normalized to kappa_1 = 1");
}

void require_same_orders(const ConditionalPairSpec& a, const ConditionalPairSpec& b,
                         const char* who) {
  if (a.base().order_a() != b.base().order_a() ||
      a.base().order_b() != b.base().order_b())
    throw argument_error(std::string(who) + ": specs must share orders");
}

struct ComposedPair {
  Series1 inv_a, inv_b;   // c^{<-1>} of the two faces
  Series2 q;              // K composed at them
  Series2 qc;             // K^c composed at them
  Series1 cc_a_over_z;    // c^c_a(c_a^{<-1>}(z)) / z
  Series1 cc_b_over_w;    // c^c_b(c_b^{<-1>}(w)) / w
};

ComposedPair compose_all(const ConditionalPairSpec& cs) {
  const PairSpec& base = cs.base();
  Series1 inv_a = invert1(series_c(base, Side::Left));
  Series1 inv_b = invert1(series_c(base, Side::Right));
  Series2 q = compose2(series_hck(base).k, inv_a, inv_b);
  Series2 qc = compose2(cs.conditional_k(), inv_a, inv_b);
  Series1 cc_a = div_z(compose1(cs.conditional_c(Side::Left), inv_a));
  Series1 cc_b = div_z(compose1(cs.conditional_c(Side::Right), inv_b));
  return {inv_a, inv_b, q, qc, cc_a, cc_b};
}

}  // namespace

Series2 conditional_k_rhs_same_order(const ConditionalPairSpec& cs1,
                                     const ConditionalPairSpec& cs2) {
  require_same_orders(cs1, cs2, "conditional_k_rhs_same_order");
  require_normalized(cs1, "conditional_k_rhs_same_order");
  require_normalized(cs2, "conditional_k_rhs_same_order");
  const int nz = cs1.base().order_a(), nw = cs1.base().order_b();
  ComposedPair c1 = compose_all(cs1), c2 = compose_all(cs2);
  Series2 one = Series2::one(nz, nw);
  Series2 first = embed_z(c2.cc_a_over_z, nz, nw) * embed_w(c2.cc_b_over_w, nz, nw) * c2.qc;
  Series2 bracket = one + div_monomial(c2.q, kMonZ) + div_monomial(c2.q, kMonW) +
                    div_monomial(c2.q, kMonZW);
  return first + bracket * c1.qc;
}

Series2 conditional_k_rhs_opposite_order(const ConditionalPairSpec& cs1,
                                         const ConditionalPairSpec& cs2) {
  require_same_orders(cs1, cs2, "conditional_k_rhs_opposite_order");
  require_normalized(cs1, "conditional_k_rhs_opposite_order");
  require_normalized(cs2, "conditional_k_rhs_opposite_order");
  const int nz = cs1.base().order_a(), nw = cs1.base().order_b();
  ComposedPair c1 = compose_all(cs1), c2 = compose_all(cs2);
  Series2 one = Series2::one(nz, nw);
  Series2 numer =
      embed_w(c2.cc_b_over_w, nz, nw) * (one + div_monomial(c2.q, kMonZ)) * c1.qc +
      embed_z(c1.cc_a_over_z, nz, nw) * (one + div_monomial(c1.q, kMonW)) * c2.qc;
  Series2 denom = one - div_monomial(c1.q * c2.q, kMonZW);
  return div_unit(numer, denom);
}

}  // namespace bifree
