#include "bifree/transforms.hpp"

#include <stdexcept>

#include "bifree/errors.hpp"
#include "lattice_sums.hpp"

namespace bifree {

PairSpec::PairSpec(std::vector<Rat> kappa_a, std::vector<Rat> kappa_b,
                   std::vector<std::vector<Rat>> kappa_ab)
    : ka_(std::move(kappa_a)), kb_(std::move(kappa_b)), kab_(std::move(kappa_ab)) {
  if (ka_.empty() || kb_.empty()) throw argument_error("PairSpec: orders must be >= 1");
  if (kab_.size() != ka_.size())
    throw argument_error("PairSpec: mixed grid has wrong number of rows");
  for (const auto& row : kab_)
    if (row.size() != kb_.size())
      throw argument_error("PairSpec: mixed grid has wrong number of columns");
}

const Rat& PairSpec::kappa(int i, int j) const {
  static const Rat one(1);
  if (i == 0 && j == 0) return one;
  if (j == 0) return kappa_a(i);
  if (i == 0) return kappa_b(j);
  return kappa_ab(i, j);
}

MomentSpec::MomentSpec(int order_a, int order_b) : na_(order_a), nb_(order_b) {
  if (na_ < 1 || nb_ < 1) throw argument_error("MomentSpec: orders must be >= 1");
  grid_.assign(na_ + 1, std::vector<Rat>(nb_ + 1, Rat(0)));
  grid_[0][0] = 1;
}

void MomentSpec::set_moment(int n, int m, const Rat& v) {
  if (n == 0 && m == 0 && v != 1)
    throw argument_error("MomentSpec: phi(1) must be 1");
  grid_.at(n).at(m) = v;
}

std::vector<Rat> free_cumulants_to_moments(const std::vector<Rat>& kappa) {
  std::vector<Rat> m(kappa.size());
  for (std::size_t n = 1; n <= kappa.size(); ++n) {
    Rat acc = 0;
    for (const auto& row : detail::nc_sizes(static_cast<int>(n))) {
      Rat term(row.count);
      for (int s : row.sizes) term *= kappa[s - 1];
      acc += term;
    }
    m[n - 1] = acc;
  }
  return m;
}

std::vector<Rat> free_moments_to_cumulants(const std::vector<Rat>& moments) {
  std::vector<Rat> k(moments.size());
  for (std::size_t n = 1; n <= moments.size(); ++n) {
    Rat acc = 0;
    for (const auto& row : detail::nc_sizes(static_cast<int>(n))) {
      Rat term(row.mu_sum);
      for (int s : row.sizes) term *= moments[s - 1];
      acc += term;
    }
    k[n - 1] = acc;
  }
  return k;
}

MomentSpec bifree_cumulants_to_moments(const PairSpec& p) {
  MomentSpec out(p.order_a(), p.order_b());
  for (int n = 0; n <= p.order_a(); ++n)
    for (int m = 0; m <= p.order_b(); ++m) {
      if (n + m == 0) continue;
      Rat acc = 0;
      for (const auto& row : detail::bnc_types(n, m)) {
        Rat term(row.count);
        for (auto [i, j] : row.types) term *= p.kappa(i, j);
        acc += term;
      }
      out.set_moment(n, m, acc);
    }
  return out;
}

PairSpec bifree_moments_to_cumulants(const MomentSpec& ms) {
  const int na = ms.order_a(), nb = ms.order_b();
  auto cumulant = [&](int n, int m) {
    Rat acc = 0;
    for (const auto& row : detail::bnc_types(n, m)) {
      Rat term(row.mu_sum);
      for (auto [i, j] : row.types) term *= ms.moment(i, j);
      acc += term;
    }
    return acc;
  };
  std::vector<Rat> ka(na), kb(nb);
  for (int n = 1; n <= na; ++n) ka[n - 1] = cumulant(n, 0);
  for (int m = 1; m <= nb; ++m) kb[m - 1] = cumulant(0, m);
  std::vector<std::vector<Rat>> kab(na, std::vector<Rat>(nb));
  for (int n = 1; n <= na; ++n)
    for (int m = 1; m <= nb; ++m) kab[n - 1][m - 1] = cumulant(n, m);
  return PairSpec(std::move(ka), std::move(kb), std::move(kab));
}

namespace {

const std::vector<Rat>& face_cumulants(const PairSpec& p, Side side) {
  return side == Side::Left ? p.kappa_a_seq() : p.kappa_b_seq();
}

void require_nonzero_mean(const PairSpec& p, Side side, const char* who) {
  if (face_cumulants(p, side)[0] == 0)
    throw domain_error(std::string(who) + ": kappa_1 of the requested face is zero");
}

}  // namespace

Series1 series_c(const PairSpec& p, Side side) {
  const auto& k = face_cumulants(p, side);
  Series1 c(static_cast<int>(k.size()));
  for (std::size_t n = 0; n < k.size(); ++n) c.set_coeff(static_cast<int>(n) + 1, k[n]);
  return c;
}

Series1 series_h(const PairSpec& p, Side side) {
  std::vector<Rat> m = free_cumulants_to_moments(face_cumulants(p, side));
  Series1 h(static_cast<int>(m.size()));
  h.set_coeff(0, 1);
  for (std::size_t n = 0; n < m.size(); ++n) h.set_coeff(static_cast<int>(n) + 1, m[n]);
  return h;
}

Series1 series_psi(const PairSpec& p, Side side) {
  Series1 h = series_h(p, side);
  return h - Series1::constant(1, h.order());
}

Series1 s_transform(const PairSpec& p, Side side) {
  require_nonzero_mean(p, side, "s_transform");
  return div_z(invert1(series_c(p, side)));
}

Series1 s_transform_via_moments(const PairSpec& p, Side side) {
  require_nonzero_mean(p, side, "s_transform");
  Series1 chi = invert1(series_psi(p, side));
  Series1 over_z = div_z(chi);
  Series1 one_plus_z = Series1::constant(1, over_z.order());
  if (over_z.order() >= 1) one_plus_z.set_coeff(1, 1);
  return one_plus_z * over_z;
}

BiSeries series_hck(const PairSpec& p) {
  const int nz = p.order_a(), nw = p.order_b();
  MomentSpec ms = bifree_cumulants_to_moments(p);
  Series2 h(nz, nw), c(nz, nw), k(nz, nw);
  for (int i = 0; i <= nz; ++i)
    for (int j = 0; j <= nw; ++j) {
      h.set_coeff(i, j, ms.moment(i, j));
      c.set_coeff(i, j, p.kappa(i, j));
      if (i >= 1 && j >= 1) k.set_coeff(i, j, p.kappa_ab(i, j));
    }
  return {h, c, k};
}

Series2 k_hat(const PairSpec& p) {
  require_nonzero_mean(p, Side::Left, "k_hat");
  require_nonzero_mean(p, Side::Right, "k_hat");
  Series1 ia = invert1(series_c(p, Side::Left));
  Series1 ib = invert1(series_c(p, Side::Right));
  return compose2(series_hck(p).k, ia, ib);
}

SeriesMatch verify_moment_cumulant_identity(const PairSpec& p) {
  const int nz = p.order_a(), nw = p.order_b();
  BiSeries s = series_hck(p);
  Series1 ha = series_h(p, Side::Left), hb = series_h(p, Side::Right);
  Series2 ha2 = embed_z(ha, nz, nw), hb2 = embed_w(hb, nz, nw);
  Series2 lhs = ha2 + hb2;
  Series2 rhs = div_unit(ha2 * hb2, s.h) + compose2(s.c, ha.times_z(), hb.times_z());
  return match_on_common_grid(lhs, rhs);
}

namespace {

Series2 one_plus_z_plus_w(int nz, int nw) {
  return Series2::one(nz, nw) + Series2::var_z(nz, nw) + Series2::var_w(nz, nw);
}

}  // namespace

Series2 partial_s_cumulant_form(const PairSpec& p) {
  const int nz = p.order_a(), nw = p.order_b();
  Series2 t = div_monomial(k_hat(p), kMonZW);
  return Series2::one(nz, nw) + one_plus_z_plus_w(nz, nw) * t;
}

Series2 partial_s_moment_form(const PairSpec& p) {
  require_nonzero_mean(p, Side::Left, "partial_s");
  require_nonzero_mean(p, Side::Right, "partial_s");
  const int nz = p.order_a(), nw = p.order_b();
  Series1 xa = invert1(series_psi(p, Side::Left));
  Series1 xb = invert1(series_psi(p, Side::Right));
  Series2 h_at = compose2(series_hck(p).h, xa, xb);
  Series2 bracket = Series2::one(nz, nw) - div_unit(one_plus_z_plus_w(nz, nw), h_at);
  Series2 t = div_monomial(bracket, kMonZW);
  Series2 zp1 = Series2::one(nz, nw) + Series2::var_z(nz, nw);
  Series2 wp1 = Series2::one(nz, nw) + Series2::var_w(nz, nw);
  return zp1 * wp1 * t;
}

SeriesMatch partial_s_forms_match(const PairSpec& p) {
  return match_on_common_grid(partial_s_cumulant_form(p), partial_s_moment_form(p));
}

Series2 partial_s(const PairSpec& p) {
  Series2 s = partial_s_cumulant_form(p);
  if (!match_on_common_grid(s, partial_s_moment_form(p)).equal)
    throw std::logic_error("partial_s: the two defining forms disagree");
  return s;
}

Series2 opposite_partial_s_ratio_form(const PairSpec& p) {
  const int nz = p.order_a(), nw = p.order_b();
  Series2 kh = k_hat(p);
  Series2 numer = Series2::one(nz, nw) + div_monomial(kh, kMonZ);
  Series2 denom = Series2::one(nz, nw) + div_monomial(kh, kMonW);
  return div_unit(numer, denom);
}

SeriesMatch opposite_s_forms_match(const PairSpec& p) {
  require_nonzero_mean(p, Side::Left, "opposite_partial_s");
  require_nonzero_mean(p, Side::Right, "opposite_partial_s");
  // The moment form is stated for kappa_1 = 1; the ratio form is
  // scale-invariant, so compare both on the normalized spec. Clearing
  // denominators turns the equality into the polynomial identity
  //   (z+1) (H(X_a, X_b) - (w+1)) (w + K_hat)
  //     = (w+1) (H(X_a, X_b) - (z+1)) (z + K_hat),
  // which avoids dividing by series with vanishing constant term.
  PairSpec q = rescale(p, Rat(1) / p.kappa_a(1), Rat(1) / p.kappa_b(1));
  const int nz = q.order_a(), nw = q.order_b();
  Series2 kh = k_hat(q);
  Series1 xa = invert1(series_psi(q, Side::Left));
  Series1 xb = invert1(series_psi(q, Side::Right));
  Series2 h_at = compose2(series_hck(q).h, xa, xb);
  Series2 one = Series2::one(nz, nw);
  Series2 vz = Series2::var_z(nz, nw), vw = Series2::var_w(nz, nw);
  Series2 lhs = (one + vz) * (h_at - one - vw) * (vw + kh);
  Series2 rhs = (one + vw) * (h_at - one - vz) * (vz + kh);
  return match_on_common_grid(lhs, rhs);
}

Series2 opposite_partial_s(const PairSpec& p) {
  require_nonzero_mean(p, Side::Left, "opposite_partial_s");
  require_nonzero_mean(p, Side::Right, "opposite_partial_s");
  if (!opposite_s_forms_match(p).equal)
    throw std::logic_error("opposite_partial_s: the two defining forms disagree");
  return opposite_partial_s_ratio_form(p);
}

PairSpec rescale(const PairSpec& p, const Rat& lambda, const Rat& mu) {
  if (lambda == 0 || mu == 0) throw argument_error("rescale: scalars must be nonzero");
  std::vector<Rat> ka(p.order_a()), kb(p.order_b());
  Rat pl(1);
  for (int n = 1; n <= p.order_a(); ++n) {
    pl *= lambda;
    ka[n - 1] = pl * p.kappa_a(n);
  }
  Rat pm(1);
  for (int m = 1; m <= p.order_b(); ++m) {
    pm *= mu;
    kb[m - 1] = pm * p.kappa_b(m);
  }
  std::vector<std::vector<Rat>> kab(p.order_a(), std::vector<Rat>(p.order_b()));
  pl = 1;
  for (int n = 1; n <= p.order_a(); ++n) {
    pl *= lambda;
    pm = 1;
    for (int m = 1; m <= p.order_b(); ++m) {
      pm *= mu;
      kab[n - 1][m - 1] = pl * pm * p.kappa_ab(n, m);
    }
  }
  return PairSpec(std::move(ka), std::move(kb), std::move(kab));
}

PairSpec swapped(const PairSpec& p) {
  std::vector<std::vector<Rat>> kab(p.order_b(), std::vector<Rat>(p.order_a()));
  for (int m = 1; m <= p.order_b(); ++m)
    for (int n = 1; n <= p.order_a(); ++n) kab[m - 1][n - 1] = p.kappa_ab(n, m);
  return PairSpec(p.kappa_b_seq(), p.kappa_a_seq(), std::move(kab));
}

}  // namespace bifree
