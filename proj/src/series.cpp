#include "bifree/series.hpp"

#include <algorithm>

#include "bifree/errors.hpp"

namespace bifree {

Series1::Series1(int order) {
  if (order < 0) throw argument_error("Series1: negative order");
  c_.assign(order + 1, Rat(0));
}

Series1 Series1::constant(const Rat& c, int order) {
  Series1 s(order);
  s.c_[0] = c;
  return s;
}

Series1 Series1::identity(int order) {
  if (order < 1) throw argument_error("Series1::identity: order must be >= 1");
  Series1 s(order);
  s.c_[1] = 1;
  return s;
}

Series1 Series1::from_coeffs(std::vector<Rat> coeffs) {
  if (coeffs.empty()) throw argument_error("Series1: no coefficients");
  Series1 s(static_cast<int>(coeffs.size()) - 1);
  s.c_ = std::move(coeffs);
  return s;
}

Series1 Series1::truncated(int new_order) const {
  if (new_order < 0 || new_order > order())
    throw argument_error("Series1::truncated: bad order");
  Series1 s(new_order);
  std::copy(c_.begin(), c_.begin() + new_order + 1, s.c_.begin());
  return s;
}

Series1 Series1::times_z() const {
  Series1 s(order());
  for (int k = order(); k >= 1; --k) s.c_[k] = c_[k - 1];
  return s;
}

namespace {
void check_orders(const Series1& a, const Series1& b, const char* who) {
  if (a.order() != b.order())
    throw argument_error(std::string(who) + ": truncation orders differ");
}
}  // namespace

Series1 operator+(const Series1& a, const Series1& b) {
  check_orders(a, b, "Series1::add");
  Series1 s(a.order());
  for (int k = 0; k <= a.order(); ++k) s.set_coeff(k, a.coeff(k) + b.coeff(k));
  return s;
}

Series1 operator-(const Series1& a, const Series1& b) {
  check_orders(a, b, "Series1::sub");
  Series1 s(a.order());
  for (int k = 0; k <= a.order(); ++k) s.set_coeff(k, a.coeff(k) - b.coeff(k));
  return s;
}

Series1 operator*(const Series1& a, const Series1& b) {
  check_orders(a, b, "Series1::mul");
  Series1 s(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; i + j <= a.order(); ++j)
      s.set_coeff(i + j, s.coeff(i + j) + a.coeff(i) * b.coeff(j));
  }
  return s;
}

Series1 operator*(const Rat& s, const Series1& a) {
  Series1 out(a.order());
  for (int k = 0; k <= a.order(); ++k) out.set_coeff(k, s * a.coeff(k));
  return out;
}

Series1 div_unit(const Series1& a, const Series1& b) {
  check_orders(a, b, "Series1::div_unit");
  if (b.coeff(0) == 0) throw division_error("Series1::div_unit: constant term is zero");
  Series1 q(a.order());
  for (int k = 0; k <= a.order(); ++k) {
    Rat acc = a.coeff(k);
    for (int j = 0; j < k; ++j) acc -= q.coeff(j) * b.coeff(k - j);
    q.set_coeff(k, acc / b.coeff(0));
  }
  return q;
}

Series1 div_z(const Series1& a) {
  if (a.coeff(0) != 0) throw divisibility_error("Series1::div_z: constant term is nonzero");
  if (a.order() < 1) throw argument_error("Series1::div_z: order too small");
  Series1 q(a.order() - 1);
  for (int k = 0; k < a.order(); ++k) q.set_coeff(k, a.coeff(k + 1));
  return q;
}

Series1 compose1(const Series1& outer, const Series1& inner) {
  check_orders(outer, inner, "Series1::compose1");
  if (inner.coeff(0) != 0)
    throw composition_error("Series1::compose1: inner constant term is nonzero");
  const int n = outer.order();
  Series1 result = Series1::constant(outer.coeff(0), n);
  Series1 power = Series1::constant(1, n);
  for (int k = 1; k <= n; ++k) {
    power = power * inner;
    result = result + outer.coeff(k) * power;
  }
  return result;
}

Series1 invert1(const Series1& f) {
  if (f.coeff(0) != 0) throw inversion_error("invert1: f(0) != 0");
  if (f.order() < 1 || f.coeff(1) == 0) throw inversion_error("invert1: f'(0) == 0");
  const int n = f.order();
  Series1 g(n);
  g.set_coeff(1, Rat(1) / f.coeff(1));
  for (int k = 2; k <= n; ++k) {
    // With g known below degree k, [z^k] f(g) = f'(0) g_k + [z^k] f(g_{<k}).
    Series1 fg = compose1(f.truncated(k), g.truncated(k));
    g.set_coeff(k, -fg.coeff(k) / f.coeff(1));
  }
  return g;
}

Series2::Series2(int order_z, int order_w)
    : nz_(order_z), nw_(order_w), vz_(order_z), vw_(order_w) {
  if (order_z < 0 || order_w < 0) throw argument_error("Series2: negative order");
  c_.assign(static_cast<std::size_t>(nz_ + 1) * (nw_ + 1), Rat(0));
}

Series2 Series2::constant(const Rat& c, int order_z, int order_w) {
  Series2 s(order_z, order_w);
  s.set_coeff(0, 0, c);
  return s;
}

Series2 Series2::var_z(int order_z, int order_w) {
  Series2 s(order_z, order_w);
  s.set_coeff(1, 0, 1);
  return s;
}

Series2 Series2::var_w(int order_z, int order_w) {
  Series2 s(order_z, order_w);
  s.set_coeff(0, 1, 1);
  return s;
}

void Series2::clear_invalid() {
  for (int i = 0; i <= nz_; ++i)
    for (int j = 0; j <= nw_; ++j)
      if (i > vz_ || j > vw_) c_[idx(i, j)] = 0;
}

Series2 Series2::restricted(int valid_z, int valid_w) const {
  Series2 s = *this;
  s.vz_ = std::min(vz_, valid_z);
  s.vw_ = std::min(vw_, valid_w);
  if (s.vz_ < 0 || s.vw_ < 0) throw argument_error("Series2::restricted: empty grid");
  s.clear_invalid();
  return s;
}

Series2 Series2::transposed() const {
  Series2 s(nw_, nz_);
  s.vz_ = vw_;
  s.vw_ = vz_;
  for (int i = 0; i <= nz_; ++i)
    for (int j = 0; j <= nw_; ++j) s.set_coeff(j, i, coeff(i, j));
  return s;
}

Series2 Series2::times_z() const {
  Series2 s(nz_, nw_);
  s.vz_ = std::min(nz_, vz_ + 1);
  s.vw_ = vw_;
  for (int i = 1; i <= nz_; ++i)
    for (int j = 0; j <= nw_; ++j) s.set_coeff(i, j, coeff(i - 1, j));
  s.clear_invalid();
  return s;
}

Series2 Series2::times_w() const {
  Series2 s(nz_, nw_);
  s.vz_ = vz_;
  s.vw_ = std::min(nw_, vw_ + 1);
  for (int i = 0; i <= nz_; ++i)
    for (int j = 1; j <= nw_; ++j) s.set_coeff(i, j, coeff(i, j - 1));
  s.clear_invalid();
  return s;
}

namespace {
void check_orders(const Series2& a, const Series2& b, const char* who) {
  if (a.order_z() != b.order_z() || a.order_w() != b.order_w())
    throw argument_error(std::string(who) + ": truncation orders differ");
}
}  // namespace

Series2 operator+(const Series2& a, const Series2& b) {
  check_orders(a, b, "Series2::add");
  Series2 s(a.nz_, a.nw_);
  s.vz_ = std::min(a.vz_, b.vz_);
  s.vw_ = std::min(a.vw_, b.vw_);
  for (std::size_t k = 0; k < s.c_.size(); ++k) s.c_[k] = a.c_[k] + b.c_[k];
  s.clear_invalid();
  return s;
}

Series2 operator-(const Series2& a, const Series2& b) {
  check_orders(a, b, "Series2::sub");
  Series2 s(a.nz_, a.nw_);
  s.vz_ = std::min(a.vz_, b.vz_);
  s.vw_ = std::min(a.vw_, b.vw_);
  for (std::size_t k = 0; k < s.c_.size(); ++k) s.c_[k] = a.c_[k] - b.c_[k];
  s.clear_invalid();
  return s;
}

Series2 operator*(const Series2& a, const Series2& b) {
  check_orders(a, b, "Series2::mul");
  Series2 s(a.nz_, a.nw_);
  s.vz_ = std::min(a.vz_, b.vz_);
  s.vw_ = std::min(a.vw_, b.vw_);
  for (int i = 0; i <= s.vz_; ++i)
    for (int j = 0; j <= s.vw_; ++j) {
      if (a.coeff(i, j) == 0) continue;
      for (int p = 0; i + p <= s.vz_; ++p)
        for (int q = 0; j + q <= s.vw_; ++q)
          s.c_[s.idx(i + p, j + q)] += a.coeff(i, j) * b.coeff(p, q);
    }
  return s;
}

Series2 operator*(const Rat& r, const Series2& a) {
  Series2 s = a;
  for (auto& c : s.c_) c *= r;
  return s;
}

Series2 div_unit(const Series2& a, const Series2& b) {
  check_orders(a, b, "Series2::div_unit");
  if (b.coeff(0, 0) == 0)
    throw division_error("Series2::div_unit: constant term is zero");
  Series2 q(a.nz_, a.nw_);
  q.vz_ = std::min(a.vz_, b.vz_);
  q.vw_ = std::min(a.vw_, b.vw_);
  for (int d = 0; d <= q.vz_ + q.vw_; ++d)
    for (int i = std::max(0, d - q.vw_); i <= std::min(d, q.vz_); ++i) {
      int j = d - i;
      Rat acc = a.coeff(i, j);
      for (int p = 0; p <= i; ++p)
        for (int s = 0; s <= j; ++s) {
          if (p == i && s == j) continue;
          acc -= q.coeff(p, s) * b.coeff(i - p, j - s);
        }
      q.c_[q.idx(i, j)] = acc / b.coeff(0, 0);
    }
  return q;
}

Series2 div_monomial(const Series2& a, Monomial m) {
  Series2 s(a.nz_, a.nw_);
  s.vz_ = a.vz_;
  s.vw_ = a.vw_;
  if (m.z) {
    for (int j = 0; j <= a.vw_; ++j)
      if (a.coeff(0, j) != 0)
        throw divisibility_error("div_monomial: series is not divisible by z");
    if (--s.vz_ < 0) throw argument_error("div_monomial: valid grid exhausted in z");
  }
  if (m.w) {
    for (int i = 0; i <= a.vz_; ++i)
      if (a.coeff(i, 0) != 0)
        throw divisibility_error("div_monomial: series is not divisible by w");
    if (--s.vw_ < 0) throw argument_error("div_monomial: valid grid exhausted in w");
  }
  for (int i = 0; i <= s.vz_; ++i)
    for (int j = 0; j <= s.vw_; ++j)
      s.set_coeff(i, j, a.coeff(i + (m.z ? 1 : 0), j + (m.w ? 1 : 0)));
  return s;
}

Series2 compose2(const Series2& outer, const Series1& inner_z, const Series1& inner_w) {
  if (inner_z.order() < outer.order_z() || inner_w.order() < outer.order_w())
    throw argument_error("compose2: inner orders too small for the outer grid");
  if (inner_z.coeff(0) != 0 || inner_w.coeff(0) != 0)
    throw composition_error("compose2: inner constant term is nonzero");
  const int nz = outer.order_z(), nw = outer.order_w();
  Series1 tz = inner_z.truncated(nz);
  Series1 tw = inner_w.truncated(nw);
  // Powers of the inner series; inner^p has valuation >= p.
  std::vector<Series1> pz{Series1::constant(1, tz.order())};
  for (int p = 1; p <= nz; ++p) pz.push_back(pz.back() * tz);
  std::vector<Series1> pw{Series1::constant(1, tw.order())};
  for (int q = 1; q <= nw; ++q) pw.push_back(pw.back() * tw);
  Series2 s(nz, nw);
  for (int p = 0; p <= std::min(nz, outer.valid_z()); ++p)
    for (int q = 0; q <= std::min(nw, outer.valid_w()); ++q) {
      const Rat& o = outer.coeff(p, q);
      if (o == 0) continue;
      for (int i = p; i <= nz; ++i) {
        if (pz[p].coeff(i) == 0) continue;
        for (int j = q; j <= nw; ++j)
          s.set_coeff(i, j, s.coeff(i, j) + o * pz[p].coeff(i) * pw[q].coeff(j));
      }
    }
  return s.restricted(outer.valid_z(), outer.valid_w());
}

Series2 embed_z(const Series1& s, int order_z, int order_w) {
  Series2 out(order_z, order_w);
  for (int i = 0; i <= std::min(order_z, s.order()); ++i) out.set_coeff(i, 0, s.coeff(i));
  // A shorter series only covers part of the z-range; track that honestly.
  return out.restricted(std::min(order_z, s.order()), order_w);
}

Series2 embed_w(const Series1& s, int order_z, int order_w) {
  Series2 out(order_z, order_w);
  for (int j = 0; j <= std::min(order_w, s.order()); ++j) out.set_coeff(0, j, s.coeff(j));
  return out.restricted(order_z, std::min(order_w, s.order()));
}

SeriesMatch match_on_common_grid(const Series2& a, const Series2& b) {
  SeriesMatch m;
  m.common_z = std::min(a.valid_z(), b.valid_z());
  m.common_w = std::min(a.valid_w(), b.valid_w());
  for (int d = 0; d <= m.common_z + m.common_w; ++d)
    for (int i = std::max(0, d - m.common_w); i <= std::min(d, m.common_z); ++i) {
      int j = d - i;
      if (a.coeff(i, j) != b.coeff(i, j)) {
        m.equal = false;
        m.fail_i = i;
        m.fail_j = j;
        return m;
      }
    }
  return m;
}

}  // namespace bifree
