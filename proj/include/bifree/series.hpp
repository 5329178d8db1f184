#pragma once

#include <vector>

#include "bifree/rational.hpp"

namespace bifree {

/// Truncated formal power series in one variable over Q, dense in degrees
/// 0..order. All arithmetic is exact; truncation is the only approximation.
class Series1 {
public:
  explicit Series1(int order);
  static Series1 zero(int order) { return Series1(order); }
  static Series1 constant(const Rat& c, int order);
  /// The series z.
  static Series1 identity(int order);
  static Series1 from_coeffs(std::vector<Rat> coeffs);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(int k) const { return c_[k]; }
  void set_coeff(int k, const Rat& v) { c_[k] = v; }

  Series1 truncated(int new_order) const;
  /// Multiplication by z, dropping the top degree.
  Series1 times_z() const;

  friend bool operator==(const Series1&, const Series1&) = default;

private:
  std::vector<Rat> c_;
};

Series1 operator+(const Series1& a, const Series1& b);
Series1 operator-(const Series1& a, const Series1& b);
Series1 operator*(const Series1& a, const Series1& b);
Series1 operator*(const Rat& s, const Series1& a);

/// Quotient q with q*b = a up to truncation; b must have nonzero constant term.
Series1 div_unit(const Series1& a, const Series1& b);

/// a / z; every coefficient shifts down one degree, so the order drops by one.
/// Requires a(0) = 0.
Series1 div_z(const Series1& a);

/// outer(inner), truncated at the common order. inner must have zero
/// constant term.
Series1 compose1(const Series1& outer, const Series1& inner);

/// Compositional inverse g with f(g(z)) = g(f(z)) = z, by degree-by-degree
/// solving. Requires f(0) = 0 and f'(0) != 0.
Series1 invert1(const Series1& f);

/// Truncated series in two variables, dense on the rectangle
/// 0..order_z x 0..order_w. Monomial division leaves the top rows/columns
/// unknown, so each value also carries the valid sub-grid on which its cells
/// are meaningful; binary operations intersect valid regions and identity
/// checks compare only cells both sides define.
class Series2 {
public:
  Series2(int order_z, int order_w);
  static Series2 zero(int order_z, int order_w) { return Series2(order_z, order_w); }
  static Series2 constant(const Rat& c, int order_z, int order_w);
  static Series2 one(int order_z, int order_w) { return constant(1, order_z, order_w); }
  static Series2 var_z(int order_z, int order_w);
  static Series2 var_w(int order_z, int order_w);

  int order_z() const { return nz_; }
  int order_w() const { return nw_; }
  int valid_z() const { return vz_; }
  int valid_w() const { return vw_; }

  const Rat& coeff(int i, int j) const { return c_[idx(i, j)]; }
  void set_coeff(int i, int j, const Rat& v) { c_[idx(i, j)] = v; }

  /// Shrinks the valid region (never grows it) and zeroes what falls outside.
  Series2 restricted(int valid_z, int valid_w) const;
  Series2 transposed() const;
  /// Multiplication by z or w; shifts the grid and keeps validity of every
  /// cell whose source was valid.
  Series2 times_z() const;
  Series2 times_w() const;

  friend bool operator==(const Series2&, const Series2&) = default;

private:
  int idx(int i, int j) const { return i * (nw_ + 1) + j; }
  void clear_invalid();
  int nz_, nw_, vz_, vw_;
  std::vector<Rat> c_;

  friend Series2 operator+(const Series2&, const Series2&);
  friend Series2 operator-(const Series2&, const Series2&);
  friend Series2 operator*(const Series2&, const Series2&);
  friend Series2 operator*(const Rat&, const Series2&);
  friend Series2 div_unit(const Series2&, const Series2&);
  friend Series2 div_monomial(const Series2&, struct Monomial);
};

Series2 operator+(const Series2& a, const Series2& b);
Series2 operator-(const Series2& a, const Series2& b);
Series2 operator*(const Series2& a, const Series2& b);
Series2 operator*(const Rat& s, const Series2& a);

Series2 div_unit(const Series2& a, const Series2& b);

struct Monomial {
  bool z = false;
  bool w = false;
};
inline constexpr Monomial kMonZ{true, false};
inline constexpr Monomial kMonW{false, true};
inline constexpr Monomial kMonZW{true, true};

/// Exact division by z, w or zw. The corresponding low-order coefficients
/// must vanish on the valid grid; the top row/column of the result is
/// unknown, so the valid region shrinks by one in each divided variable.
Series2 div_monomial(const Series2& a, Monomial m);

/// Substitutes inner_z(z) for the first variable and inner_w(w) for the
/// second. Both inner series need zero constant term and order at least the
/// outer grid order in their variable.
Series2 compose2(const Series2& outer, const Series1& inner_z, const Series1& inner_w);

/// s(z) viewed as a two-variable series (and the w counterpart).
Series2 embed_z(const Series1& s, int order_z, int order_w);
Series2 embed_w(const Series1& s, int order_z, int order_w);

/// Result of comparing two series on the intersection of their valid grids.
struct SeriesMatch {
  bool equal = true;
  int fail_i = -1, fail_j = -1;  // first failing cell in graded order
  int common_z = -1, common_w = -1;
};

SeriesMatch match_on_common_grid(const Series2& a, const Series2& b);

}  // namespace bifree
