#pragma once

#include <vector>

#include "bifree/partition.hpp"
#include "bifree/series.hpp"

namespace bifree {

/// A multiplicative function on the incidence algebra of non-crossing
/// partitions, stored by its values on full lattices f(0_n, 1_n), n = 1..N.
/// Everything else is derived: on [0_n, pi] the value is the product over
/// blocks.
class MultFn {
public:
  /// values[k] is f(0_{k+1}, 1_{k+1}).
  explicit MultFn(std::vector<Rat> values);

  int order() const { return static_cast<int>(v_.size()); }
  /// f(0_n, 1_n), 1 <= n <= order.
  const Rat& value(int n) const;
  /// Member of M_1, i.e. f(0_1, 1_1) = 1.
  bool in_m1() const { return v_[0] == 1; }

  friend bool operator==(const MultFn&, const MultFn&) = default;

private:
  std::vector<Rat> v_;
};

/// f(0_n, pi): the product over blocks V of f(0_{|V|}, 1_{|V|}).
Rat eval_on(const MultFn& f, const Partition& p);

/// Kreweras form of the incidence-algebra convolution:
/// (f * g)(0_n, 1_n) = sum over NC(n) of f(0,pi) g(0,K(pi)).
MultFn star_convolve(const MultFn& f, const MultFn& g);

/// Pinched convolution, the same sum restricted to NC'(n); requires both
/// functions in M_1. Not commutative.
MultFn pinched_convolve(const MultFn& f, const MultFn& g);

/// phi_f(z) = sum_{n>=1} f(0_n, 1_n) z^n, truncated at the function's order.
Series1 phi_series(const MultFn& f);

}  // namespace bifree
