#include "bifree/mult_fn.hpp"

#include "bifree/errors.hpp"
#include "lattice_sums.hpp"

namespace bifree {

MultFn::MultFn(std::vector<Rat> values) : v_(std::move(values)) {
  if (v_.empty()) throw argument_error("MultFn: order must be >= 1");
}

const Rat& MultFn::value(int n) const {
  if (n < 1 || n > order()) throw order_error("MultFn::value: index out of range");
  return v_[n - 1];
}

Rat eval_on(const MultFn& f, const Partition& p) {
  Rat acc(1);
  for (int s : p.block_sizes()) {
    if (s > f.order()) throw order_error("eval_on: block larger than the stored order");
    acc *= f.value(s);
  }
  return acc;
}

namespace {

Rat eval_sizes(const MultFn& f, const std::vector<int>& sizes) {
  Rat acc(1);
  for (int s : sizes) {
    if (s > f.order()) throw order_error("convolve: block larger than the stored order");
    acc *= f.value(s);
  }
  return acc;
}

}  // namespace

MultFn star_convolve(const MultFn& f, const MultFn& g) {
  if (f.order() != g.order()) throw argument_error("star_convolve: orders differ");
  std::vector<Rat> out(f.order());
  for (int n = 1; n <= f.order(); ++n) {
    Rat acc = 0;
    for (const auto& row : detail::nc_size_pairs(n))
      acc += Rat(row.count) * eval_sizes(f, row.pi_sizes) * eval_sizes(g, row.k_sizes);
    out[n - 1] = acc;
  }
  return MultFn(std::move(out));
}

MultFn pinched_convolve(const MultFn& f, const MultFn& g) {
  if (f.order() != g.order()) throw argument_error("pinched_convolve: orders differ");
  if (!f.in_m1() || !g.in_m1())
    throw domain_error("pinched_convolve: both functions must lie in M_1");
  std::vector<Rat> out(f.order());
  for (int n = 1; n <= f.order(); ++n) {
    Rat acc = 0;
    for (const auto& row : detail::nc_prime_size_pairs(n))
      acc += Rat(row.count) * eval_sizes(f, row.pi_sizes) * eval_sizes(g, row.k_sizes);
    out[n - 1] = acc;
  }
  return MultFn(std::move(out));
}

Series1 phi_series(const MultFn& f) {
  Series1 s(f.order());
  for (int n = 1; n <= f.order(); ++n) s.set_coeff(n, f.value(n));
  return s;
}

}  // namespace bifree
