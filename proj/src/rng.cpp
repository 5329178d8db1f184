#include "bifree/rng.hpp"

namespace bifree {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
  for (auto& s : s_) s = splitmix64(seed);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

long Rng::bounded(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat random_rational(Rng& rng) {
  long num = rng.bounded(-9, 9);
  long den = rng.bounded(1, 9);
  return make_rat(num, den);
}

Rat random_nonzero_rational(Rng& rng) {
  for (;;) {
    Rat r = random_rational(rng);
    if (r != 0) return r;
  }
}

PairSpec random_pair_spec(Rng& rng, int order_a, int order_b, bool nonzero_means) {
  std::vector<Rat> ka(order_a), kb(order_b);
  for (int n = 0; n < order_a; ++n)
    ka[n] = (n == 0 && nonzero_means) ? random_nonzero_rational(rng) : random_rational(rng);
  for (int m = 0; m < order_b; ++m)
    kb[m] = (m == 0 && nonzero_means) ? random_nonzero_rational(rng) : random_rational(rng);
  std::vector<std::vector<Rat>> kab(order_a, std::vector<Rat>(order_b));
  for (auto& row : kab)
    for (auto& cell : row) cell = random_rational(rng);
  return PairSpec(std::move(ka), std::move(kb), std::move(kab));
}

MomentSpec random_moment_spec(Rng& rng, int order_a, int order_b) {
  MomentSpec ms(order_a, order_b);
  for (int n = 0; n <= order_a; ++n)
    for (int m = 0; m <= order_b; ++m) {
      if (n + m == 0) continue;
      ms.set_moment(n, m, random_rational(rng));
    }
  return ms;
}

std::vector<Rat> random_rationals(Rng& rng, int count) {
  std::vector<Rat> out(count);
  for (auto& r : out) r = random_rational(rng);
  return out;
}

}  // namespace bifree
