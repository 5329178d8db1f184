#include "bifree/bnc.hpp"

#include <algorithm>
#include <stdexcept>

#include "bifree/errors.hpp"

namespace bifree {

ChiMap::ChiMap(int n, int m) : n_left(n), n_right(m) {
  if (n < 0 || m < 0 || n + m < 1)
    throw argument_error("ChiMap: need n, m >= 0 and n + m >= 1");
}

std::vector<int> ChiMap::s_perm() const {
  std::vector<int> s;
  s.reserve(total());
  for (int k = 1; k <= n_left; ++k) s.push_back(k);
  for (int k = total(); k > n_left; --k) s.push_back(k);
  return s;
}

std::vector<int> ChiMap::s_perm_inv() const {
  std::vector<int> s = s_perm(), inv(s.size());
  for (int j = 1; j <= total(); ++j) inv[s[j - 1] - 1] = j;
  return inv;
}

BNCPartition::BNCPartition(ChiMap chi, Partition flat)
    : chi_(chi), flat_(std::move(flat)) {
  if (flat_.size() != chi_.total())
    throw argument_error("BNCPartition: partition size does not match chi");
  if (!flat_.relabeled(chi_.s_perm_inv()).is_noncrossing())
    throw argument_error("BNCPartition: not bi-non-crossing");
}

std::vector<std::pair<int, int>> BNCPartition::block_types() const {
  std::vector<std::pair<int, int>> types(flat_.block_count(), {0, 0});
  for (int e = 1; e <= flat_.size(); ++e) {
    auto& t = types[flat_.block_id(e)];
    if (chi_.side_of(e) == Side::Left)
      ++t.first;
    else
      ++t.second;
  }
  return types;
}

std::vector<BNCPartition> enumerate_bnc(int n, int m, int cap) {
  ChiMap chi(n, m);
  if (chi.total() > cap) throw size_error("enumerate_bnc: n + m exceeds cap");
  const std::vector<int> s = chi.s_perm();
  std::vector<BNCPartition> out;
  for_each_nc(chi.total(), [&](const Partition& p) {
    out.emplace_back(chi, p.relabeled(s));
    return true;
  });
  return out;
}

BNCPartition kreweras_bnc(const BNCPartition& p) {
  const ChiMap& chi = p.chi();
  Partition nc = p.flat().relabeled(chi.s_perm_inv());
  return BNCPartition(chi, kreweras_nc(nc).relabeled(chi.s_perm()));
}

BNCPartition join_bnc(const BNCPartition& p, const BNCPartition& q) {
  if (!(p.chi() == q.chi())) throw argument_error("join_bnc: chi maps differ");
  const ChiMap& chi = p.chi();
  Partition a = p.flat().relabeled(chi.s_perm_inv());
  Partition b = q.flat().relabeled(chi.s_perm_inv());
  return BNCPartition(chi, join_nc(a, b).relabeled(chi.s_perm()));
}

BNCPartition double_embed(const BNCPartition& p) {
  const int n = p.chi().n_left, m = p.chi().n_right;
  ChiMap big(2 * n, 2 * m);
  BNCPartition k = kreweras_bnc(p);
  std::vector<int> membership(big.total(), -1);
  // pi: k_l -> (2k-1)_l, k_r -> (2k)_r.
  const int kb = p.flat().block_count();
  for (int e = 1; e <= p.flat().size(); ++e) {
    int idx = p.chi().side_index(e);
    int flat = p.chi().side_of(e) == Side::Left ? big.flat_of(Side::Left, 2 * idx - 1)
                                                : big.flat_of(Side::Right, 2 * idx);
    membership[flat - 1] = p.flat().block_id(e);
  }
  // K(pi): k_l -> (2k)_l, k_r -> (2k-1)_r, block ids offset past pi's.
  for (int e = 1; e <= k.flat().size(); ++e) {
    int idx = k.chi().side_index(e);
    int flat = k.chi().side_of(e) == Side::Left ? big.flat_of(Side::Left, 2 * idx)
                                                : big.flat_of(Side::Right, 2 * idx - 1);
    membership[flat - 1] = kb + k.flat().block_id(e);
  }
  return BNCPartition(big, Partition::from_membership(std::move(membership)));
}

BNCPartition sigma_pairing(int n, int m) {
  ChiMap chi(2 * n, 2 * m);
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({2 * i - 1, 2 * i});
  for (int j = 1; j <= m; ++j) blocks.push_back({2 * n + 2 * j - 1, 2 * n + 2 * j});
  return BNCPartition(chi, Partition::from_blocks(chi.total(), blocks));
}

bool is_parity_pure(const BNCPartition& p) {
  const Partition& part = p.flat();
  std::vector<int> parity(part.block_count(), -1);
  for (int e = 1; e <= part.size(); ++e) {
    int par = p.chi().side_index(e) % 2;
    int& slot = parity[part.block_id(e)];
    if (slot == -1)
      slot = par;
    else if (slot != par)
      return false;
  }
  return true;
}

LR classify_lr(const BNCPartition& p) {
  const int n = p.chi().n_left, m = p.chi().n_right;
  if (n < 1 || m < 1) throw argument_error("classify_lr: need n, m >= 1");
  BNCPartition doubled = double_embed(p);
  const Partition& d = doubled.flat();
  const ChiMap& big = doubled.chi();
  bool left_class = false;
  int one_l = d.block_id(big.flat_of(Side::Left, 1));
  for (int j = 1; j <= m && !left_class; ++j)
    left_class = d.block_id(big.flat_of(Side::Right, 2 * j)) == one_l;
  bool right_class = false;
  int one_r = d.block_id(big.flat_of(Side::Right, 1));
  for (int i = 1; i <= n && !right_class; ++i)
    right_class = d.block_id(big.flat_of(Side::Left, 2 * i)) == one_r;
  if (left_class == right_class)
    throw std::logic_error("classify_lr: dichotomy violated");
  return left_class ? LR::L : LR::R;
}

BNCPartition sigma_l(int n, int m) {
  ChiMap chi(2 * n + 1, 2 * m);
  std::vector<std::vector<int>> blocks{{1}};
  for (int i = 1; i <= n; ++i) blocks.push_back({2 * i, 2 * i + 1});
  for (int j = 1; j <= m; ++j)
    blocks.push_back({chi.flat_of(Side::Right, 2 * j - 1), chi.flat_of(Side::Right, 2 * j)});
  return BNCPartition(chi, Partition::from_blocks(chi.total(), blocks));
}

BNCPartition sigma_r(int n, int m) {
  ChiMap chi(2 * n, 2 * m + 1);
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({2 * i - 1, 2 * i});
  blocks.push_back({chi.flat_of(Side::Right, 1)});
  for (int j = 1; j <= m; ++j)
    blocks.push_back({chi.flat_of(Side::Right, 2 * j), chi.flat_of(Side::Right, 2 * j + 1)});
  return BNCPartition(chi, Partition::from_blocks(chi.total(), blocks));
}

std::vector<BNCPartition> enumerate_bnc_lb(int n, int m, int cap) {
  if (n < 0 || m < 0) throw argument_error("enumerate_bnc_lb: need n, m >= 0");
  if (2 * n + 1 + 2 * m > cap) throw size_error("enumerate_bnc_lb: word length exceeds cap");
  BNCPartition sl = sigma_l(n, m);
  std::vector<BNCPartition> out;
  for (const BNCPartition& pi : enumerate_bnc(2 * n + 1, 2 * m, cap))
    if (is_parity_pure(pi) && join_bnc(pi, sl).is_full()) out.push_back(pi);
  return out;
}

std::vector<BNCPartition> enumerate_bnc_rb(int n, int m, int cap) {
  if (n < 0 || m < 0) throw argument_error("enumerate_bnc_rb: need n, m >= 0");
  if (2 * n + 2 * m + 1 > cap) throw size_error("enumerate_bnc_rb: word length exceeds cap");
  BNCPartition sr = sigma_r(n, m);
  std::vector<BNCPartition> out;
  for (const BNCPartition& pi : enumerate_bnc(2 * n, 2 * m + 1, cap))
    if (is_parity_pure(pi) && join_bnc(pi, sr).is_full()) out.push_back(pi);
  return out;
}

}  // namespace bifree
