#pragma once

#include <vector>

#include "bifree/partition.hpp"

namespace bifree {

/// Which face of a two-faced pair a position belongs to.
enum class Side { Left, Right };

/// The standard map chi_{n,m}: positions 1..n are left, n+1..n+m are right.
/// These are the only chi constructed publicly; interleaved maps occur only
/// inside the doubled-diagram embedding, which stays in standard form too.
struct ChiMap {
  int n_left = 0;
  int n_right = 0;

  ChiMap(int n, int m);

  int total() const { return n_left + n_right; }
  Side side_of(int flat) const { return flat <= n_left ? Side::Left : Side::Right; }
  /// 1-based index within its own side.
  int side_index(int flat) const { return flat <= n_left ? flat : flat - n_left; }
  int flat_of(Side s, int index) const {
    return s == Side::Left ? index : n_left + index;
  }

  /// The permutation s_chi: lefts in increasing order, then rights in
  /// decreasing order. Returned as 1-based images, s[j-1] = s_chi(j).
  std::vector<int> s_perm() const;
  std::vector<int> s_perm_inv() const;

  friend bool operator==(const ChiMap&, const ChiMap&) = default;
};

/// A bi-non-crossing partition: a partition of the flat positions 1..n+m
/// that becomes non-crossing after reordering by s_chi^{-1}.
class BNCPartition {
public:
  BNCPartition(ChiMap chi, Partition flat);

  const ChiMap& chi() const { return chi_; }
  const Partition& flat() const { return flat_; }
  bool is_full() const { return flat_.block_count() == 1; }

  /// (#left legs, #right legs) of each block, ordered by least flat element.
  std::vector<std::pair<int, int>> block_types() const;

  friend bool operator==(const BNCPartition&, const BNCPartition&) = default;

private:
  ChiMap chi_;
  Partition flat_;
};

/// All of BNC(n,m): the image of enumerate_nc(n+m) under p -> s_chi . p.
std::vector<BNCPartition> enumerate_bnc(int n, int m, int cap = kDefaultEnumCap);

/// Bi-free Kreweras complement K(pi) = s_chi . K_NC(s_chi^{-1} . pi).
BNCPartition kreweras_bnc(const BNCPartition& p);

/// Lattice join, computed by conjugating to NC(n+m).
BNCPartition join_bnc(const BNCPartition& p, const BNCPartition& q);

/// The pair (pi, K(pi)) drawn on doubled positions: pi goes to odd lefts and
/// even rights, K(pi) to even lefts and odd rights. Lands in BNC(2n, 2m).
BNCPartition double_embed(const BNCPartition& p);

/// The pairing sigma_{n,m} on (2n, 2m) with blocks {(2i-1)_l, (2i)_l} and
/// {(2j-1)_r, (2j)_r}; doubled diagrams are characterised by joining with it
/// to the full partition.
BNCPartition sigma_pairing(int n, int m);

/// True when no block mixes an even and an odd within-side index (either
/// side); the combinatorial shape shared by doubled diagrams and the
/// "bottom" classes below.
bool is_parity_pure(const BNCPartition& p);

enum class LR { L, R };

/// The section-4 dichotomy. L when, in double_embed(p), the block containing
/// 1_l reaches an even right node; R when the block containing 1_r reaches an
/// even left node. Exactly one holds for every p with n, m >= 1.
LR classify_lr(const BNCPartition& p);

/// sigma_L on (2n+1, 2m): singleton {1_l}, pairs {(2i)_l, (2i+1)_l} and
/// {(2j-1)_r, (2j)_r}.
BNCPartition sigma_l(int n, int m);
/// sigma_R on (2n, 2m+1): pairs {(2i-1)_l, (2i)_l} and {(2j)_r, (2j+1)_r},
/// singleton {1_r}.
BNCPartition sigma_r(int n, int m);

/// BNC_Lb(2n+1, 2m): parity-pure partitions joining with sigma_L to the full
/// partition. These are the bottoms of the left class.
std::vector<BNCPartition> enumerate_bnc_lb(int n, int m, int cap = kDefaultEnumCap);
/// BNC_Rb(2n, 2m+1), the mirror.
std::vector<BNCPartition> enumerate_bnc_rb(int n, int m, int cap = kDefaultEnumCap);

}  // namespace bifree
