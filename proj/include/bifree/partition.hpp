#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "bifree/rational.hpp"

namespace bifree {

/// Default enumeration cap; Catalan(14) = 2,674,440.
inline constexpr int kDefaultEnumCap = 14;

/// A set partition of {1..n}, stored as a membership vector: element k maps
/// to the id of its block, blocks numbered 0,1,2,... in order of least
/// element. This canonical form makes equality and lexicographic comparison
/// plain vector operations.
class Partition {
public:
  /// The discrete partition 0_n (all singletons).
  static Partition discrete(int n);
  /// The full partition 1_n (one block).
  static Partition full(int n);
  /// From explicit blocks over 1-based elements; they must be disjoint,
  /// nonempty, and cover {1..n}.
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  /// From a raw membership vector (will be renumbered canonically).
  static Partition from_membership(std::vector<int> block_of);

  int size() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return block_count_; }
  /// Block id of a 1-based element.
  int block_id(int element) const { return block_of_[element - 1]; }
  bool same_block(int a, int b) const { return block_id(a) == block_id(b); }

  /// Blocks as sorted lists of 1-based elements, ordered by least element.
  std::vector<std::vector<int>> blocks() const;
  /// Multiset of block sizes, descending.
  std::vector<int> block_sizes() const;

  /// Literal a<b<c<d crossing quantifier; ground sets are small, clarity wins.
  bool is_noncrossing() const;

  /// Applies a permutation to every element: element k of a block becomes
  /// perm[k-1] (1-based values). Used for the s_chi conjugations.
  Partition relabeled(const std::vector<int>& perm) const;

  const std::vector<int>& membership() const { return block_of_; }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the membership vector (the spec's canonical order).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.block_of_ <=> b.block_of_;
  }

private:
  explicit Partition(std::vector<int> block_of);
  std::vector<int> block_of_;
  int block_count_ = 0;
};

/// Reverse-refinement order: true iff every block of p lies inside a block of q.
bool leq(const Partition& p, const Partition& q);

/// Join in the NC lattice: set-partition join, then repeated merging of any
/// two crossing blocks until non-crossing.
Partition join_nc(const Partition& p, const Partition& q);

/// Kreweras complement. Characterised as the largest non-crossing partition
/// on the primed copies 1',..,n' (interleaved 1,1',2,2',...,n,n') whose union
/// with p stays non-crossing; computed here through the cycle bijection
/// sigma_{K(p)} = sigma_p^{-1} . (1 2 ... n) and cross-checked against the
/// interleaving definition in the tests.
Partition kreweras_nc(const Partition& p);

/// All non-crossing partitions of {1..n} in lexicographic membership order.
/// Length Catalan(n). Throws size_error when n exceeds the cap.
std::vector<Partition> enumerate_nc(int n, int cap = kDefaultEnumCap);

/// Streaming form of enumerate_nc, same canonical order, no cap (callers own
/// the cost). Stops early if fn returns false.
void for_each_nc(int n, const std::function<bool(const Partition&)>& fn);

/// NC'(n): non-crossing partitions with {1} as a singleton block.
std::vector<Partition> enumerate_nc_prime(int n, int cap = kDefaultEnumCap);

/// Moebius function of the NC(n) lattice on an interval p <= q, by the
/// defining recursion sum_{p<=r<=q} mu(p,r) = [p==q], memoized.
Rat mobius_nc(const Partition& p, const Partition& q);

/// Closed form for mu(p, 1_n) = prod over blocks V of K(p) of
/// (-1)^(|V|-1) Catalan(|V|-1). The recursion above is the oracle for this
/// in the tests; conversions use this form for speed.
Int mobius_top(const Partition& p);

}  // namespace bifree
