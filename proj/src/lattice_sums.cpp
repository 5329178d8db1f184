#include "lattice_sums.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "bifree/bnc.hpp"
#include "bifree/partition.hpp"

namespace bifree::detail {

namespace {

template <typename Key, typename Value>
class TableCache {
public:
  template <typename Fn>
  const Value& get(const Key& key, Fn&& build) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, build()).first;
    return it->second;
  }

private:
  std::mutex mutex_;
  std::map<Key, Value> cache_;
};

// Block types of s_chi . p read off directly from p: the reversal inside
// s_chi preserves which elements are left (v <= n_left).
std::vector<std::pair<int, int>> flat_types(const Partition& p, int n_left) {
  std::vector<std::pair<int, int>> t(p.block_count(), {0, 0});
  for (int e = 1; e <= p.size(); ++e) {
    auto& slot = t[p.block_id(e)];
    if (e <= n_left)
      ++slot.first;
    else
      ++slot.second;
  }
  return t;
}

std::vector<std::pair<int, int>> sorted_desc(std::vector<std::pair<int, int>> t) {
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

}  // namespace

const std::vector<SizePairProfile>& nc_size_pairs(int n) {
  static TableCache<int, std::vector<SizePairProfile>> cache;
  return cache.get(n, [n] {
    std::map<std::pair<std::vector<int>, std::vector<int>>, long> agg;
    for_each_nc(n, [&](const Partition& p) {
      ++agg[{p.block_sizes(), kreweras_nc(p).block_sizes()}];
      return true;
    });
    std::vector<SizePairProfile> rows;
    for (auto& [key, count] : agg) rows.push_back({key.first, key.second, count});
    return rows;
  });
}

const std::vector<SizePairProfile>& nc_prime_size_pairs(int n) {
  static TableCache<int, std::vector<SizePairProfile>> cache;
  return cache.get(n, [n] {
    std::map<std::pair<std::vector<int>, std::vector<int>>, long> agg;
    for_each_nc(n, [&](const Partition& p) {
      if (std::count(p.membership().begin(), p.membership().end(), p.block_id(1)) == 1)
        ++agg[{p.block_sizes(), kreweras_nc(p).block_sizes()}];
      return true;
    });
    std::vector<SizePairProfile> rows;
    for (auto& [key, count] : agg) rows.push_back({key.first, key.second, count});
    return rows;
  });
}

const std::vector<SizeProfile>& nc_sizes(int n) {
  static TableCache<int, std::vector<SizeProfile>> cache;
  return cache.get(n, [n] {
    std::map<std::vector<int>, std::pair<long, Int>> agg;
    for_each_nc(n, [&](const Partition& p) {
      auto& slot = agg[p.block_sizes()];
      ++slot.first;
      slot.second += mobius_top(p);
      return true;
    });
    std::vector<SizeProfile> rows;
    for (auto& [sizes, data] : agg) rows.push_back({sizes, data.first, data.second});
    return rows;
  });
}

const std::vector<TypeProfile>& bnc_types(int n, int m) {
  static TableCache<std::pair<int, int>, std::vector<TypeProfile>> cache;
  return cache.get({n, m}, [n, m] {
    std::map<std::vector<std::pair<int, int>>, std::pair<long, Int>> agg;
    for_each_nc(n + m, [&](const Partition& p) {
      auto& slot = agg[sorted_desc(flat_types(p, n))];
      ++slot.first;
      slot.second += mobius_top(p);
      return true;
    });
    std::vector<TypeProfile> rows;
    for (auto& [types, data] : agg) rows.push_back({types, data.first, data.second});
    return rows;
  });
}

const ProductTables& bnc_product_tables(int n, int m) {
  static TableCache<std::pair<int, int>, ProductTables> cache;
  return cache.get({n, m}, [n, m] {
    using Key = std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>;
    std::map<Key, long> all, left, right;
    const bool split = n >= 1 && m >= 1;
    ChiMap chi(n, m);
    const std::vector<int> s = chi.s_perm();
    for_each_nc(n + m, [&](const Partition& p) {
      Key key{sorted_desc(flat_types(p, n)), sorted_desc(flat_types(kreweras_nc(p), n))};
      ++all[key];
      if (split) {
        BNCPartition pi(chi, p.relabeled(s));
        (classify_lr(pi) == LR::L ? left : right)[key] += 1;
      }
      return true;
    });
    ProductTables tables;
    auto flatten = [](const std::map<Key, long>& src) {
      std::vector<ProductProfile> rows;
      for (auto& [key, count] : src) rows.push_back({key.first, key.second, count});
      return rows;
    };
    tables.all = flatten(all);
    tables.left = flatten(left);
    tables.right = flatten(right);
    return tables;
  });
}

namespace {

// Shared scan for the two bottom classes. Word positions live on
// (n_left, n_right); sigma is the connecting pairing; odd within-side
// positions carry `odd_pair`, even ones the other pair index.
std::vector<PsiProfile> psi_rows(int n_left, int n_right, const Partition& sigma_conj,
                                 int odd_pair) {
  const int total = n_left + n_right;
  std::map<std::vector<std::tuple<int, int, int>>, long> agg;
  for_each_nc(total, [&](const Partition& p) {
    // p is the s_chi^{-1}-conjugated picture; element v sits at flat
    // position s(v), and side indices are unchanged for lefts while rights
    // reverse, which keeps within-side parity computable from the flat slot.
    std::vector<std::tuple<int, int, int>> blocks(p.block_count(), {0, 0, 0});
    bool pure = true;
    for (int v = 1; v <= total && pure; ++v) {
      const int flat = v <= n_left ? v : total + n_left + 1 - v;
      const int side_index = flat <= n_left ? flat : flat - n_left;
      const int pair = side_index % 2 == 1 ? odd_pair : 3 - odd_pair;
      auto& [bpair, lefts, rights] = blocks[p.block_id(v)];
      if (bpair == 0)
        bpair = pair;
      else if (bpair != pair)
        pure = false;
      if (flat <= n_left)
        ++lefts;
      else
        ++rights;
    }
    if (!pure) return true;
    if (join_nc(p, sigma_conj).block_count() != 1) return true;
    std::sort(blocks.begin(), blocks.end());
    ++agg[blocks];
    return true;
  });
  std::vector<PsiProfile> rows;
  for (auto& [blocks, count] : agg) rows.push_back({blocks, count});
  return rows;
}

Partition conjugated_flat(const BNCPartition& sigma) {
  return sigma.flat().relabeled(sigma.chi().s_perm_inv());
}

}  // namespace

const std::vector<PsiProfile>& psi_l_rows(int n, int m) {
  static TableCache<std::pair<int, int>, std::vector<PsiProfile>> cache;
  return cache.get({n, m}, [n, m] {
    return psi_rows(2 * n + 1, 2 * m, conjugated_flat(sigma_l(n, m)), /*odd_pair=*/2);
  });
}

const std::vector<PsiProfile>& psi_r_rows(int n, int m) {
  static TableCache<std::pair<int, int>, std::vector<PsiProfile>> cache;
  return cache.get({n, m}, [n, m] {
    return psi_rows(2 * n, 2 * m + 1, conjugated_flat(sigma_r(n, m)), /*odd_pair=*/1);
  });
}

}  // namespace bifree::detail
