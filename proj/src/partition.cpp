#include "bifree/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "bifree/errors.hpp"

namespace bifree {

Partition::Partition(std::vector<int> block_of) : block_of_(std::move(block_of)) {
  int next = 0;
  std::vector<int> rename(block_of_.size(), -1);
  for (int& id : block_of_) {
    if (rename[id] < 0) rename[id] = next++;
    id = rename[id];
  }
  block_count_ = next;
}

Partition Partition::discrete(int n) {
  if (n < 1) throw argument_error("Partition: ground set must be nonempty");
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return Partition(std::move(m));
}

Partition Partition::full(int n) {
  if (n < 1) throw argument_error("Partition: ground set must be nonempty");
  return Partition(std::vector<int>(n, 0));
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  if (n < 1) throw argument_error("Partition: ground set must be nonempty");
  std::vector<int> m(n, -1);
  int id = 0;
  for (const auto& blk : blocks) {
    if (blk.empty()) throw argument_error("Partition: empty block");
    for (int e : blk) {
      if (e < 1 || e > n) throw argument_error("Partition: element out of range");
      if (m[e - 1] != -1) throw argument_error("Partition: blocks not disjoint");
      m[e - 1] = id;
    }
    ++id;
  }
  for (int v : m)
    if (v == -1) throw argument_error("Partition: blocks do not cover {1..n}");
  return Partition(std::move(m));
}

Partition Partition::from_membership(std::vector<int> block_of) {
  if (block_of.empty()) throw argument_error("Partition: ground set must be nonempty");
  int n = static_cast<int>(block_of.size());
  for (int v : block_of)
    if (v < 0 || v >= n) throw argument_error("Partition: bad membership id");
  return Partition(std::move(block_of));
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(block_count_);
  for (int e = 1; e <= size(); ++e) out[block_of_[e - 1]].push_back(e);
  return out;
}

std::vector<int> Partition::block_sizes() const {
  std::vector<int> sz(block_count_, 0);
  for (int id : block_of_) ++sz[id];
  std::sort(sz.begin(), sz.end(), std::greater<int>());
  return sz;
}

bool Partition::is_noncrossing() const {
  const int n = size();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (same_block(a, b)) continue;
      for (int c = b + 1; c <= n; ++c) {
        if (!same_block(a, c)) continue;
        for (int d = c + 1; d <= n; ++d)
          if (same_block(b, d)) return false;
      }
    }
  return true;
}

Partition Partition::relabeled(const std::vector<int>& perm) const {
  const int n = size();
  if (static_cast<int>(perm.size()) != n)
    throw argument_error("Partition::relabeled: permutation size mismatch");
  std::vector<int> m(n, -1);
  for (int e = 1; e <= n; ++e) m[perm[e - 1] - 1] = block_of_[e - 1];
  for (int v : m)
    if (v < 0) throw argument_error("Partition::relabeled: not a permutation");
  return Partition(std::move(m));
}

bool leq(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw argument_error("leq: ground sets differ");
  // p <= q iff elements sharing a p-block share a q-block: check that each
  // p-block id maps to a single q-block id.
  std::vector<int> image(p.block_count(), -1);
  for (int e = 1; e <= p.size(); ++e) {
    int pb = p.block_id(e), qb = q.block_id(e);
    if (image[pb] == -1)
      image[pb] = qb;
    else if (image[pb] != qb)
      return false;
  }
  return true;
}

namespace {

// Two blocks cross iff their merged element sequence alternates ownership at
// least three times (a V..W..V..W pattern).
bool blocks_cross(const std::vector<int>& m, int id_a, int id_b) {
  int runs = 0, last = -1;
  for (int v : m) {
    if (v != id_a && v != id_b) continue;
    if (v != last) {
      ++runs;
      last = v;
    }
  }
  return runs >= 4;
}

// Merges blocks of a membership vector until no two blocks cross.
Partition crossing_closure(std::vector<int> m) {
  const int n = static_cast<int>(m.size());
  bool merged = true;
  while (merged) {
    merged = false;
    for (int a = 0; a < n && !merged; ++a) {
      if (m[a] != a) continue;  // representatives only
      for (int b = a + 1; b < n && !merged; ++b) {
        if (m[b] != b) continue;
        if (blocks_cross(m, a, b)) {
          for (int& v : m)
            if (v == b) v = a;
          merged = true;
        }
      }
    }
  }
  return Partition::from_membership(std::move(m));
}

}  // namespace

Partition join_nc(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw argument_error("join_nc: ground sets differ");
  const int n = p.size();
  // Set-partition join by merging p-classes along q-blocks.
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int e = 2; e <= n; ++e) {
    for (int f = 1; f < e; ++f) {
      if (p.same_block(e, f) || q.same_block(e, f)) unite(e - 1, f - 1);
    }
  }
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = find(i);
  return crossing_closure(std::move(m));
}

Partition kreweras_nc(const Partition& p) {
  const int n = p.size();
  // Cycle bijection: sigma maps each element to the next one in its block
  // (cyclically); the blocks of K(p) are the cycles of sigma^{-1} . (1 2 .. n).
  std::vector<int> sigma_inv(n + 1, 0);
  for (const auto& blk : p.blocks()) {
    const int k = static_cast<int>(blk.size());
    for (int i = 0; i < k; ++i) {
      int from = blk[i], to = blk[(i + 1) % k];
      sigma_inv[to] = from;
    }
  }
  std::vector<int> m(n, -1);
  int id = 0;
  for (int start = 1; start <= n; ++start) {
    if (m[start - 1] != -1) continue;
    int x = start;
    while (m[x - 1] == -1) {
      m[x - 1] = id;
      x = sigma_inv[x % n + 1];
    }
    ++id;
  }
  return Partition::from_membership(std::move(m));
}

namespace {

// DFS over restricted growth strings. Open blocks form a stack; an element
// may join any open block (closing everything opened above it) or open a new
// block. Trying block ids in ascending order yields the lexicographic
// membership order.
bool nc_dfs(int n, int pos, std::vector<int>& assign, std::vector<int>& stack,
            int& block_count, const std::function<bool(const Partition&)>& fn) {
  if (pos > n) return fn(Partition::from_membership(assign));
  for (std::size_t idx = 0; idx < stack.size(); ++idx) {
    assign[pos - 1] = stack[idx];
    std::vector<int> closed(stack.begin() + static_cast<long>(idx) + 1, stack.end());
    stack.resize(idx + 1);
    if (!nc_dfs(n, pos + 1, assign, stack, block_count, fn)) return false;
    stack.insert(stack.end(), closed.begin(), closed.end());
  }
  assign[pos - 1] = block_count;
  stack.push_back(block_count);
  ++block_count;
  bool keep = nc_dfs(n, pos + 1, assign, stack, block_count, fn);
  --block_count;
  stack.pop_back();
  return keep;
}

}  // namespace

void for_each_nc(int n, const std::function<bool(const Partition&)>& fn) {
  if (n < 1) throw argument_error("for_each_nc: n must be >= 1");
  std::vector<int> assign(n, 0);
  std::vector<int> stack;
  int block_count = 0;
  nc_dfs(n, 1, assign, stack, block_count, fn);
}

std::vector<Partition> enumerate_nc(int n, int cap) {
  if (n < 1) throw argument_error("enumerate_nc: n must be >= 1");
  if (n > cap) throw size_error("enumerate_nc: n exceeds cap");
  std::vector<Partition> out;
  for_each_nc(n, [&](const Partition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<Partition> enumerate_nc_prime(int n, int cap) {
  if (n < 1) throw argument_error("enumerate_nc_prime: n must be >= 1");
  if (n > cap) throw size_error("enumerate_nc_prime: n exceeds cap");
  std::vector<Partition> out;
  for_each_nc(n, [&](const Partition& p) {
    if (std::count(p.membership().begin(), p.membership().end(), p.block_id(1)) == 1)
      out.push_back(p);
    return true;
  });
  return out;
}

namespace {

std::mutex g_mobius_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, Rat> g_mobius_memo;

}  // namespace

Rat mobius_nc(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw argument_error("mobius_nc: ground sets differ");
  if (!leq(p, q)) throw order_error("mobius_nc: p is not below q");
  {
    std::lock_guard<std::mutex> lock(g_mobius_mutex);
    auto it = g_mobius_memo.find({p.membership(), q.membership()});
    if (it != g_mobius_memo.end()) return it->second;
  }
  // Collect the interval [p, q] inside NC(n) and run the defining recursion
  // along a linear extension (block count descending is one).
  std::vector<Partition> interval;
  for_each_nc(p.size(), [&](const Partition& r) {
    if (leq(p, r) && leq(r, q)) interval.push_back(r);
    return true;
  });
  std::stable_sort(interval.begin(), interval.end(),
                   [](const Partition& a, const Partition& b) {
                     return a.block_count() > b.block_count();
                   });
  std::vector<Rat> mu(interval.size());
  for (std::size_t i = 0; i < interval.size(); ++i) {
    if (interval[i] == p) {
      mu[i] = 1;
      continue;
    }
    Rat acc = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (leq(interval[j], interval[i])) acc += mu[j];
    mu[i] = -acc;
  }
  Rat result;
  {
    std::lock_guard<std::mutex> lock(g_mobius_mutex);
    for (std::size_t i = 0; i < interval.size(); ++i)
      g_mobius_memo.insert({{p.membership(), interval[i].membership()}, mu[i]});
    result = g_mobius_memo.at({p.membership(), q.membership()});
  }
  return result;
}

Int mobius_top(const Partition& p) {
  Int result = 1;
  for (int s : kreweras_nc(p).block_sizes()) {
    Int c = catalan(s - 1);
    result *= (s % 2 == 0) ? -c : c;
  }
  return result;
}

}  // namespace bifree
