#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "bifree/errors.hpp"
#include "bifree/partition.hpp"

using namespace bifree;

namespace {

// Independent oracle: every set partition of {1..n} via restricted growth
// strings, filtered by the crossing quantifier.
std::vector<Partition> brute_force_nc(int n) {
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int max_id) {
    if (pos == n) {
      Partition p = Partition::from_membership(rgs);
      if (p.is_noncrossing()) out.push_back(p);
      return;
    }
    for (int id = 0; id <= max_id + 1; ++id) {
      rgs[pos] = id;
      rec(pos + 1, std::max(max_id, id));
    }
  };
  if (n > 0) {
    rgs[0] = 0;
    rec(1, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Partition blocks(int n, const std::vector<std::vector<int>>& b) {
  return Partition::from_blocks(n, b);
}

}  // namespace

TEST_CASE("enumerate_nc matches the brute-force oracle and Catalan counts") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<Partition> fast = enumerate_nc(n);
    std::vector<Partition> slow = brute_force_nc(n);
    REQUIRE(fast.size() == slow.size());
    CHECK(Int(fast.size()) == catalan(n));
    CHECK(std::is_sorted(fast.begin(), fast.end()));
    CHECK(fast == slow);
  }
}

TEST_CASE("enumerate_nc small examples") {
  CHECK(enumerate_nc(1) == std::vector<Partition>{Partition::full(1)});
  CHECK(enumerate_nc(3).size() == 5);

  std::vector<Partition> nc4 = enumerate_nc(4);
  CHECK(nc4.size() == 14);
  Partition crossing = blocks(4, {{1, 3}, {2, 4}});
  CHECK(std::find(nc4.begin(), nc4.end(), crossing) == nc4.end());
  CHECK_FALSE(crossing.is_noncrossing());
}

TEST_CASE("enumerate_nc rejects requests beyond the cap") {
  CHECK_THROWS_AS(enumerate_nc(7, 6), size_error);
  CHECK_THROWS_AS(enumerate_nc(0), argument_error);
}

TEST_CASE("leq is containment of blocks") {
  CHECK(leq(Partition::discrete(3), Partition::full(3)));
  CHECK_FALSE(leq(Partition::full(3), Partition::discrete(3)));
  CHECK(leq(blocks(3, {{1, 2}, {3}}), Partition::full(3)));
  CHECK_THROWS_AS(leq(Partition::full(2), Partition::full(3)), argument_error);
}

TEST_CASE("join_nc merges crossing blocks") {
  Partition p = blocks(4, {{1, 3}, {2}, {4}});
  Partition q = blocks(4, {{2, 4}, {1}, {3}});
  CHECK(join_nc(p, q) == Partition::full(4));

  for (const Partition& r : enumerate_nc(5)) {
    CHECK(join_nc(r, Partition::discrete(5)) == r);
    CHECK(join_nc(r, r) == r);
  }
}

TEST_CASE("join_nc is the least upper bound in NC(n)") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<Partition> all = enumerate_nc(n);
    for (const Partition& p : all)
      for (const Partition& q : all) {
        Partition j = join_nc(p, q);
        CHECK(j.is_noncrossing());
        CHECK(leq(p, j));
        CHECK(leq(q, j));
        for (const Partition& r : all)
          if (leq(p, r) && leq(q, r)) CHECK(leq(j, r));
      }
  }
}

TEST_CASE("kreweras golden example from the seven-element diagram") {
  Partition p = blocks(7, {{1, 4}, {2, 3}, {5}, {6, 7}});
  CHECK(kreweras_nc(p) == blocks(7, {{1, 3}, {2}, {4, 5, 7}, {6}}));
}

TEST_CASE("kreweras swaps top and bottom") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(kreweras_nc(Partition::discrete(n)) == Partition::full(n));
    CHECK(kreweras_nc(Partition::full(n)) == Partition::discrete(n));
  }
}

TEST_CASE("kreweras complement block-count identity") {
  for (int n = 1; n <= 7; ++n)
    for (const Partition& p : enumerate_nc(n))
      CHECK(p.block_count() + kreweras_nc(p).block_count() == n + 1);
}

TEST_CASE("kreweras is the largest disjoint completion") {
  // K(p) must keep the interleaved union non-crossing, and any other tau that
  // does so refines it.
  for (int n = 2; n <= 5; ++n) {
    std::vector<Partition> all = enumerate_nc(n);
    auto interleave = [&](const Partition& p, const Partition& tau) {
      std::vector<int> m(2 * n);
      for (int e = 1; e <= n; ++e) {
        m[2 * e - 2] = p.block_id(e);
        m[2 * e - 1] = p.block_count() + tau.block_id(e);
      }
      return Partition::from_membership(m);
    };
    for (const Partition& p : all) {
      Partition k = kreweras_nc(p);
      CHECK(interleave(p, k).is_noncrossing());
      for (const Partition& tau : all)
        if (interleave(p, tau).is_noncrossing()) CHECK(leq(tau, k));
    }
  }
}

TEST_CASE("kreweras join characterization on NC-prime") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<std::vector<int>> pair_blocks;
    for (int k = 1; k <= n; ++k) pair_blocks.push_back({2 * k - 1, 2 * k});
    Partition pairing = blocks(2 * n, pair_blocks);
    for (const Partition& p : enumerate_nc_prime(n)) {
      int witnesses = 0;
      Partition found = Partition::discrete(n);
      for (const Partition& tau : enumerate_nc(n)) {
        std::vector<int> m(2 * n);
        for (int e = 1; e <= n; ++e) {
          m[2 * e - 2] = p.block_id(e);
          m[2 * e - 1] = p.block_count() + tau.block_id(e);
        }
        Partition united = Partition::from_membership(m);
        if (!united.is_noncrossing()) continue;
        if (join_nc(united, pairing).block_count() != 1) continue;
        ++witnesses;
        found = tau;
      }
      CHECK(witnesses == 1);
      CHECK(found == kreweras_nc(p));
    }
  }
}

TEST_CASE("kreweras squared preserves the block-size multiset") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& p : enumerate_nc(n))
      CHECK(kreweras_nc(kreweras_nc(p)).block_sizes() == p.block_sizes());
}

TEST_CASE("mobius_nc examples") {
  CHECK(mobius_nc(Partition::full(1), Partition::full(1)) == 1);
  CHECK(mobius_nc(Partition::discrete(2), Partition::full(2)) == -1);
  CHECK(mobius_nc(Partition::discrete(3), Partition::full(3)) == 2);
  CHECK_THROWS_AS(mobius_nc(Partition::full(3), Partition::discrete(3)), order_error);
}

TEST_CASE("mobius_nc satisfies the defining recursion on every interval") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Partition> all = enumerate_nc(n);
    for (const Partition& p : all)
      for (const Partition& q : all) {
        if (!leq(p, q)) continue;
        Rat sum = 0;
        for (const Partition& r : all)
          if (leq(p, r) && leq(r, q)) sum += mobius_nc(p, r);
        CHECK(sum == Rat(p == q ? 1 : 0));
      }
  }
}

TEST_CASE("mobius closed form matches the recursion against the full partition") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& p : enumerate_nc(n))
      CHECK(mobius_nc(p, Partition::full(n)) == Rat(mobius_top(p)));
}

TEST_CASE("mobius of the full interval is the signed Catalan number") {
  for (int n = 1; n <= 8; ++n) {
    Int expect = catalan(n - 1);
    if (n % 2 == 0) expect = -expect;
    CHECK(mobius_nc(Partition::discrete(n), Partition::full(n)) == Rat(expect));
  }
}

TEST_CASE("enumerate_nc_prime keeps 1 as a singleton") {
  CHECK(enumerate_nc_prime(1) == std::vector<Partition>{Partition::full(1)});
  CHECK(enumerate_nc_prime(2) == std::vector<Partition>{Partition::discrete(2)});
  CHECK(enumerate_nc_prime(4).size() == 5);
  for (int n = 1; n <= 8; ++n) {
    std::vector<Partition> prime = enumerate_nc_prime(n);
    CHECK(Int(prime.size()) == catalan(n - 1));
    for (const Partition& p : prime)
      CHECK(std::count(p.membership().begin(), p.membership().end(), p.block_id(1)) == 1);
  }
}

TEST_CASE("partition constructors validate their input") {
  CHECK_THROWS_AS(blocks(3, {{1, 2}}), argument_error);
  CHECK_THROWS_AS(blocks(3, {{1, 2}, {2, 3}}), argument_error);
  CHECK_THROWS_AS(blocks(3, {{1, 2}, {3, 4}}), argument_error);
  CHECK_THROWS_AS(blocks(2, {{1}, {}, {2}}), argument_error);
}
