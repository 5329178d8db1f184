#pragma once

// Internal aggregation tables over NC(n) and BNC(n,m). Every conversion and
// product formula in the library is a sum over a lattice of a product of
// coefficients that depends only on the block shapes involved, so each
// lattice is walked once per shape and collapsed into (shape profile, count)
// rows. Tables are cached behind a mutex; contents are deterministic.

#include <tuple>
#include <utility>
#include <vector>

#include "bifree/rational.hpp"

namespace bifree::detail {

/// NC(n) rows keyed by (sizes of pi, sizes of K(pi)), both sorted descending.
struct SizePairProfile {
  std::vector<int> pi_sizes;
  std::vector<int> k_sizes;
  long count = 0;
};

const std::vector<SizePairProfile>& nc_size_pairs(int n);
const std::vector<SizePairProfile>& nc_prime_size_pairs(int n);

/// NC(n) rows keyed by sizes of pi, with plain counts and
/// mobius_top-weighted counts (for the two directions of the free
/// moment-cumulant conversion).
struct SizeProfile {
  std::vector<int> sizes;
  long count = 0;
  Int mu_sum = 0;
};

const std::vector<SizeProfile>& nc_sizes(int n);

/// BNC(n,m) rows keyed by block types (lefts, rights), sorted descending.
struct TypeProfile {
  std::vector<std::pair<int, int>> types;
  long count = 0;
  Int mu_sum = 0;
};

const std::vector<TypeProfile>& bnc_types(int n, int m);

/// BNC(n,m) rows keyed by the pair (types of pi, types of K(pi)), split into
/// the section-4 classes. The L/R split only exists for n, m >= 1; otherwise
/// only `all` is populated.
struct ProductProfile {
  std::vector<std::pair<int, int>> pi_types;
  std::vector<std::pair<int, int>> k_types;
  long count = 0;
};

struct ProductTables {
  std::vector<ProductProfile> all;
  std::vector<ProductProfile> left;
  std::vector<ProductProfile> right;
};

const ProductTables& bnc_product_tables(int n, int m);

/// BNC_Lb(2n+1, 2m) / BNC_Rb(2n, 2m+1) rows keyed by blocks as
/// (pair index, lefts, rights) triples, sorted. Pair index is read off the
/// within-side parity: for the left-bottom class odd positions carry pair 2,
/// for the right-bottom class odd positions carry pair 1.
struct PsiProfile {
  std::vector<std::tuple<int, int, int>> blocks;
  long count = 0;
};

const std::vector<PsiProfile>& psi_l_rows(int n, int m);
const std::vector<PsiProfile>& psi_r_rows(int n, int m);

}  // namespace bifree::detail
