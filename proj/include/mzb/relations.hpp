#pragma once

#include <utility>
#include <vector>

#include "mzb/gf2_system.hpp"
#include "mzb/multindex.hpp"
#include "mzb/word_algebra.hpp"

namespace mzb {

/// Admissible indices of weight k plus the all-ones index.  Empty for
/// k = 0.
std::vector<MultIndex> extended_indices(int k);

/// All relation pairs of a family at one weight, each exactly once, in
/// lexicographic order on (weight of K, code(K), code(L)).
std::vector<std::pair<MultIndex, MultIndex>> enumerate_pairs(Family family, int k);

/// rel(K,L) = reg(z_K * z_L) + reg(z_K sh z_L) mod 2, mapped through the
/// column table.  Empty support means the trivial relation.
Gf2Combination eds_relation(const MultIndex &k, const MultIndex &l, const ColumnTable &table,
                            ShuffleMemo &memo);

struct GenConfig {
    int threads = 1;
    int block_count = 1;
    int memo_max_degree = 0;  // 0: default ceil(k/2)
};

/// All nonempty relations of the family, generated in block_count independent
/// blocks on a worker pool and merged in block order.  The result is
/// identical for any block_count and thread count.
LinearSystem generate_system(int k, Family family, const GenConfig &cfg = {});

}  // namespace mzb
