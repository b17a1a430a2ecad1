#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mzb/gf2_system.hpp"

namespace mzb {

/// Contiguous suffix assignment (x_i,...,x_n) built during conflict search:
/// x_target = 1, everything above target = 0, and the descent fills in the
/// forced values below.  `ones` is a bitset over original column ids.
struct Assignment {
    uint32_t frontier = 0;  // smallest assigned column position
    uint32_t target = 0;    // column j
    std::vector<uint64_t> ones;

    void resize(uint32_t n) { ones.assign((n + 64) / 64, 0); }
    bool get(uint32_t col) const { return (ones[(col - 1) >> 6] >> ((col - 1) & 63)) & 1; }
    void set(uint32_t col) { ones[(col - 1) >> 6] |= uint64_t(1) << ((col - 1) & 63); }
};

/// Parity of |support ∩ ones|: the GF(2) value of the row under the
/// assignment.
bool evaluate(const Gf2Combination &row, const Assignment &a);

struct ConflictEvidence {
    size_t row;  // index into the candidate rows; ind(row) = assign.frontier
    Assignment assign;
};

/// Unit-propagation-style descent from column j toward column 1 over a
/// contiguous pivot prefix (pivots[i-1] leads column i).  Returns a
/// candidate row that evaluates nonzero under the built assignment, or
/// nothing when the descent reaches column 1 without a conflict.
std::optional<ConflictEvidence> conflict_search(const std::vector<Gf2Combination> &rows,
                                                const std::vector<Gf2Combination> &pivots,
                                                uint32_t j, uint32_t column_count);

/// Eliminates q against the pivot prefix while its leading column matches a
/// pivot; the conflict evidence guarantees the result leads exactly at j.
Gf2Combination reduce_with_evidence(const std::vector<Gf2Combination> &pivots,
                                    const Gf2Combination &q, const Assignment &a);

/// Conflict search plus reduction; succeeds iff the span of rows and pivots
/// contains a combination leading at j.
std::optional<Gf2Combination> find_pivot(const std::vector<Gf2Combination> &rows,
                                         const std::vector<Gf2Combination> &pivots, uint32_t j,
                                         uint32_t column_count);

/// Same with a gapped pivot sequence: the deficient columns (those below j
/// without a pivot) are reordered past the tail as a column-permutation
/// view, and the result is mapped back.  The returned combination leads at
/// j or at a deficient column.
std::optional<Gf2Combination> find_pivot_reordered(
    const std::vector<Gf2Combination> &rows, uint32_t j,
    const std::vector<std::pair<uint32_t, const Gf2Combination *>> &pivots,
    uint32_t column_count);

/// Echelon output: per pivot column the combination plus the id of the
/// input row it consumed.
struct PivotSequence {
    struct Entry {
        Gf2Combination combo;
        size_t source_row;
    };

    uint32_t column_count = 0;
    std::vector<std::optional<Entry>> by_col;  // index 1..column_count

    bool has(uint32_t j) const { return by_col[j].has_value(); }
    uint32_t rank() const;
    std::vector<uint32_t> pivotless() const;
};

/// Algorithm: walk columns left to right; take an unconsumed input row
/// leading at j when one exists, otherwise run the reordered pivot search
/// over the unconsumed rows leading below j.
PivotSequence forward_eliminate(const LinearSystem &sys);

struct DenseResult {
    uint32_t rank = 0;
    std::vector<uint32_t> pivot_cols;
};

/// Textbook GF(2) row reduction on packed bit rows, same column order.
/// Guard: at most 4096 columns.
DenseResult dense_eliminate_oracle(const LinearSystem &sys);

}  // namespace mzb
