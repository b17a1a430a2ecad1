#include "mzb/elimination.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace mzb {

bool evaluate(const Gf2Combination &row, const Assignment &a) {
    bool v = false;
    for (uint32_t id : row.ids()) v ^= a.get(id);
    return v;
}

namespace {

// Column-permutation view: pivot columns occupy positions 1..h in order,
// the target column j is position h+1, columns past j follow, and the
// deficient columns are moved to the back.
struct PermContext {
    uint32_t n = 0, h = 0, j = 0;
    std::vector<uint32_t> key;                       // 1..n -> position
    std::vector<const Gf2Combination *> pivot_combo; // position 1..h
    std::vector<uint32_t> pivot_col;                 // original column per position

    uint32_t perm_ind(const Gf2Combination &c) const {
        uint32_t best = std::numeric_limits<uint32_t>::max();
        for (uint32_t id : c.ids()) best = std::min(best, key[id]);
        return best;
    }
};

PermContext contiguous_context(const std::vector<Gf2Combination> &pivots, uint32_t j,
                               uint32_t n) {
    PermContext ctx;
    ctx.n = n;
    ctx.h = j - 1;
    ctx.j = j;
    ctx.key.resize(n + 1);
    for (uint32_t c = 1; c <= n; ++c) ctx.key[c] = c;
    for (uint32_t i = 1; i < j; ++i) {
        ctx.pivot_combo.push_back(&pivots[i - 1]);
        ctx.pivot_col.push_back(i);
    }
    return ctx;
}

PermContext reordered_context(
    const std::vector<std::pair<uint32_t, const Gf2Combination *>> &pivots, uint32_t j,
    uint32_t n) {
    PermContext ctx;
    ctx.n = n;
    ctx.h = static_cast<uint32_t>(pivots.size());
    ctx.j = j;
    ctx.key.assign(n + 1, 0);
    uint32_t pos = 1;
    for (const auto &[col, combo] : pivots) {
        ctx.key[col] = pos++;
        ctx.pivot_combo.push_back(combo);
        ctx.pivot_col.push_back(col);
    }
    ctx.key[j] = pos++;
    for (uint32_t c = j + 1; c <= n; ++c) ctx.key[c] = pos++;
    for (uint32_t c = 1; c < j; ++c)
        if (ctx.key[c] == 0) ctx.key[c] = pos++;
    return ctx;
}

std::optional<ConflictEvidence> conflict_search_impl(
    const std::vector<const Gf2Combination *> &rows, const std::vector<size_t> &row_ids,
    const PermContext &ctx) {
    uint32_t target_pos = ctx.h + 1;
    // Only rows whose leading position reaches the assigned range can conflict.
    std::vector<std::vector<size_t>> bucket(target_pos + 1);
    for (size_t i = 0; i < rows.size(); ++i) {
        uint32_t pi = ctx.perm_ind(*rows[i]);
        if (pi <= target_pos) bucket[pi].push_back(i);
    }
    Assignment a;
    a.resize(ctx.n);
    a.target = ctx.j;
    a.set(ctx.j);
    uint32_t pos = target_pos;
    while (true) {
        for (size_t i : bucket[pos]) {  // ascending input-row id
            if (evaluate(*rows[i], a)) {
                a.frontier = pos;
                return ConflictEvidence{row_ids[i], std::move(a)};
            }
        }
        if (pos == 1) return std::nullopt;
        // Forced value for the next variable down: the pivot at position
        // pos-1 must evaluate to zero.
        const Gf2Combination &p = *ctx.pivot_combo[pos - 2];
        uint32_t pc = ctx.pivot_col[pos - 2];
        bool val = false;
        for (uint32_t id : p.ids())
            if (id != pc) val ^= a.get(id);
        if (val) a.set(pc);
        --pos;
    }
}

Gf2Combination reduce_impl(const Gf2Combination &q, uint32_t frontier_pos,
                           const PermContext &ctx) {
    Gf2Combination out = q;
    for (uint32_t pos = frontier_pos; pos <= ctx.h; ++pos)
        if (ctx.perm_ind(out) == pos) out ^= *ctx.pivot_combo[pos - 1];
    if (ctx.perm_ind(out) != ctx.h + 1)
        throw std::logic_error("reduce_with_evidence: result does not lead at target");
    return out;
}

}  // namespace

std::optional<ConflictEvidence> conflict_search(const std::vector<Gf2Combination> &rows,
                                                const std::vector<Gf2Combination> &pivots,
                                                uint32_t j, uint32_t column_count) {
    if (pivots.size() + 1 < j)
        throw std::invalid_argument("conflict_search: pivot prefix shorter than j-1");
    PermContext ctx = contiguous_context(pivots, j, column_count);
    std::vector<const Gf2Combination *> ptrs;
    std::vector<size_t> ids;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty()) continue;
        ptrs.push_back(&rows[i]);
        ids.push_back(i);
    }
    return conflict_search_impl(ptrs, ids, ctx);
}

Gf2Combination reduce_with_evidence(const std::vector<Gf2Combination> &pivots,
                                    const Gf2Combination &q, const Assignment &a) {
    Gf2Combination out = q;
    for (uint32_t h = a.frontier; h < a.target; ++h)
        if (!out.empty() && out.leading() == h) out ^= pivots[h - 1];
    if (out.empty() || out.leading() != a.target)
        throw std::logic_error("reduce_with_evidence: result does not lead at target");
    return out;
}

std::optional<Gf2Combination> find_pivot(const std::vector<Gf2Combination> &rows,
                                         const std::vector<Gf2Combination> &pivots, uint32_t j,
                                         uint32_t column_count) {
    auto ev = conflict_search(rows, pivots, j, column_count);
    if (!ev) return std::nullopt;
    return reduce_with_evidence(pivots, rows[ev->row], ev->assign);
}

std::optional<Gf2Combination> find_pivot_reordered(
    const std::vector<Gf2Combination> &rows, uint32_t j,
    const std::vector<std::pair<uint32_t, const Gf2Combination *>> &pivots,
    uint32_t column_count) {
    PermContext ctx = reordered_context(pivots, j, column_count);
    std::vector<const Gf2Combination *> ptrs;
    std::vector<size_t> ids;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty()) continue;
        ptrs.push_back(&rows[i]);
        ids.push_back(i);
    }
    auto ev = conflict_search_impl(ptrs, ids, ctx);
    if (!ev) return std::nullopt;
    return reduce_impl(rows[ev->row], ev->assign.frontier, ctx);
}

uint32_t PivotSequence::rank() const {
    uint32_t r = 0;
    for (uint32_t c = 1; c <= column_count; ++c) r += by_col[c].has_value();
    return r;
}

std::vector<uint32_t> PivotSequence::pivotless() const {
    std::vector<uint32_t> out;
    for (uint32_t c = 1; c <= column_count; ++c)
        if (!by_col[c]) out.push_back(c);
    return out;
}

PivotSequence forward_eliminate(const LinearSystem &sys) {
    if (sys.weight < 2) throw std::invalid_argument("forward_eliminate: weight < 2");
    uint32_t n = sys.column_count();
    PivotSequence out;
    out.column_count = n;
    out.by_col.assign(n + 1, std::nullopt);

    std::vector<std::vector<size_t>> bucket(n + 1);
    for (size_t i = 0; i < sys.rows.size(); ++i) {
        if (sys.rows[i].empty()) continue;  // zero rows skipped at load
        bucket[sys.rows[i].leading()].push_back(i);
    }
    std::vector<size_t> cursor(n + 1, 0);
    std::vector<bool> consumed(sys.rows.size(), false);
    std::vector<std::pair<uint32_t, const Gf2Combination *>> pivots;  // ascending columns

    for (uint32_t j = 1; j <= n; ++j) {
        // Step (ii): lowest-id unconsumed input row leading at j.
        auto &cur = cursor[j];
        while (cur < bucket[j].size() && consumed[bucket[j][cur]]) ++cur;
        if (cur < bucket[j].size()) {
            size_t id = bucket[j][cur];
            consumed[id] = true;
            out.by_col[j] = PivotSequence::Entry{sys.rows[id], id};
            pivots.emplace_back(j, &out.by_col[j]->combo);
            continue;
        }
        // Step (iii): conflict-driven search over unconsumed rows leading below j.
        std::vector<const Gf2Combination *> cand;
        std::vector<size_t> cand_ids;
        for (uint32_t c = 1; c < j; ++c)
            for (size_t i = cursor[c]; i < bucket[c].size(); ++i) {
                size_t id = bucket[c][i];
                if (!consumed[id]) {
                    cand.push_back(&sys.rows[id]);
                    cand_ids.push_back(id);
                }
            }
        if (cand.empty()) continue;
        PermContext ctx = reordered_context(pivots, j, n);
        auto ev = conflict_search_impl(cand, cand_ids, ctx);
        if (!ev) continue;
        Gf2Combination q = reduce_impl(sys.rows[ev->row], ev->assign.frontier, ctx);
        // Inside the left-to-right loop the new pivot cannot lead at a
        // deficient column: that column's round would have found it.
        assert(q.leading() == j);
        consumed[ev->row] = true;
        out.by_col[j] = PivotSequence::Entry{std::move(q), ev->row};
        pivots.emplace_back(j, &out.by_col[j]->combo);
    }
    return out;
}

DenseResult dense_eliminate_oracle(const LinearSystem &sys) {
    if (sys.weight < 2) throw std::invalid_argument("dense oracle: weight < 2");
    uint32_t n = sys.column_count();
    if (n > 4096) throw std::invalid_argument("dense oracle: more than 4096 columns");
    size_t words = (n + 64) / 64;
    std::vector<std::vector<uint64_t>> m;
    for (const Gf2Combination &row : sys.rows) {
        if (row.empty()) continue;
        std::vector<uint64_t> bits(words, 0);
        for (uint32_t id : row.ids()) bits[(id - 1) >> 6] |= uint64_t(1) << ((id - 1) & 63);
        m.push_back(std::move(bits));
    }
    DenseResult res;
    size_t top = 0;
    for (uint32_t c = 1; c <= n && top < m.size(); ++c) {
        size_t w = (c - 1) >> 6;
        uint64_t mask = uint64_t(1) << ((c - 1) & 63);
        size_t sel = m.size();
        for (size_t r = top; r < m.size(); ++r)
            if (m[r][w] & mask) {
                sel = r;
                break;
            }
        if (sel == m.size()) continue;
        std::swap(m[top], m[sel]);
        for (size_t r = top + 1; r < m.size(); ++r)
            if (m[r][w] & mask)
                for (size_t x = 0; x < words; ++x) m[r][x] ^= m[top][x];
        res.pivot_cols.push_back(c);
        ++top;
    }
    res.rank = static_cast<uint32_t>(top);
    return res;
}

}  // namespace mzb
