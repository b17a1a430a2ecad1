#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mzb/field.hpp"

namespace mzb {

/// Dense reference implementation of the conflict-driven forward
/// elimination, written directly against the field contract.  Small
/// instances only; mirrors the specialized GF(2) engine step for step.
template <FieldContract F>
class GenericEliminator {
public:
    using Elem = typename F::Elem;
    using Row = std::vector<Elem>;  // index 1..n, index 0 unused

    struct Result {
        std::vector<std::optional<Row>> pivot_by_col;  // 1..n
        std::vector<uint32_t> pivot_cols;
    };

    static uint32_t ind(const Row &p, uint32_t n) {
        for (uint32_t c = 1; c <= n; ++c)
            if (!F::equal(p[c], F::zero())) return c;
        return n + 1;
    }

    static Elem cf(const Row &p, uint32_t n) {
        uint32_t i = ind(p, n);
        return i <= n ? p[i] : F::zero();
    }

    static Result eliminate(std::vector<Row> rows, uint32_t n) {
        Result res;
        res.pivot_by_col.assign(n + 1, std::nullopt);
        std::vector<bool> consumed(rows.size(), false);
        for (uint32_t j = 1; j <= n; ++j) {
            size_t direct = rows.size();
            for (size_t i = 0; i < rows.size(); ++i)
                if (!consumed[i] && ind(rows[i], n) == j) {
                    direct = i;
                    break;
                }
            if (direct < rows.size()) {
                consumed[direct] = true;
                res.pivot_by_col[j] = rows[direct];
                res.pivot_cols.push_back(j);
                continue;
            }
            auto found = find_pivot_reordered(rows, consumed, res, j, n);
            if (!found) continue;
            consumed[found->second] = true;
            res.pivot_by_col[j] = std::move(found->first);
            res.pivot_cols.push_back(j);
        }
        return res;
    }

private:
    // Conflict search and reduction under a permuted order given by keys.
    static std::optional<std::pair<Row, size_t>> find_pivot_reordered(
        const std::vector<Row> &rows, const std::vector<bool> &consumed, const Result &res,
        uint32_t j, uint32_t n) {
        // Order: pivot columns first, then j, then the rest; deficient last.
        std::vector<uint32_t> by_pos;  // position -> original column, 1-based
        by_pos.push_back(0);
        for (uint32_t c : res.pivot_cols)
            if (c < j) by_pos.push_back(c);
        uint32_t h = static_cast<uint32_t>(by_pos.size()) - 1;
        by_pos.push_back(j);
        for (uint32_t c = j + 1; c <= n; ++c) by_pos.push_back(c);
        for (uint32_t c = 1; c < j; ++c)
            if (!res.pivot_by_col[c]) by_pos.push_back(c);
        std::vector<uint32_t> key(n + 1, 0);
        for (uint32_t p = 1; p <= n; ++p) key[by_pos[p]] = p;

        auto perm_ind = [&](const Row &r) {
            uint32_t best = n + 1;
            for (uint32_t c = 1; c <= n; ++c)
                if (!F::equal(r[c], F::zero())) best = std::min(best, key[c]);
            return best;
        };
        auto evaluate = [&](const Row &r, const std::vector<Elem> &assign) {
            Elem v = F::zero();
            for (uint32_t c = 1; c <= n; ++c) v = F::add(v, F::multiply(r[c], assign[c]));
            return v;
        };

        // Process: descend from position h+1 assigning forced values.
        std::vector<Elem> assign(n + 1, F::zero());
        assign[j] = F::one();
        uint32_t pos = h + 1;
        size_t conflict = rows.size();
        while (conflict == rows.size()) {
            for (size_t i = 0; i < rows.size(); ++i) {
                if (consumed[i] || ind(rows[i], n) >= j) continue;
                if (perm_ind(rows[i]) != pos) continue;
                if (!F::equal(evaluate(rows[i], assign), F::zero())) {
                    conflict = i;
                    break;
                }
            }
            if (conflict < rows.size()) break;
            if (pos == 1) return std::nullopt;
            uint32_t pc = by_pos[pos - 1];
            const Row &p = *res.pivot_by_col[pc];
            Elem tail = F::zero();
            for (uint32_t c = 1; c <= n; ++c)
                if (c != pc) tail = F::add(tail, F::multiply(p[c], assign[c]));
            assign[pc] = F::multiply(F::negate(F::invert(p[pc])), tail);
            --pos;
        }

        // Evidence-backed reduction against the pivot prefix.
        Row q = rows[conflict];
        for (uint32_t p = pos; p <= h; ++p) {
            if (perm_ind(q) != p) continue;
            uint32_t pc = by_pos[p];
            const Row &piv = *res.pivot_by_col[pc];
            Elem factor = F::multiply(q[pc], F::invert(piv[pc]));
            for (uint32_t c = 1; c <= n; ++c)
                q[c] = F::add(q[c], F::negate(F::multiply(factor, piv[c])));
        }
        return std::make_pair(std::move(q), conflict);
    }
};

}  // namespace mzb
