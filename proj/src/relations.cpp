#include "mzb/relations.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace mzb {

namespace {

std::vector<MultIndex> sorted_by_code(std::vector<MultIndex> v) {
    std::sort(v.begin(), v.end(), [](const MultIndex &a, const MultIndex &b) {
        return index_to_word(a).code() < index_to_word(b).code();
    });
    return v;
}

std::vector<MultIndex> admissible_sorted(int k) {
    if (k < 2) return {};
    return sorted_by_code(enumerate_indices(k, true));
}

}  // namespace

std::vector<MultIndex> extended_indices(int k) {
    if (k < 1) return {};
    std::vector<MultIndex> v = k >= 2 ? enumerate_indices(k, true) : std::vector<MultIndex>{};
    v.emplace_back(std::vector<int>(static_cast<size_t>(k), 1));
    return sorted_by_code(std::move(v));
}

std::vector<std::pair<MultIndex, MultIndex>> enumerate_pairs(Family family, int k) {
    std::vector<std::pair<MultIndex, MultIndex>> out;
    auto add_block = [&](const std::vector<MultIndex> &ks, const std::vector<MultIndex> &ls) {
        for (const MultIndex &a : ks)
            for (const MultIndex &b : ls) out.emplace_back(a, b);
    };
    switch (family) {
        case Family::EDS:
            for (int i = 1; i < k; ++i) add_block(extended_indices(i), admissible_sorted(k - i));
            break;
        case Family::FDS:
            for (int i = 2; i < k; ++i) add_block(admissible_sorted(i), admissible_sorted(k - i));
            break;
        case Family::MJPO:
            add_block({MultIndex{1}}, admissible_sorted(k - 1));
            for (int i = 2; i < k; ++i) add_block(admissible_sorted(i), admissible_sorted(k - i));
            break;
        case Family::KNT:
            add_block({MultIndex{1}}, admissible_sorted(k - 1));
            add_block({MultIndex{2}}, admissible_sorted(k - 2));
            if (k >= 5) add_block({MultIndex{3}, MultIndex{2, 1}}, admissible_sorted(k - 3));
            break;
    }
    std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
        int wa = a.first.weight(), wb = b.first.weight();
        if (wa != wb) return wa < wb;
        uint64_t ca = index_to_word(a.first).code(), cb = index_to_word(b.first).code();
        if (ca != cb) return ca < cb;
        return index_to_word(a.second).code() < index_to_word(b.second).code();
    });
    return out;
}

Gf2Combination eds_relation(const MultIndex &k, const MultIndex &l, const ColumnTable &table,
                            ShuffleMemo &memo) {
    WordSet support = reg_product_gf2(ProductKind::Stuffle, k, l, memo);
    support ^= reg_product_gf2(ProductKind::Shuffle, k, l, memo);
    std::vector<uint32_t> ids;
    ids.reserve(support.size());
    for (const Word &w : support.words()) ids.push_back(table.id_of(word_to_index(w)));
    return Gf2Combination(std::move(ids));
}

LinearSystem generate_system(int k, Family family, const GenConfig &cfg) {
    ColumnTable table(k);
    int memo_deg = cfg.memo_max_degree > 0 ? cfg.memo_max_degree : (k + 1) / 2;
    ShuffleMemo memo(memo_deg);
    auto pairs = enumerate_pairs(family, k);

    int blocks = std::max(1, cfg.block_count);
    std::vector<std::vector<std::pair<Gf2Combination, Provenance>>> block_rows(blocks);
    size_t per_block = (pairs.size() + blocks - 1) / std::max<size_t>(1, blocks);

    auto run_block = [&](int b) {
        size_t lo = b * per_block, hi = std::min(pairs.size(), lo + per_block);
        auto &rows = block_rows[b];
        for (size_t i = lo; i < hi; ++i) {
            Gf2Combination row = eds_relation(pairs[i].first, pairs[i].second, table, memo);
            if (!row.empty())
                rows.emplace_back(std::move(row), Provenance{pairs[i].first, pairs[i].second});
        }
    };

    int threads = std::max(1, cfg.threads);
    if (threads == 1 || blocks == 1) {
        for (int b = 0; b < blocks; ++b) run_block(b);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < std::min(threads, blocks); ++t)
            pool.emplace_back([&] {
                for (int b = next.fetch_add(1); b < blocks; b = next.fetch_add(1)) run_block(b);
            });
        for (auto &t : pool) t.join();
    }

    LinearSystem sys;
    sys.weight = k;
    sys.family = family;
    for (auto &rows : block_rows)
        for (auto &[row, prov] : rows) {
            sys.rows.push_back(std::move(row));
            sys.provenance.push_back(std::move(prov));
        }
    return sys;
}

}  // namespace mzb
