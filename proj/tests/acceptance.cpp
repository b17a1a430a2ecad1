// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Runs end-to-end on the public library API only.

#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mzb/analysis.hpp"

using namespace mzb;

namespace {

int g_failures = 0;
std::vector<std::string> g_details;

#define REQ(cond)                                                              \
    do {                                                                       \
        if (!(cond)) {                                                         \
            ok = false;                                                        \
            g_details.push_back(std::string("  at line ") +                    \
                                std::to_string(__LINE__) + ": " #cond);        \
        }                                                                      \
    } while (0)

void criterion(int n, const char *name, const std::function<bool()> &fn) {
    g_details.clear();
    bool ok = false;
    std::string err;
    try {
        ok = fn();
    } catch (const std::exception &e) {
        err = e.what();
        ok = false;
    }
    std::printf("criterion %2d (%s): %s\n", n, name, ok ? "pass" : "FAIL");
    if (!ok) {
        ++g_failures;
        for (const auto &d : g_details) std::printf("%s\n", d.c_str());
        if (!err.empty()) std::printf("  exception: %s\n", err.c_str());
    }
    std::fflush(stdout);
}

struct Solved {
    LinearSystem sys;
    ColumnTable table;
    PivotSequence pivots;
    DimensionReport report;

    explicit Solved(int k, Family f = Family::EDS)
        : sys(generate_system(k, f)),
          table(k),
          pivots(forward_eliminate(sys)),
          report(dimensions(sys, pivots, table)) {}
};

std::map<int, Solved> g_eds;  // weight -> solved EDS system, k = 2..14

const std::vector<long long> kDimTotals{1, 0, 1, 1, 1, 2,  2,  3,  4,  5,  7, 9,
                                        12, 16, 21, 28, 37, 49, 65, 86, 114, 151, 200};

std::set<std::vector<int>> support(const Gf2Combination &c, const ColumnTable &t) {
    std::set<std::vector<int>> out;
    for (uint32_t id : c.ids()) out.insert(t.index_of(id).parts);
    return out;
}

std::set<std::vector<int>> parts_set(const std::vector<std::vector<int>> &v) {
    return {v.begin(), v.end()};
}

WordSet zwords(const std::vector<std::vector<int>> &indices) {
    std::vector<Word> ws;
    for (const auto &p : indices) ws.push_back(index_to_word(MultIndex(p)));
    return WordSet(std::move(ws));
}

Gf2Combination graded_class(const MultIndex &k, const Solved &s) {
    return depth_truncate(reduced_form(k, s.table, s.pivots), k.depth(), s.table);
}

// --- mask-based span oracles for criterion 10 (columns <= 10) -------------

int lead_bit(uint32_t mask) {  // smallest set bit, 1-based; 0 for empty
    if (mask == 0) return 0;
    int b = 1;
    while (!(mask & 1)) {
        mask >>= 1;
        ++b;
    }
    return b;
}

// Exhaustive span enumeration: does some XOR of the vectors lead at j?
bool span_leads_at(const std::vector<uint32_t> &vecs, int j) {
    size_t n = vecs.size();
    for (uint64_t m = 1; m < (uint64_t(1) << n); ++m) {
        uint32_t acc = 0;
        for (size_t i = 0; i < n; ++i)
            if ((m >> i) & 1) acc ^= vecs[i];
        if (lead_bit(acc) == j) return true;
    }
    return false;
}

uint32_t mask_rank(std::vector<uint32_t> vecs) {
    uint32_t rank = 0;
    for (int b = 1; b <= 32; ++b) {
        size_t p = rank;
        while (p < vecs.size() && lead_bit(vecs[p]) != b) ++p;
        if (p == vecs.size()) continue;
        std::swap(vecs[rank], vecs[p]);
        for (size_t i = 0; i < vecs.size(); ++i)
            if (i != rank && (vecs[i] & (uint32_t(1) << (b - 1)))) vecs[i] ^= vecs[rank];
        ++rank;
    }
    return rank;
}

uint32_t to_mask(const Gf2Combination &c) {
    uint32_t m = 0;
    for (uint32_t id : c.ids()) m |= uint32_t(1) << (id - 1);
    return m;
}

Gf2Combination from_mask(uint32_t m) {
    std::vector<uint32_t> ids;
    for (uint32_t b = 0; b < 32; ++b)
        if (m & (uint32_t(1) << b)) ids.push_back(b + 1);
    return Gf2Combination(std::move(ids));
}

Word random_word(std::mt19937 &rng, int max_deg) {
    uint32_t deg = 1 + rng() % max_deg;
    return Word(deg, rng() & ((uint64_t(1) << deg) - 1));
}

}  // namespace

int main() {
    for (int k = 2; k <= 14; ++k) g_eds.emplace(k, Solved(k));

    criterion(1, "dimension totals, k = 2..14", [] {
        bool ok = true;
        for (int k = 2; k <= 14; ++k)
            REQ(g_eds.at(k).report.dim_z == static_cast<uint32_t>(kDimTotals[k]));
        return ok;
    });

    criterion(2, "depth-graded dimensions, k = 2..14", [] {
        bool ok = true;
        SeriesTable t = expected_tables(14, 7);
        for (int k = 2; k <= 14; ++k) {
            const auto &dims = g_eds.at(k).report.depth_dims;
            long long total = 0;
            for (int r = 1; r < static_cast<int>(dims.size()); ++r) {
                REQ(dims[r] == binomial(r, k - 2 * r));
                long long c = r < static_cast<int>(t.c[k].size()) ? t.c[k][r] : 0;
                REQ(dims[r] == c);
                total += dims[r];
            }
            REQ(total == kDimTotals[k]);
        }
        return ok;
    });

    criterion(3, "Hoffman basis columns, k = 2..14", [] {
        bool ok = true;
        for (int k = 2; k <= 14; ++k) {
            const Solved &s = g_eds.at(k);
            HoffmanCheck h = verify_hoffman_basis(s.report, s.table);
            REQ(h.pass);
            REQ(h.extra.empty());
            REQ(h.missing.empty());
        }
        return ok;
    });

    criterion(4, "KNT and MJPO dimensions, k = 7..14", [] {
        bool ok = true;
        std::vector<uint32_t> knt_expect{4, 6, 8, 12, 21, 30, 44, 66};
        std::vector<uint32_t> mjpo_expect{4, 4, 6, 8, 10, 14, 18, 24};
        std::map<int, uint32_t> mjpo_dims;
        for (int k = 2; k <= 14; ++k)
            mjpo_dims[k] = Solved(k, Family::MJPO).report.dim_z;
        for (int k = 7; k <= 14; ++k) {
            REQ(Solved(k, Family::KNT).report.dim_z == knt_expect[k - 7]);
            REQ(mjpo_dims.at(k) == mjpo_expect[k - 7]);
        }
        FibonacciReport fr = fibonacci_law_check(Family::MJPO, mjpo_dims);
        std::vector<int> in_range;
        for (int k : fr.exceptions)
            if (k >= 7 && k <= 14) in_range.push_back(k);
        REQ(in_range == std::vector<int>{7});
        return ok;
    });

    criterion(5, "golden relations, weight <= 4", [] {
        bool ok = true;
        struct Row {
            std::vector<int> k, l;
            std::vector<std::vector<int>> sup;
        };
        // Weight 3, then weight 4 in pair order (weight of K, code K, code L).
        std::vector<Row> w3{{{1}, {2}, {{2, 1}, {3}}}};
        std::vector<Row> w4{
            {{1}, {3}, {{2, 2}, {3, 1}, {4}}},
            {{1}, {2, 1}, {{2, 1, 1}, {2, 2}, {3, 1}}},
            {{2}, {2}, {{4}}},
            {{1, 1}, {2}, {{2, 1, 1}, {2, 2}, {3, 1}}},
        };
        for (int k : {3, 4}) {
            const Solved &s = g_eds.at(k);
            const auto &expect = k == 3 ? w3 : w4;
            REQ(s.sys.rows.size() == expect.size());
            if (s.sys.rows.size() != expect.size()) continue;
            for (size_t i = 0; i < expect.size(); ++i) {
                REQ(s.sys.provenance[i].k == MultIndex(expect[i].k));
                REQ(s.sys.provenance[i].l == MultIndex(expect[i].l));
                // Bit-exact row under the documented column order.
                std::vector<uint32_t> ids;
                for (const auto &p : expect[i].sup) ids.push_back(s.table.id_of(MultIndex(p)));
                REQ(s.sys.rows[i] == Gf2Combination(std::move(ids)));
            }
        }
        return ok;
    });

    criterion(6, "regularization goldens", [] {
        bool ok = true;
        ShuffleMemo memo(12);
        REQ(reg_product_gf2(ProductKind::Shuffle, MultIndex{1}, MultIndex{2}, memo).empty());
        REQ(reg_product_gf2(ProductKind::Stuffle, MultIndex{1}, MultIndex{2}, memo) ==
            zwords({{2, 1}, {3}}));
        REQ(reg_product_gf2(ProductKind::Shuffle, MultIndex{1, 1}, MultIndex{2}, memo).empty());
        REQ(reg_product_gf2(ProductKind::Stuffle, MultIndex{1, 1}, MultIndex{2}, memo) ==
            zwords({{2, 1, 1}, {2, 2}, {3, 1}}));
        auto reg = [&](std::vector<int> idx) {
            return regularize_word_gf2(index_to_word(MultIndex(std::move(idx))), memo);
        };
        REQ(reg({1, 2}).empty());
        REQ(reg({1, 1, 2}) == zwords({{2, 1, 1}}));
        REQ(reg({1, 2, 1}) == zwords({{2, 1, 1}}));
        REQ(reg({1, 3}) == zwords({{2, 2}}));
        return ok;
    });

    criterion(7, "depth-graded reduced forms, k <= 7", [] {
        bool ok = true;
        struct Identity {
            std::vector<int> lhs;
            std::vector<std::vector<int>> rhs;
        };
        std::vector<Identity> ids{
            {{3, 1}, {{2, 2}}},
            {{4, 1}, {{2, 3}, {3, 2}}},
            {{2, 1, 3}, {{2, 2, 2}}},
            {{3, 2, 1}, {{2, 2, 2}}},
            {{4, 1, 1}, {{2, 2, 2}}},
            {{5, 1}, {{3, 3}}},
            {{5, 1, 1}, {{2, 2, 3}, {2, 3, 2}, {3, 2, 2}}},
            {{3, 1, 3}, {{2, 2, 3}, {2, 3, 2}, {3, 2, 2}}},
            {{3, 3, 1}, {{2, 3, 2}}},
            {{4, 2, 1}, {{2, 2, 3}, {2, 3, 2}}},
            {{4, 1, 2}, {{2, 2, 3}, {3, 2, 2}}},
            {{2, 1, 4}, {{2, 2, 3}, {3, 2, 2}}},
            {{2, 4, 1}, {{2, 3, 2}, {3, 2, 2}}},
        };
        for (const auto &id : ids) {
            MultIndex lhs(id.lhs);
            const Solved &s = g_eds.at(lhs.weight());
            REQ(support(graded_class(lhs, s), s.table) == parts_set(id.rhs));
        }
        return ok;
    });

    criterion(8, "conflict-driven vs dense oracle, all families, k = 2..12", [] {
        bool ok = true;
        for (Family f : {Family::EDS, Family::FDS, Family::MJPO, Family::KNT}) {
            for (int k = 2; k <= 12; ++k) {
                LinearSystem sys = f == Family::EDS ? g_eds.at(k).sys : generate_system(k, f);
                PivotSequence piv = forward_eliminate(sys);
                DenseResult dense = dense_eliminate_oracle(sys);
                REQ(piv.rank() == dense.rank);
                std::vector<uint32_t> cols;
                for (uint32_t j = 1; j <= sys.column_count(); ++j)
                    if (piv.has(j)) cols.push_back(j);
                REQ(cols == dense.pivot_cols);
            }
        }
        return ok;
    });

    criterion(9, "relation-basis extraction, k = 3..10", [] {
        bool ok = true;
        ShuffleMemo memo(12);
        for (int k = 3; k <= 10; ++k) {
            const Solved &s = g_eds.at(k);
            auto basis = extract_relation_basis(s.sys, s.pivots);
            uint32_t expect = (uint32_t(1) << (k - 2)) - uint32_t(kDimTotals[k]);
            REQ(basis.size() == expect);
            REQ(basis.size() == s.pivots.rank());
            // The extracted pairs alone reproduce the full rank.
            LinearSystem sub;
            sub.weight = k;
            sub.family = Family::EDS;
            for (const Provenance &p : basis) {
                sub.rows.push_back(eds_relation(p.k, p.l, s.table, memo));
                sub.provenance.push_back(p);
            }
            REQ(forward_eliminate(sub).rank() == s.pivots.rank());
        }
        return ok;
    });

    criterion(10, "property suites", [] {
        bool ok = true;
        std::mt19937 rng(20260826);

        // Shuffle/stuffle commutativity and associativity, degree <= 10.
        for (int it = 0; it < 60; ++it) {
            Word u = random_word(rng, 4), v = random_word(rng, 3), w = random_word(rng, 3);
            REQ(shuffle_int(u, v) == shuffle_int(v, u));
            IntWordPoly uv = shuffle_int(u, v), vw = shuffle_int(v, w);
            IntWordPoly lhs, rhs;
            for (const auto &[t, c] : uv.terms()) {
                IntWordPoly p = shuffle_int(t, w);
                for (const auto &[t2, c2] : p.terms()) lhs.add(t2, c * c2);
            }
            for (const auto &[t, c] : vw.terms()) {
                IntWordPoly p = shuffle_int(u, t);
                for (const auto &[t2, c2] : p.terms()) rhs.add(t2, c * c2);
            }
            REQ(lhs == rhs);
        }
        for (int it = 0; it < 60; ++it) {
            auto rand_index = [&](int max_w) {
                std::vector<int> p;
                int w = 1 + rng() % max_w;
                while (w > 0) {
                    int part = 1 + rng() % w;
                    p.push_back(part);
                    w -= part;
                }
                return MultIndex(p);
            };
            MultIndex a = rand_index(4), b = rand_index(3);
            REQ(stuffle_int(a, b) == stuffle_int(b, a));
        }

        // Split shuffle == recursive shuffle mod 2, total degree <= 12.
        {
            ShuffleMemo recursive(12), split(1);
            for (int it = 0; it < 40; ++it) {
                Word u = random_word(rng, 6), v = random_word(rng, 6);
                REQ(shuffle_gf2(u, v, recursive) == shuffle_gf2(u, v, split));
            }
        }

        // Text-format round trip.
        {
            const LinearSystem &sys = g_eds.at(8).sys;
            std::ostringstream os;
            write_text(sys, os);
            std::istringstream is(os.str());
            LinearSystem back = parse_text(is, "acceptance");
            REQ(back.weight == sys.weight);
            REQ(back.family == sys.family);
            REQ(back.rows == sys.rows);
        }

        // Block-parallel determinism.
        {
            const LinearSystem &ref = g_eds.at(8).sys;
            for (int blocks : {2, 5, 9}) {
                for (int threads : {1, 4}) {
                    GenConfig cfg;
                    cfg.block_count = blocks;
                    cfg.threads = threads;
                    LinearSystem sys = generate_system(8, Family::EDS, cfg);
                    REQ(sys.rows == ref.rows);
                }
            }
        }

        // 10^4 randomized pivot searches on <= 10 columns, cross-checked by
        // exhaustive span enumeration over all row subsets.
        int checked = 0;
        for (int it = 0; it < 10000; ++it) {
            uint32_t n = 4 + rng() % 7;  // 4..10 columns
            uint32_t j = 1 + rng() % n;
            // Valid echelon prefix: pivots[i-1] leads exactly at column i.
            std::vector<Gf2Combination> pivots;
            std::vector<uint32_t> pivot_masks;
            for (uint32_t i = 1; i < j; ++i) {
                uint32_t m = uint32_t(1) << (i - 1);
                m |= (rng() & ~((uint32_t(1) << i) - 1)) & ((uint32_t(1) << n) - 1);
                pivots.push_back(from_mask(m));
                pivot_masks.push_back(m);
            }
            size_t row_count = 1 + rng() % 7;  // keep subsets enumerable
            std::vector<Gf2Combination> rows;
            std::vector<uint32_t> row_masks;
            for (size_t i = 0; i < row_count; ++i) {
                uint32_t m = rng() & ((uint32_t(1) << n) - 1);
                rows.push_back(from_mask(m));
                row_masks.push_back(m);
            }

            std::vector<uint32_t> all = row_masks;
            all.insert(all.end(), pivot_masks.begin(), pivot_masks.end());
            bool expect = span_leads_at(all, static_cast<int>(j));
            auto got = find_pivot(rows, pivots, j, n);
            REQ(got.has_value() == expect);
            if (got) {
                // Output conditions: leads exactly at j and lies in the span.
                REQ(got->leading() == j);
                std::vector<uint32_t> with = all;
                with.push_back(to_mask(*got));
                REQ(mask_rank(with) == mask_rank(all));
            }
            auto evidence = conflict_search(rows, pivots, j, n);
            REQ(evidence.has_value() == expect);
            if (evidence) {
                REQ(evaluate(rows[evidence->row], evidence->assign));
                Gf2Combination reduced =
                    reduce_with_evidence(pivots, rows[evidence->row], evidence->assign);
                REQ(!reduced.empty());
                REQ(reduced.leading() == j);
            }
            ++checked;
        }
        REQ(checked == 10000);
        return ok;
    });

    criterion(11, "generating-series tables to k = 22", [] {
        bool ok = true;
        SeriesTable t = expected_tables(22, 11);
        REQ(t.d.size() >= 23);
        for (int k = 0; k <= 22; ++k) REQ(t.d[k] == kDimTotals[k]);
        for (int k = 0; k <= 22; ++k) {
            long long total = 0;
            for (int r = 0; r <= 11; ++r) {
                long long c = r < static_cast<int>(t.c[k].size()) ? t.c[k][r] : 0;
                REQ(c == (k == 0 && r == 0 ? 1 : (r >= 1 ? binomial(r, k - 2 * r) : 0)));
                total += c;
            }
            REQ(total == kDimTotals[k]);
        }
        // Broadhurst-Kreimer table, rows k = 0..22, columns r = 0..11.
        const std::vector<std::vector<long long>> bk_expect{
            {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
            {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
            {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
            {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
            {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
            {0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
            {0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
            {0, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0},
            {0, 1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0},
            {0, 1, 3, 1, 0, 0, 0, 0, 0, 0, 0, 0},
            {0, 1, 3, 3, 0, 0, 0, 0, 0, 0, 0, 0},
            {0, 1, 4, 3, 1, 0, 0, 0, 0, 0, 0, 0},
            {0, 1, 3, 6, 2, 0, 0, 0, 0, 0, 0, 0},
            {0, 1, 5, 6, 4, 0, 0, 0, 0, 0, 0, 0},
            {0, 1, 5, 9, 4, 2, 0, 0, 0, 0, 0, 0},
            {0, 1, 6, 8, 10, 3, 0, 0, 0, 0, 0, 0},
            {0, 1, 5, 14, 11, 6, 0, 0, 0, 0, 0, 0},
            {0, 1, 7, 13, 18, 7, 3, 0, 0, 0, 0, 0},
            {0, 1, 6, 19, 18, 17, 4, 0, 0, 0, 0, 0},
            {0, 1, 8, 17, 31, 19, 10, 0, 0, 0, 0, 0},
            {0, 1, 7, 25, 30, 35, 12, 4, 0, 0, 0, 0},
            {0, 1, 9, 22, 48, 37, 29, 5, 0, 0, 0, 0},
            {0, 1, 8, 32, 45, 65, 33, 16, 0, 0, 0, 0},
        };
        for (int k = 0; k <= 22; ++k)
            for (int r = 0; r <= 11; ++r) {
                long long v = r < static_cast<int>(t.bk[k].size()) ? t.bk[k][r] : 0;
                REQ(v == bk_expect[k][r]);
            }
        return ok;
    });

    std::printf("%s\n", g_failures == 0 ? "acceptance: all criteria passed"
                                        : "acceptance: FAILURES present");
    return g_failures == 0 ? 0 : 1;
}
