#include "mzb/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mzb {

DimensionReport dimensions(const LinearSystem &sys, const PivotSequence &pivots,
                           const ColumnTable &table) {
    DimensionReport rep;
    rep.weight = sys.weight;
    rep.family = sys.family;
    rep.dim_e = pivots.rank();
    rep.dim_z = table.size() - rep.dim_e;
    rep.depth_cols.assign(sys.weight, 0);
    rep.depth_dims.assign(sys.weight, 0);
    for (uint32_t id = 1; id <= table.size(); ++id) {
        int r = table.index_of(id).depth();
        ++rep.depth_cols[r];
        if (!pivots.has(id)) ++rep.depth_dims[r];
    }
    for (int r = 1; r < sys.weight; ++r) {
        if (rep.depth_cols[r] != binomial(sys.weight - 2, r - 1))
            throw std::logic_error("depth block size != binomial(k-2, r-1)");
    }
    rep.pivotless = pivots.pivotless();
    return rep;
}

DimensionReport dimensions(const LinearSystem &sys) {
    ColumnTable table(sys.weight);
    PivotSequence pivots = forward_eliminate(sys);
    return dimensions(sys, pivots, table);
}

HoffmanCheck verify_hoffman_basis(const DimensionReport &report, const ColumnTable &table) {
    HoffmanCheck chk;
    std::set<uint32_t> pivotless(report.pivotless.begin(), report.pivotless.end());
    for (uint32_t id = 1; id <= table.size(); ++id) {
        bool hof = table.index_of(id).hoffman();
        bool free = pivotless.count(id) > 0;
        if (free && !hof) chk.extra.push_back(table.index_of(id));
        if (!free && hof) chk.missing.push_back(table.index_of(id));
    }
    chk.pass = chk.extra.empty() && chk.missing.empty();
    return chk;
}

Gf2Combination reduced_form(const MultIndex &k, const ColumnTable &table,
                            const PivotSequence &pivots) {
    if (!k.admissible() || k.weight() != table.weight())
        throw std::invalid_argument("reduced_form: index not admissible of this weight");
    Gf2Combination c({table.id_of(k)});
    // Each substitution removes the leading pivoted column and adds only
    // larger ones, so a single ascending scan terminates.
    while (true) {
        uint32_t next = 0;
        for (uint32_t id : c.ids())
            if (pivots.has(id)) {
                next = id;
                break;
            }
        if (next == 0) break;
        c ^= pivots.by_col[next]->combo;
    }
    return c;
}

Gf2Combination depth_truncate(const Gf2Combination &c, int depth, const ColumnTable &table) {
    std::vector<uint32_t> keep;
    for (uint32_t id : c.ids())
        if (table.index_of(id).depth() == depth) keep.push_back(id);
    return Gf2Combination(std::move(keep));
}

std::vector<Provenance> extract_relation_basis(const LinearSystem &sys,
                                               const PivotSequence &pivots) {
    if (sys.provenance.size() != sys.rows.size())
        throw std::invalid_argument("extract_relation_basis: system has no provenance");
    std::vector<size_t> consumed;
    for (uint32_t c = 1; c <= pivots.column_count; ++c)
        if (pivots.has(c)) consumed.push_back(pivots.by_col[c]->source_row);
    std::sort(consumed.begin(), consumed.end());
    std::vector<Provenance> out;
    out.reserve(consumed.size());
    for (size_t id : consumed) out.push_back(sys.provenance[id]);
    return out;
}

FibonacciReport fibonacci_law_check(Family family, const std::map<int, uint32_t> &dims) {
    FibonacciReport rep;
    rep.family = family;
    rep.law_asserted = family != Family::KNT;
    for (const auto &[k, v] : dims) {
        auto a = dims.find(k - 2), b = dims.find(k - 3);
        if (a == dims.end() || b == dims.end()) continue;
        long long diff = static_cast<long long>(v) - a->second - b->second;
        rep.difference[k] = diff;
        if (diff != 0) rep.exceptions.push_back(k);
    }
    return rep;
}

double estimated_memory_gib(int k, Family family) {
    // Crude extrapolation from the desk-scale row counts; meant only to warn
    // before multi-hundred-GiB runs.
    double cols = std::ldexp(1.0, k - 2);
    double rows_per_col = family == Family::KNT ? 1.0 : (family == Family::MJPO ? 2.5 : 3.0);
    double mean_support = family == Family::KNT ? 0.002 * cols : 0.006 * cols;
    return cols * rows_per_col * std::max(16.0, mean_support) * 4.0 / (1024.0 * 1024.0 * 1024.0);
}

DimensionReport run_pipeline(int k, Family family, const PipelineOptions &opts) {
    LinearSystem sys = generate_system(k, family, opts.gen);
    ColumnTable table(k);
    std::string stem = opts.out_dir + "/" + family_name(family) + "_k" + std::to_string(k);
    write_text(sys, stem + ".txt");
    write_column_table(table, stem + ".cols");
    if (opts.compact) compact_write(sys, stem + ".mzf2");

    PivotSequence pivots = forward_eliminate(sys);
    if (opts.oracle) {
        DenseResult dense = dense_eliminate_oracle(sys);
        std::vector<uint32_t> fast_cols;
        for (uint32_t c = 1; c <= pivots.column_count; ++c)
            if (pivots.has(c)) fast_cols.push_back(c);
        if (dense.rank != pivots.rank() || dense.pivot_cols != fast_cols)
            throw std::runtime_error("oracle mismatch at weight " + std::to_string(k));
    }

    {
        std::ofstream os(stem + "_pivots.txt");
        os << "# weight=" << k << " family=" << family_name(family) << "\n";
        for (uint32_t c = 1; c <= pivots.column_count; ++c) {
            if (!pivots.has(c)) continue;
            os << c << " <- row " << pivots.by_col[c]->source_row << " :";
            for (uint32_t id : pivots.by_col[c]->combo.ids()) os << ' ' << id;
            os << "\n";
        }
    }

    DimensionReport rep = dimensions(sys, pivots, table);
    {
        std::ofstream os(stem + "_dims.tsv");
        os << "weight\tfamily\tdim_e\tdim_z";
        for (size_t r = 1; r < rep.depth_dims.size(); ++r) os << "\tr" << r;
        os << "\n" << k << '\t' << family_name(family) << '\t' << rep.dim_e << '\t' << rep.dim_z;
        for (size_t r = 1; r < rep.depth_dims.size(); ++r) os << '\t' << rep.depth_dims[r];
        os << "\n";
    }
    return rep;
}

namespace {

std::string join_row(const std::vector<std::string> &cells, TableStyle style,
                     const std::vector<size_t> &widths) {
    std::ostringstream os;
    switch (style) {
        case TableStyle::Tsv:
            for (size_t i = 0; i < cells.size(); ++i) os << (i ? "\t" : "") << cells[i];
            break;
        case TableStyle::Markdown:
            os << "|";
            for (const auto &c : cells) os << ' ' << c << " |";
            break;
        case TableStyle::Aligned:
            for (size_t i = 0; i < cells.size(); ++i) {
                std::string c = cells[i];
                os << std::string(widths[i] > c.size() ? widths[i] - c.size() : 0, ' ') << c
                   << (i + 1 < cells.size() ? "  " : "");
            }
            break;
    }
    os << "\n";
    return os.str();
}

std::string render_table(const std::vector<std::vector<std::string>> &rows, TableStyle style) {
    std::vector<size_t> widths;
    for (const auto &row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    }
    std::string out;
    for (size_t r = 0; r < rows.size(); ++r) {
        out += join_row(rows[r], style, widths);
        if (r == 0 && style == TableStyle::Markdown) {
            std::string sep = "|";
            for (size_t i = 0; i < rows[0].size(); ++i) sep += " --- |";
            out += sep + "\n";
        }
    }
    return out;
}

}  // namespace

std::string format_depth_table(const std::vector<DimensionReport> &reports, TableStyle style) {
    size_t r_max = 0;
    for (const auto &rep : reports)
        for (size_t r = 1; r < rep.depth_dims.size(); ++r)
            if (rep.depth_dims[r]) r_max = std::max(r_max, r);
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"k"};
    for (size_t r = 0; r <= r_max; ++r) head.push_back("r=" + std::to_string(r));
    head.push_back("total");
    rows.push_back(head);
    for (const auto &rep : reports) {
        std::vector<std::string> row{std::to_string(rep.weight)};
        for (size_t r = 0; r <= r_max; ++r)
            row.push_back(std::to_string(r < rep.depth_dims.size() ? rep.depth_dims[r] : 0));
        row.push_back(std::to_string(rep.dim_z));
        rows.push_back(row);
    }
    return render_table(rows, style);
}

std::string format_family_table(const std::vector<int> &weights,
                                const std::map<Family, std::map<int, uint32_t>> &dims,
                                TableStyle style) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"k"};
    for (const auto &[fam, _] : dims) head.push_back(family_name(fam));
    rows.push_back(head);
    for (int k : weights) {
        std::vector<std::string> row{std::to_string(k)};
        for (const auto &[fam, by_k] : dims) {
            auto it = by_k.find(k);
            row.push_back(it == by_k.end() ? "-" : std::to_string(it->second));
        }
        rows.push_back(row);
    }
    return render_table(rows, style);
}

}  // namespace mzb
