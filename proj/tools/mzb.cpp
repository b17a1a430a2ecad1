#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "mzb/analysis.hpp"
#include "mzb/elimination.hpp"
#include "mzb/gf2_system.hpp"
#include "mzb/relations.hpp"
#include "mzb/series.hpp"

namespace {

using namespace mzb;

struct GlobalConfig {
    int threads = 1;
    int memo_max_degree = 0;
};

GlobalConfig load_config(const std::string &path) {
    GlobalConfig cfg;
    if (!path.empty()) {
        std::ifstream is(path);
        if (!is) throw std::runtime_error("cannot open config: " + path);
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            std::string key = line.substr(0, eq), val = line.substr(eq + 1);
            if (key == "threads") cfg.threads = std::stoi(val);
            if (key == "memo_max_degree") cfg.memo_max_degree = std::stoi(val);
        }
    }
    if (const char *env = std::getenv("MZB_THREADS")) cfg.threads = std::atoi(env);
    return cfg;
}

Family parse_family(const std::string &s) {
    auto f = family_from_name(s);
    if (!f) throw CLI::ValidationError("family", "unknown family: " + s);
    return *f;
}

std::vector<Family> parse_families(const std::string &s) {
    std::vector<Family> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_family(tok));
    return out;
}

std::pair<int, int> parse_range(const std::string &s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int k = std::stoi(s);
        return {k, k};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

void check_large(int k, Family family, bool allow_large) {
    bool large = k >= 18 || (family == Family::KNT && k >= 21);
    if (!large) return;
    std::cerr << "weight " << k << " " << family_name(family)
              << " is a large run; estimated memory "
              << estimated_memory_gib(k, family) << " GiB\n";
    if (!allow_large) throw std::runtime_error("refusing large run without --allow-large");
}

MultIndex parse_index(const std::string &s) {
    MultIndex k;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) k.parts.push_back(std::stoi(tok));
    return k;
}

int cmd_gen(int k, Family family, const std::string &out, const GlobalConfig &gc,
            bool allow_large, bool compact) {
    check_large(k, family, allow_large);
    GenConfig cfg;
    cfg.threads = gc.threads;
    cfg.block_count = std::max(1, gc.threads);
    cfg.memo_max_degree = gc.memo_max_degree;
    LinearSystem sys = generate_system(k, family, cfg);
    write_text(sys, out);
    write_column_table(ColumnTable(k), out + ".cols");
    if (compact) compact_write(sys, out + ".mzf2");
    std::cout << "wrote " << sys.rows.size() << " relations over " << sys.column_count()
              << " columns to " << out << "\n";
    return 0;
}

int cmd_solve(const std::string &in, bool oracle, const std::string &dump_pivots,
              const std::string &dump_basis) {
    LinearSystem sys = parse_text(in);
    PivotSequence pivots = forward_eliminate(sys);
    ColumnTable table(sys.weight);
    DimensionReport rep = dimensions(sys, pivots, table);
    if (oracle) {
        DenseResult dense = dense_eliminate_oracle(sys);
        std::vector<uint32_t> fast;
        for (uint32_t c = 1; c <= pivots.column_count; ++c)
            if (pivots.has(c)) fast.push_back(c);
        if (dense.rank != rep.dim_e || dense.pivot_cols != fast) {
            std::cerr << "oracle mismatch: dense rank " << dense.rank << " vs " << rep.dim_e
                      << "\n";
            return 1;
        }
        std::cout << "oracle agreement: rank and pivot set match\n";
    }
    std::cout << "weight " << sys.weight << " rank " << rep.dim_e << " corank " << rep.dim_z
              << "\n";
    if (!dump_pivots.empty()) {
        std::ofstream os(dump_pivots);
        for (uint32_t c = 1; c <= pivots.column_count; ++c) {
            if (!pivots.has(c)) continue;
            os << c << " <- row " << pivots.by_col[c]->source_row << " :";
            for (uint32_t id : pivots.by_col[c]->combo.ids()) os << ' ' << id;
            os << "\n";
        }
    }
    if (!dump_basis.empty()) {
        if (sys.provenance.empty()) {
            std::cerr << "basis dump needs provenance; use `report` on a generated system\n";
            return 1;
        }
        std::ofstream os(dump_basis);
        for (const Provenance &p : extract_relation_basis(sys, pivots))
            os << p.k.str() << " " << p.l.str() << "\n";
    }
    return 0;
}

int cmd_report(const std::string &weights, const std::string &families, const std::string &table,
               const std::string &expected, bool markdown, bool allow_large,
               const GlobalConfig &gc, const std::string &out_dir) {
    auto [k_lo, k_hi] = parse_range(weights);
    TableStyle style = markdown ? TableStyle::Markdown : TableStyle::Aligned;
    if (!expected.empty()) {
        SeriesTable t = expected_tables(k_hi, std::max(1, k_hi / 2));
        if (expected == "d") {
            for (int k = k_lo; k <= k_hi; ++k) std::cout << k << "\t" << t.d[k] << "\n";
        } else if (expected == "c" || expected == "bk") {
            const auto &m = expected == "c" ? t.c : t.bk;
            for (int k = k_lo; k <= k_hi; ++k) {
                std::cout << k;
                for (size_t r = 0; r < m[k].size(); ++r) std::cout << "\t" << m[k][r];
                std::cout << "\n";
            }
        } else {
            std::cerr << "unknown expected table: " << expected << "\n";
            return 1;
        }
        return 0;
    }
    PipelineOptions opts;
    opts.out_dir = out_dir;
    opts.gen.threads = gc.threads;
    opts.gen.block_count = std::max(1, gc.threads);
    opts.gen.memo_max_degree = gc.memo_max_degree;
    int exit_code = 0;
    std::map<Family, std::map<int, uint32_t>> fam_dims;
    std::vector<int> ks;
    for (int k = k_lo; k <= k_hi; ++k) ks.push_back(k);
    SeriesTable exp = expected_tables(k_hi, std::max(1, k_hi));
    for (Family f : parse_families(families)) {
        std::vector<DimensionReport> reports;
        for (int k : ks) {
            check_large(k, f, allow_large);
            DimensionReport rep = run_pipeline(k, f, opts);
            fam_dims[f][k] = rep.dim_z;
            reports.push_back(rep);
            if (f == Family::EDS) {
                bool ok = rep.dim_z == static_cast<uint32_t>(exp.d[k]);
                for (size_t r = 1; ok && r < rep.depth_dims.size(); ++r)
                    ok = rep.depth_dims[r] ==
                         static_cast<uint32_t>(r < exp.c[k].size() ? exp.c[k][r] : 0);
                if (!ok) {
                    std::cerr << "MISMATCH against expected series at weight " << k << "\n";
                    exit_code = 1;
                }
            }
        }
        if (table == "depth") {
            std::cout << family_name(f) << " depth-graded dimensions:\n"
                      << format_depth_table(reports, style) << "\n";
        }
    }
    if (fam_dims.size() > 1 || table != "depth")
        std::cout << format_family_table(ks, fam_dims, style);
    return exit_code;
}

int cmd_verify(int k, const GlobalConfig &gc, bool allow_large) {
    check_large(k, Family::EDS, allow_large);
    GenConfig cfg;
    cfg.threads = gc.threads;
    cfg.block_count = std::max(1, gc.threads);
    LinearSystem sys = generate_system(k, Family::EDS, cfg);
    ColumnTable table(k);
    PivotSequence pivots = forward_eliminate(sys);
    DimensionReport rep = dimensions(sys, pivots, table);
    HoffmanCheck chk = verify_hoffman_basis(rep, table);
    if (chk.pass) {
        std::cout << "weight " << k << ": Hoffman basis verified, dim " << rep.dim_z << "\n";
        return 0;
    }
    std::cout << "weight " << k << ": Hoffman basis FAILED\n";
    for (const auto &m : chk.extra) std::cout << "  pivotless non-Hoffman column " << m.str() << "\n";
    for (const auto &m : chk.missing) std::cout << "  pivoted Hoffman column " << m.str() << "\n";
    return 1;
}

int cmd_reduce(const std::string &index, const GlobalConfig &gc) {
    MultIndex k = parse_index(index);
    GenConfig cfg;
    cfg.threads = gc.threads;
    cfg.block_count = std::max(1, gc.threads);
    LinearSystem sys = generate_system(k.weight(), Family::EDS, cfg);
    ColumnTable table(k.weight());
    PivotSequence pivots = forward_eliminate(sys);
    Gf2Combination red = reduced_form(k, table, pivots);
    std::cout << k.str() << " reduces to:";
    if (red.empty()) std::cout << " 0";
    for (uint32_t id : red.ids()) std::cout << " " << table.index_of(id).str();
    std::cout << "\n";
    Gf2Combination graded = depth_truncate(red, k.depth(), table);
    std::cout << "depth-" << k.depth() << " class:";
    if (graded.empty()) std::cout << " 0";
    for (uint32_t id : graded.ids()) std::cout << " " << table.index_of(id).str();
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"binary extended-double-shuffle linear systems over GF(2)"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "key=value config file (threads, memo_max_degree)");

    int weight = 0;
    std::string family = "eds", out, in, weights = "2..12", families = "eds";
    std::string table = "depth", expected, dump_pivots, dump_basis, index, out_dir = ".";
    bool oracle = false, markdown = false, allow_large = false, compact = false;

    auto *gen = app.add_subcommand("gen", "generate a binary linear system");
    gen->add_option("--weight", weight, "weight k")->required();
    gen->add_option("--family", family, "eds|fds|mjpo|knt");
    gen->add_option("--out", out, "output path")->required();
    gen->add_flag("--compact", compact, "also write the compact binary format");
    gen->add_flag("--allow-large", allow_large, "allow weights 18+ (KNT 21+)");

    auto *solve = app.add_subcommand("solve", "eliminate a system file");
    solve->add_option("--in", in, "input system")->required();
    solve->add_flag("--oracle", oracle, "cross-check with dense elimination");
    solve->add_option("--dump-pivots", dump_pivots, "write the pivot sequence");
    solve->add_option("--dump-basis", dump_basis, "write the consumed relation pairs");

    auto *report = app.add_subcommand("report", "dimension tables over a weight range");
    report->add_option("--weights", weights, "range, e.g. 2..12");
    report->add_option("--family", families, "comma-separated families");
    report->add_option("--table", table, "depth");
    report->add_option("--expected", expected, "d|c|bk (series only, no computation)");
    report->add_flag("--markdown", markdown, "markdown table output");
    report->add_flag("--allow-large", allow_large, "allow weights 18+ (KNT 21+)");
    report->add_option("--out-dir", out_dir, "artifact directory");

    auto *verify = app.add_subcommand("verify", "Hoffman-basis verification");
    verify->add_option("--weight", weight, "weight k")->required();
    verify->add_flag("--allow-large", allow_large, "allow weights 18+");

    auto *reduce = app.add_subcommand("reduce", "reduced form of one symbol");
    reduce->add_option("--index", index, "mult-index, e.g. 3,1")->required();

    int threads_opt = 0;
    gen->add_option("--threads", threads_opt, "thread count (or MZB_THREADS)");

    CLI11_PARSE(app, argc, argv);

    try {
        GlobalConfig gc = load_config(config_path);
        if (threads_opt > 0) gc.threads = threads_opt;
        if (gen->parsed()) return cmd_gen(weight, parse_family(family), out, gc, allow_large, compact);
        if (solve->parsed()) return cmd_solve(in, oracle, dump_pivots, dump_basis);
        if (report->parsed())
            return cmd_report(weights, families, table, expected, markdown, allow_large, gc,
                              out_dir);
        if (verify->parsed()) return cmd_verify(weight, gc, allow_large);
        if (reduce->parsed()) return cmd_reduce(index, gc);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
