#pragma once

#include <map>
#include <string>
#include <vector>

#include "mzb/elimination.hpp"
#include "mzb/gf2_system.hpp"
#include "mzb/relations.hpp"
#include "mzb/series.hpp"

namespace mzb {

/// Rank/corank of one eliminated system plus the per-depth breakdown read
/// off the depth-block column structure.
struct DimensionReport {
    int weight = 0;
    Family family = Family::EDS;
    uint32_t dim_e = 0;  // rank
    uint32_t dim_z = 0;  // 2^{k-2} - rank
    std::vector<uint32_t> depth_cols;  // index r: columns of depth r
    std::vector<uint32_t> depth_dims;  // index r: dim_q(k,r)
    std::vector<uint32_t> pivotless;   // column ids
};

DimensionReport dimensions(const LinearSystem &sys, const PivotSequence &pivots,
                           const ColumnTable &table);
DimensionReport dimensions(const LinearSystem &sys);  // eliminates internally

struct HoffmanCheck {
    bool pass = false;
    std::vector<MultIndex> extra;    // pivotless but not Hoffman
    std::vector<MultIndex> missing;  // Hoffman but pivoted
};

/// Pass iff the pivotless column set equals the Hoffman indices of the
/// weight.
HoffmanCheck verify_hoffman_basis(const DimensionReport &report, const ColumnTable &table);

/// Back-substitute the symbol of K through the pivot sequence until the
/// support lies entirely in the Hoffman set.  Requires an eliminated EDS
/// system whose Hoffman check passed.
Gf2Combination reduced_form(const MultIndex &k, const ColumnTable &table,
                            const PivotSequence &pivots);

/// Truncation of a reduced form to the terms of one depth (the depth-graded
/// class).
Gf2Combination depth_truncate(const Gf2Combination &c, int depth, const ColumnTable &table);

/// Provenance pairs of the input rows consumed by the elimination; their
/// count equals the rank and re-eliminating them alone reproduces it.
std::vector<Provenance> extract_relation_basis(const LinearSystem &sys,
                                               const PivotSequence &pivots);

struct FibonacciReport {
    Family family = Family::EDS;
    bool law_asserted = false;            // EDS and MJPO assert a rule, KNT reports only
    std::vector<int> exceptions;          // weights where dim != dim(k-2)+dim(k-3)
    std::map<int, long long> difference;  // k -> dim_k - dim_{k-2} - dim_{k-3}
};

/// EDS: checks the Fibonacci-like recurrence.  MJPO: computes the exception
/// set.  KNT: reports differences without asserting a law.
FibonacciReport fibonacci_law_check(Family family, const std::map<int, uint32_t> &dims);

struct PipelineOptions {
    std::string out_dir = ".";
    GenConfig gen;
    bool oracle = false;    // cross-check against the dense oracle
    bool compact = false;   // additionally write the compact format
};

/// gen -> solve -> report: writes the system file, column table, pivot dump
/// and dimension report under out_dir, and returns the report.
DimensionReport run_pipeline(int k, Family family, const PipelineOptions &opts);

enum class TableStyle { Aligned, Tsv, Markdown };

/// Depth-graded dimension table over a weight range, one row per weight.
std::string format_depth_table(const std::vector<DimensionReport> &reports, TableStyle style);

/// Family comparison table (dims per weight per family).
std::string format_family_table(const std::vector<int> &weights,
                                const std::map<Family, std::map<int, uint32_t>> &dims,
                                TableStyle style);

/// Rough resident-set estimate used by the large-run guard.
double estimated_memory_gib(int k, Family family);

}  // namespace mzb
