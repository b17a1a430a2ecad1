#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mzb/multindex.hpp"

namespace mzb {

/// Support of a GF(2) linear form over 1-based column ids.  Strictly
/// increasing, duplicate-free; addition is symmetric difference.
class Gf2Combination {
public:
    Gf2Combination() = default;
    explicit Gf2Combination(std::vector<uint32_t> ids);  // sorts, cancels pairs

    Gf2Combination &operator^=(const Gf2Combination &o);
    friend Gf2Combination operator^(Gf2Combination a, const Gf2Combination &b) { return a ^= b; }

    bool empty() const { return ids_.empty(); }
    size_t size() const { return ids_.size(); }
    uint32_t leading() const { return ids_.front(); }  // smallest id; support nonempty
    bool contains(uint32_t id) const;
    const std::vector<uint32_t> &ids() const { return ids_; }
    bool operator==(const Gf2Combination &o) const { return ids_ == o.ids_; }
    bool operator<(const Gf2Combination &o) const { return ids_ < o.ids_; }

private:
    std::vector<uint32_t> ids_;
};

/// Originating relation pair (K,L), kept per row for basis extraction.
struct Provenance {
    MultIndex k, l;
};

enum class Family { EDS, FDS, MJPO, KNT };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string &s);

/// A binary linear system of one weight: ordered columns plus rows with
/// provenance.  Rows are immutable after construction; duplicates are kept.
struct LinearSystem {
    int weight = 0;
    Family family = Family::EDS;
    std::vector<Gf2Combination> rows;
    std::vector<Provenance> provenance;  // empty when parsed from disk

    uint32_t column_count() const { return uint32_t(1) << (weight - 2); }
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Text wire format: `#` header lines with key=value pairs (weight, family,
/// columns, rows), then one line per row of space-separated ascending ids
/// terminated by ` 0`.  Byte-deterministic.
void write_text(const LinearSystem &sys, const std::string &path);
void write_text(const LinearSystem &sys, std::ostream &os);

/// Comments may appear anywhere; the `0` terminator is optional.
LinearSystem parse_text(const std::string &path);
LinearSystem parse_text(std::istream &is, const std::string &name = "<stream>");

/// Compact binary layout: magic `MZF2`, version u8, weight u16 LE, row count
/// u64 LE, then per row a varint length and delta-encoded varint ids.
void compact_write(const LinearSystem &sys, const std::string &path);
LinearSystem compact_read(const std::string &path);

/// Human-audit dump: `# weight k` then `<id> <k_1>,<k_2>,...` per column.
void write_column_table(const ColumnTable &table, const std::string &path);

}  // namespace mzb
