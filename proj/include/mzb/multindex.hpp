#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace mzb {

/// A composition (k_1,...,k_r) of positive integers.  Weight is the sum of
/// the parts, depth the number of parts.  The empty index has weight 0 and
/// depth 0 and counts as admissible.
struct MultIndex {
    std::vector<int> parts;

    MultIndex() = default;
    explicit MultIndex(std::vector<int> p) : parts(std::move(p)) {}
    MultIndex(std::initializer_list<int> p) : parts(p) {}

    int weight() const {
        int w = 0;
        for (int p : parts) w += p;
        return w;
    }
    int depth() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }

    /// k_1 >= 2, or the empty index.
    bool admissible() const { return parts.empty() || parts.front() >= 2; }

    /// Every part is 2 or 3.
    bool hoffman() const {
        if (parts.empty()) return false;
        for (int p : parts)
            if (p != 2 && p != 3) return false;
        return true;
    }

    bool operator==(const MultIndex &o) const { return parts == o.parts; }
    bool operator!=(const MultIndex &o) const { return parts != o.parts; }
    bool operator<(const MultIndex &o) const { return parts < o.parts; }

    std::string str() const;
};

/// Word over the alphabet {x,y}, bit 1 = y, bit 0 = x.  Letter a_1 of a
/// degree-k word sits at bit (k-1), so the bit pattern reads left to right.
/// Degrees above 63 are rejected at construction.
struct Word {
    uint32_t degree = 0;
    uint64_t bits = 0;

    Word() = default;
    Word(uint32_t deg, uint64_t b) : degree(deg), bits(b) {
        if (deg > 63) throw std::invalid_argument("word degree > 63");
    }

    bool empty() const { return degree == 0; }

    /// 1-based letter access: 1 for y, 0 for x.
    int letter(uint32_t i) const { return static_cast<int>((bits >> (degree - i)) & 1u); }

    bool ends_in_y() const { return degree > 0 && (bits & 1u); }
    bool starts_with_x() const { return degree > 0 && letter(1) == 0; }

    /// Empty, or starts with x and ends with y.
    bool admissible() const { return degree == 0 || (starts_with_x() && ends_in_y()); }

    Word concat(const Word &o) const { return Word(degree + o.degree, (bits << o.degree) | o.bits); }

    /// Stable code over ALL words of a given degree: 1 + bit value, y=1.
    uint64_t code() const { return 1 + bits; }

    bool operator==(const Word &o) const { return degree == o.degree && bits == o.bits; }
    bool operator!=(const Word &o) const { return !(*this == o); }
    bool operator<(const Word &o) const {
        return degree != o.degree ? degree < o.degree : bits < o.bits;
    }

    std::string str() const;
};

/// z_k = x^{k-1} y.
Word z_letter(int k);

/// Concatenation z_{k_1} ... z_{k_r}; the empty index maps to the empty word.
Word index_to_word(const MultIndex &k);

struct NotZFormError : std::runtime_error {
    explicit NotZFormError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Inverse of index_to_word.  Throws NotZFormError on words ending in x.
MultIndex word_to_index(const Word &w);

/// All compositions of k (2^{k-1} for k >= 1), or admissible only
/// (2^{k-2} for k >= 2).  Deterministic order: lexicographic on parts,
/// descending.
std::vector<MultIndex> enumerate_indices(int k, bool admissible_only);

/// Indices of weight k with every part in {2,3}; optionally restricted to a
/// single depth r.
std::vector<MultIndex> hoffman_indices(int k, std::optional<int> r = std::nullopt);

/// Ordered admissible columns of one weight satisfying the elimination order
/// conditions: columns are sectioned into depth blocks, deeper blocks first
/// (B1); within a block no Hoffman index precedes a non-Hoffman one (B2);
/// within each (depth, Hoffman) subblock, parts lexicographic descending.
/// Column ids are 1-based positions.
class ColumnTable {
public:
    explicit ColumnTable(int weight);

    int weight() const { return weight_; }
    uint32_t size() const { return static_cast<uint32_t>(order_.size()); }

    const MultIndex &index_of(uint32_t id) const { return order_.at(id - 1); }
    uint32_t id_of(const MultIndex &k) const;
    const std::vector<MultIndex> &order() const { return order_; }

private:
    int weight_;
    std::vector<MultIndex> order_;
    std::unordered_map<uint64_t, uint32_t> id_by_code_;  // word code -> id
};

}  // namespace mzb
