#include "mzb/multindex.hpp"

#include <algorithm>

namespace mzb {

std::string MultIndex::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    s += ")";
    return s;
}

std::string Word::str() const {
    std::string s;
    for (uint32_t i = 1; i <= degree; ++i) s += letter(i) ? 'y' : 'x';
    return s;
}

Word z_letter(int k) {
    if (k < 1 || k > 63) throw std::invalid_argument("z_letter: bad part");
    return Word(static_cast<uint32_t>(k), 1);
}

Word index_to_word(const MultIndex &k) {
    Word w;
    for (int p : k.parts) w = w.concat(z_letter(p));
    return w;
}

MultIndex word_to_index(const Word &w) {
    if (w.degree > 0 && !w.ends_in_y()) throw NotZFormError("word ends in x: " + w.str());
    MultIndex k;
    int run = 0;
    for (uint32_t i = 1; i <= w.degree; ++i) {
        ++run;
        if (w.letter(i)) {
            k.parts.push_back(run);
            run = 0;
        }
    }
    return k;
}

std::vector<MultIndex> enumerate_indices(int k, bool admissible_only) {
    std::vector<MultIndex> out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    if (k < 0) return out;
    std::vector<int> cur;
    // Descending lexicographic: largest first part first.
    auto rec = [&](auto &&self, int rest, bool first) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        int lo = (first && admissible_only) ? 2 : 1;
        for (int p = rest; p >= lo; --p) {
            cur.push_back(p);
            self(self, rest - p, false);
            cur.pop_back();
        }
    };
    rec(rec, k, true);
    return out;
}

std::vector<MultIndex> hoffman_indices(int k, std::optional<int> r) {
    std::vector<MultIndex> out;
    if (k == 0 && (!r || *r == 0)) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    auto rec = [&](auto &&self, int rest) -> void {
        if (rest == 0) {
            if (!cur.empty() && (!r || static_cast<int>(cur.size()) == *r)) out.emplace_back(cur);
            return;
        }
        for (int p = 3; p >= 2; --p) {
            if (p > rest) continue;
            cur.push_back(p);
            self(self, rest - p);
            cur.pop_back();
        }
    };
    if (k > 0) rec(rec, k);
    std::sort(out.begin(), out.end(), [](const MultIndex &a, const MultIndex &b) { return b < a; });
    return out;
}

ColumnTable::ColumnTable(int weight) : weight_(weight) {
    if (weight < 2) throw std::invalid_argument("ColumnTable: weight < 2");
    order_ = enumerate_indices(weight, true);
    std::sort(order_.begin(), order_.end(), [](const MultIndex &a, const MultIndex &b) {
        if (a.depth() != b.depth()) return a.depth() > b.depth();              // (B1)
        if (a.hoffman() != b.hoffman()) return !a.hoffman();                   // (B2)
        return a.parts > b.parts;
    });
    for (uint32_t i = 0; i < order_.size(); ++i)
        id_by_code_.emplace(index_to_word(order_[i]).code(), i + 1);
}

uint32_t ColumnTable::id_of(const MultIndex &k) const {
    auto it = id_by_code_.find(index_to_word(k).code());
    if (it == id_by_code_.end())
        throw std::out_of_range("ColumnTable: index " + k.str() + " not in weight " +
                                std::to_string(weight_));
    return it->second;
}

}  // namespace mzb
