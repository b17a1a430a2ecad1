#include "mzb/word_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <cassert>

namespace mzb {

namespace {

// Self-delimiting word key: leading 1 marker followed by the letter bits.
uint64_t word_key(const Word &w) {
    assert(w.degree <= 62);
    return (uint64_t(1) << w.degree) | w.bits;
}

uint64_t pair_key(const Word &u, const Word &v) {
    uint64_t a = word_key(u), b = word_key(v);
    if (a > b) std::swap(a, b);
    assert(a < (uint64_t(1) << 32) && b < (uint64_t(1) << 32));
    return (a << 32) | b;
}

Word word_prefix(const Word &w, uint32_t i) { return Word(i, w.bits >> (w.degree - i)); }

Word word_suffix(const Word &w, uint32_t i) {  // drop first i letters
    uint32_t d = w.degree - i;
    return Word(d, d == 64 ? w.bits : (w.bits & ((uint64_t(1) << d) - 1)));
}

WordSet prepend(const Word &prefix, const WordSet &s) {
    std::vector<Word> out;
    out.reserve(s.size());
    for (const Word &w : s.words()) out.push_back(prefix.concat(w));
    return WordSet(std::move(out));
}

}  // namespace

IntWordPoly IntWordPoly::monomial(const Word &w, long long c) {
    IntWordPoly p;
    p.add(w, c);
    return p;
}

void IntWordPoly::add(const Word &w, long long c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else if ((it->second += c) == 0) {
        terms_.erase(it);
    }
}

void IntWordPoly::add(const IntWordPoly &o) {
    for (const auto &[w, c] : o.terms_) add(w, c);
}

long long IntWordPoly::coeff(const Word &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

long long IntWordPoly::total_mass() const {
    long long m = 0;
    for (const auto &[w, c] : terms_) m += c;
    return m;
}

WordSet::WordSet(std::vector<Word> words) {
    std::sort(words.begin(), words.end());
    for (const Word &w : words) {
        if (!words_.empty() && words_.back() == w)
            words_.pop_back();
        else
            words_.push_back(w);
    }
}

void WordSet::toggle(const Word &w) {
    auto it = std::lower_bound(words_.begin(), words_.end(), w);
    if (it != words_.end() && *it == w)
        words_.erase(it);
    else
        words_.insert(it, w);
}

WordSet &WordSet::operator^=(const WordSet &o) {
    std::vector<Word> out;
    out.reserve(words_.size() + o.words_.size());
    std::set_symmetric_difference(words_.begin(), words_.end(), o.words_.begin(),
                                  o.words_.end(), std::back_inserter(out));
    words_ = std::move(out);
    return *this;
}

bool WordSet::contains(const Word &w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

std::string WordSet::str() const {
    if (words_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < words_.size(); ++i) {
        if (i) s += " + ";
        MultIndex k = word_to_index(words_[i]);
        std::string t = k.str();
        s += t.substr(1, t.size() - 2);
    }
    return s;
}

IntWordPoly shuffle_int(const Word &u, const Word &v) {
    if (u.empty()) return IntWordPoly::monomial(v);
    if (v.empty()) return IntWordPoly::monomial(u);
    IntWordPoly out;
    Word a = word_prefix(u, 1), b = word_prefix(v, 1);
    for (const auto &[w, c] : shuffle_int(word_suffix(u, 1), v).terms())
        out.add(a.concat(w), c);
    for (const auto &[w, c] : shuffle_int(u, word_suffix(v, 1)).terms())
        out.add(b.concat(w), c);
    return out;
}

IntWordPoly stuffle_int(const MultIndex &k, const MultIndex &l) {
    if (k.empty()) return IntWordPoly::monomial(index_to_word(l));
    if (l.empty()) return IntWordPoly::monomial(index_to_word(k));
    MultIndex kt(std::vector<int>(k.parts.begin() + 1, k.parts.end()));
    MultIndex lt(std::vector<int>(l.parts.begin() + 1, l.parts.end()));
    IntWordPoly out;
    Word zi = z_letter(k.parts.front()), zj = z_letter(l.parts.front());
    Word zij = z_letter(k.parts.front() + l.parts.front());
    for (const auto &[w, c] : stuffle_int(kt, l).terms()) out.add(zi.concat(w), c);
    for (const auto &[w, c] : stuffle_int(k, lt).terms()) out.add(zj.concat(w), c);
    for (const auto &[w, c] : stuffle_int(kt, lt).terms()) out.add(zij.concat(w), c);
    return out;
}

WordSet ShuffleMemo::shuffle_recursive(const Word &u, const Word &v) {
    if (u.empty()) return WordSet({v});
    if (v.empty()) return WordSet({u});
    uint64_t key = pair_key(u, v);
    {
        std::shared_lock lk(shuffle_mtx_);
        auto it = shuffle_cache_.find(key);
        if (it != shuffle_cache_.end()) return it->second;
    }
    WordSet out = prepend(word_prefix(u, 1), shuffle_recursive(word_suffix(u, 1), v));
    out ^= prepend(word_prefix(v, 1), shuffle_recursive(u, word_suffix(v, 1)));
    {
        std::unique_lock lk(shuffle_mtx_);
        shuffle_cache_.emplace(key, out);
    }
    return out;
}

WordSet ShuffleMemo::shuffle_split(const Word &u, const Word &v) {
    uint32_t m = u.degree, n = v.degree, k = m + n;
    uint32_t l = k / 2;
    WordSet out;
    for (uint32_t i = (l > n ? l - n : 0); i <= std::min(l, m); ++i) {
        uint32_t j = l - i;
        WordSet heads = shuffle(word_prefix(u, i), word_prefix(v, j));
        WordSet tails = shuffle(word_suffix(u, i), word_suffix(v, j));
        for (const Word &h : heads.words())
            for (const Word &t : tails.words()) out.toggle(h.concat(t));
    }
    return out;
}

WordSet ShuffleMemo::shuffle(const Word &u, const Word &v) {
    if (static_cast<int>(u.degree + v.degree) <= std::max(max_degree_, 1) ||
        u.degree + v.degree < 2)
        return shuffle_recursive(u, v);
    return shuffle_split(u, v);
}

WordSet ShuffleMemo::regularize(const Word &w) {
    if (w.empty()) return WordSet({w});
    if (!w.ends_in_y()) throw NotZFormError("regularize: word ends in x: " + w.str());
    uint32_t n = 0;
    while (n < w.degree && w.letter(n + 1) == 1) ++n;
    if (n == 0) return WordSet({w});
    if (n == w.degree) return WordSet();  // y^n, n > 0
    uint64_t key = word_key(w);
    {
        std::shared_lock lk(reg_mtx_);
        auto it = reg_cache_.find(key);
        if (it != reg_cache_.end()) return it->second;
    }
    // w = y^n x z_{N'}; reg(w) = x (y^n sh z_{N'}) mod 2, the sign vanishes.
    Word yn(n, (uint64_t(1) << n) - 1);
    Word tail = word_suffix(w, n + 1);
    WordSet out = prepend(Word(1, 0), shuffle(yn, tail));
    {
        std::unique_lock lk(reg_mtx_);
        reg_cache_.emplace(key, out);
    }
    return out;
}

WordSet shuffle_gf2(const Word &u, const Word &v, ShuffleMemo &memo) {
    return memo.shuffle(u, v);
}

WordSet stuffle_gf2(const MultIndex &k, const MultIndex &l) {
    size_t r1 = k.parts.size(), r2 = l.parts.size();
    // Subproblems are suffix pairs; memoize on (consumed-from-k, consumed-from-l).
    std::vector<std::vector<std::optional<WordSet>>> memo(
        r1 + 1, std::vector<std::optional<WordSet>>(r2 + 1));
    auto suffix_word = [](const MultIndex &m, size_t from) {
        MultIndex s(std::vector<int>(m.parts.begin() + from, m.parts.end()));
        return index_to_word(s);
    };
    auto rec = [&](auto &&self, size_t a, size_t b) -> const WordSet & {
        auto &slot = memo[a][b];
        if (slot) return *slot;
        if (a == r1) {
            slot = WordSet({suffix_word(l, b)});
        } else if (b == r2) {
            slot = WordSet({suffix_word(k, a)});
        } else {
            int i = k.parts[a], j = l.parts[b];
            WordSet out = prepend(z_letter(i), self(self, a + 1, b));
            out ^= prepend(z_letter(j), self(self, a, b + 1));
            out ^= prepend(z_letter(i + j), self(self, a + 1, b + 1));
            slot = std::move(out);
        }
        return *slot;
    };
    return rec(rec, 0, 0);
}

WordSet regularize_word_gf2(const Word &w, ShuffleMemo &memo) { return memo.regularize(w); }

WordSet reg_product_gf2(ProductKind kind, const MultIndex &k, const MultIndex &l,
                        ShuffleMemo &memo) {
    WordSet product = kind == ProductKind::Shuffle
                          ? memo.shuffle(index_to_word(k), index_to_word(l))
                          : stuffle_gf2(k, l);
    WordSet out;
    for (const Word &w : product.words()) out ^= memo.regularize(w);
    return out;
}

}  // namespace mzb
