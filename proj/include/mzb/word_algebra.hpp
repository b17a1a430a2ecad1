#pragma once

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "mzb/multindex.hpp"

namespace mzb {

/// Exact-integer word polynomial, canonical term order by (degree, bits).
/// Zero coefficients are never stored.  Test-oracle scale only.
class IntWordPoly {
public:
    using Terms = std::map<Word, long long>;

    IntWordPoly() = default;
    static IntWordPoly monomial(const Word &w, long long c = 1);

    void add(const Word &w, long long c);
    void add(const IntWordPoly &o);
    long long coeff(const Word &w) const;
    long long total_mass() const;
    // Rvalue overload keeps range-for over a temporary's terms alive.
    const Terms &terms() const & { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool operator==(const IntWordPoly &o) const { return terms_ == o.terms_; }

private:
    Terms terms_;
};

/// Support of a mod-2 word combination: a sorted duplicate-free word list.
/// Addition is symmetric difference.
class WordSet {
public:
    WordSet() = default;
    explicit WordSet(std::vector<Word> words);  // sorts and cancels pairs

    void toggle(const Word &w);
    WordSet &operator^=(const WordSet &o);
    friend WordSet operator^(WordSet a, const WordSet &b) { return a ^= b; }

    bool contains(const Word &w) const;
    bool empty() const { return words_.empty(); }
    size_t size() const { return words_.size(); }
    const std::vector<Word> &words() const & { return words_; }
    std::vector<Word> words() && { return std::move(words_); }
    bool operator==(const WordSet &o) const { return words_ == o.words_; }

    /// Sorted `k_1,...,k_r` lists joined by ` + ` (debug dump).
    std::string str() const;

private:
    std::vector<Word> words_;  // strictly increasing
};

IntWordPoly shuffle_int(const Word &u, const Word &v);
IntWordPoly stuffle_int(const MultIndex &k, const MultIndex &l);

/// Shared cache for mod-2 shuffle products and regularized words.  Products
/// with total degree <= max_degree are computed by the defining recursion
/// and memoized; larger ones go through the half-weight split and are not
/// cached.  Many readers or one writer.
class ShuffleMemo {
public:
    explicit ShuffleMemo(int max_degree) : max_degree_(max_degree) {}
    int max_degree() const { return max_degree_; }

    WordSet shuffle(const Word &u, const Word &v);
    WordSet regularize(const Word &w);

private:
    WordSet shuffle_recursive(const Word &u, const Word &v);
    WordSet shuffle_split(const Word &u, const Word &v);

    int max_degree_;
    std::unordered_map<uint64_t, WordSet> shuffle_cache_;  // keyed by packed word pair
    std::unordered_map<uint64_t, WordSet> reg_cache_;
    std::shared_mutex shuffle_mtx_;
    std::shared_mutex reg_mtx_;
};

WordSet shuffle_gf2(const Word &u, const Word &v, ShuffleMemo &memo);
WordSet stuffle_gf2(const MultIndex &k, const MultIndex &l);

/// Constant-term-in-y projection of y^n z_N, mod 2: identity for n = 0,
/// zero for z_N empty, else the support of x (y^n sh z_{N'}) where
/// z_N = x z_{N'}.  Every output word is admissible.
WordSet regularize_word_gf2(const Word &w, ShuffleMemo &memo);

enum class ProductKind { Shuffle, Stuffle };

/// Regularized mod-2 product of z_K and z_L: the plain product with the
/// regularization applied termwise and XOR-accumulated.
WordSet reg_product_gf2(ProductKind kind, const MultIndex &k, const MultIndex &l,
                        ShuffleMemo &memo);

}  // namespace mzb
