#include "mzb/series.hpp"

#include <stdexcept>

namespace mzb {

namespace {

using Poly = std::vector<long long>;  // coefficients 0..k_max

Poly poly(int k_max) { return Poly(static_cast<size_t>(k_max) + 1, 0); }

Poly mul(const Poly &a, const Poly &b) {
    Poly out(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Poly sub(Poly a, const Poly &b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

// 1/p for p with constant term 1.
Poly inverse(const Poly &p) {
    Poly q(p.size(), 0);
    q[0] = 1;
    for (size_t k = 1; k < p.size(); ++k) {
        long long s = 0;
        for (size_t i = 1; i <= k; ++i) s += p[i] * q[k - i];
        q[k] = -s;
    }
    return q;
}

bool is_zero(const Poly &p) {
    for (long long c : p)
        if (c) return false;
    return true;
}

}  // namespace

long long binomial(long long n, long long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    long long v = 1;
    for (long long i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
}

SeriesTable expected_tables(int k_max, int r_max) {
    if (k_max < 0 || k_max > 64) throw std::invalid_argument("expected_tables: k_max out of range");
    SeriesTable t;

    Poly fib = poly(k_max);
    fib[0] = 1;
    if (k_max >= 2) fib[2] = -1;
    if (k_max >= 3) fib[3] = -1;
    t.d = inverse(fib);

    // Y^r coefficient of 1/(1 - (X^2+X^3)Y) is (X^2+X^3)^r.
    Poly base = poly(k_max);
    if (k_max >= 2) base[2] = 1;
    if (k_max >= 3) base[3] = 1;
    Poly pw = poly(k_max);
    pw[0] = 1;
    t.c.assign(static_cast<size_t>(k_max) + 1, std::vector<long long>(r_max + 1, 0));
    for (int r = 0; r <= r_max; ++r) {
        for (int k = 0; k <= k_max; ++k) t.c[k][r] = pw[k];
        pw = mul(pw, base);
    }

    // Broadhurst-Kreimer: N/D with N = 1 + E Y and
    // D = 1 - O Y + S Y^2 - S Y^4.
    Poly one_m_x2 = poly(k_max);
    one_m_x2[0] = 1;
    if (k_max >= 2) one_m_x2[2] = -1;
    Poly inv_1mx2 = inverse(one_m_x2);
    auto shift = [&](const Poly &p, int s) {
        Poly out = poly(k_max);
        for (int i = 0; i + s <= k_max; ++i) out[i + s] = p[i];
        return out;
    };
    Poly E = shift(inv_1mx2, 2);
    Poly O = shift(inv_1mx2, 3);
    Poly denom46 = poly(k_max);
    denom46[0] = 1;
    if (k_max >= 4) denom46[4] = -1;
    if (k_max >= 6) denom46[6] = -1;
    if (k_max >= 10) denom46[10] = 1;
    Poly S = shift(inverse(denom46), 12);

    std::vector<Poly> D(std::max(r_max + 1, 5), poly(k_max));
    D[0][0] = 1;
    for (int i = 0; i <= k_max; ++i) {
        D[1][i] = -O[i];
        D[2][i] = S[i];
        D[4][i] = -S[i];
    }
    std::vector<Poly> N(std::max(r_max + 1, 2), poly(k_max));
    N[0][0] = 1;
    N[1] = E;

    std::vector<Poly> Q(r_max + 1, poly(k_max));
    for (int r = 0; r <= r_max; ++r) {
        Poly acc = r < static_cast<int>(N.size()) && !is_zero(N[r]) ? N[r] : poly(k_max);
        for (int s = 0; s < r; ++s) {
            int d = r - s;
            if (d < static_cast<int>(D.size()) && !is_zero(D[d])) acc = sub(acc, mul(Q[s], D[d]));
        }
        Q[r] = std::move(acc);
    }
    t.bk.assign(static_cast<size_t>(k_max) + 1, std::vector<long long>(r_max + 1, 0));
    for (int k = 0; k <= k_max; ++k)
        for (int r = 0; r <= r_max; ++r) t.bk[k][r] = Q[r][k];
    return t;
}

}  // namespace mzb
