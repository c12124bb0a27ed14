#pragma once

// Deliberately naive reference implementations. None of these call into the
// library; they use std containers and direct definitions so they can serve
// as independent oracles for the optimized code paths.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Poly = std::vector<std::uint8_t>;  // coefficient of x^i at index i

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] ^= a[i] & b[j];
    trim(c);
    return c;
}

// Schoolbook long division; b must be nonzero.
inline std::pair<Poly, Poly> divmod(Poly a, Poly b) {
    trim(a);
    trim(b);
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        q[shift] = 1;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] ^= b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

inline Poly from_mask(std::uint64_t mask) {
    Poly p;
    for (; mask; mask >>= 1) p.push_back(mask & 1u);
    return p;
}

// Shift-and-add multiplication modulo the degree-m polynomial `modulus`.
inline std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned m) {
    std::uint32_t r = 0;
    while (b) {
        if (b & 1u) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> m) a ^= modulus;
    }
    return r;
}

// Multiplicative order of x modulo `poly` by repeated multiplication
// (0 if x is not invertible or the order exceeds 2^m).
inline std::uint64_t order_of_x(std::uint32_t poly, unsigned m) {
    std::uint32_t v = 2 % (1u << m);
    if (m == 1) return 0;
    for (std::uint64_t k = 1; k <= (std::uint64_t{1} << m); ++k) {
        if (v == 1) return k;
        v = gf_mul(v, 2, poly, m);
        if (v == 0) return 0;
    }
    return 0;
}

// Irreducibility by trial division with every polynomial of degree 1..deg/2.
inline bool irreducible(std::uint64_t poly) {
    const Poly p = from_mask(poly);
    if (p.size() < 2) return false;
    const std::size_t deg = p.size() - 1;
    for (std::uint64_t d = 2; d < (std::uint64_t{1} << (deg / 2 + 1)); ++d)
        if (divmod(p, from_mask(d)).second.empty()) return false;
    return true;
}

inline std::set<std::uint32_t> coset(std::uint32_t s, std::uint32_t n) {
    std::set<std::uint32_t> out;
    std::uint64_t x = s % n;
    while (out.insert(static_cast<std::uint32_t>(x)).second) x = (2 * x) % n;
    return out;
}

// {1 <= j < n : popcount(j) mod r in S}
inline std::set<std::uint32_t> weight_class_set(unsigned r, unsigned m, const std::vector<unsigned>& S) {
    const std::uint32_t n = (1u << m) - 1;
    std::set<std::uint32_t> out;
    for (std::uint32_t j = 1; j < n; ++j) {
        unsigned w = 0;
        for (std::uint32_t x = j; x; x >>= 1) w += x & 1u;
        if (std::find(S.begin(), S.end(), w % r) != S.end()) out.insert(j);
    }
    return out;
}

// prod_{i in T} (x - alpha^i) over GF(2^m), coefficients as field elements,
// alpha = x modulo `modulus`.
inline Poly generator_from_roots(const std::set<std::uint32_t>& T, std::uint32_t modulus, unsigned m) {
    std::vector<std::uint32_t> c{1};
    for (std::uint32_t i : T) {
        std::uint32_t root = 1;
        for (std::uint32_t k = 0; k < i; ++k) root = gf_mul(root, 2, modulus, m);
        std::vector<std::uint32_t> next(c.size() + 1, 0);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] ^= c[j];
            next[j] ^= gf_mul(c[j], root, modulus, m);
        }
        c = std::move(next);
    }
    Poly out;
    for (std::uint32_t v : c) {
        if (v > 1) return {};  // not over GF(2)
        out.push_back(static_cast<std::uint8_t>(v));
    }
    trim(out);
    return out;
}

using Word = std::vector<std::uint8_t>;

inline std::size_t weight(const Word& w) { return static_cast<std::size_t>(std::count(w.begin(), w.end(), 1)); }

// Codewords by plain binary counting over messages.
template <class F>
void for_each_codeword(const std::vector<Word>& rows, std::size_t n, F&& f) {
    const std::size_t k = rows.size();
    for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << k); ++msg) {
        Word c(n, 0);
        for (std::size_t i = 0; i < k; ++i)
            if ((msg >> i) & 1u)
                for (std::size_t j = 0; j < n; ++j) c[j] ^= rows[i][j];
        f(msg, c);
    }
}

inline std::vector<std::uint64_t> weight_distribution(const std::vector<Word>& rows, std::size_t n) {
    std::vector<std::uint64_t> a(n + 1, 0);
    for_each_codeword(rows, n, [&](std::uint64_t, const Word& c) { ++a[weight(c)]; });
    return a;
}

struct MinWeights {
    std::size_t d = 0;
    std::size_t min_odd = 0;  // 0 if no odd-weight word
};

inline MinWeights min_weights(const std::vector<Word>& rows, std::size_t n) {
    const auto a = weight_distribution(rows, n);
    MinWeights out;
    for (std::size_t w = 1; w <= n; ++w) {
        if (a[w] && !out.d) out.d = w;
        if (a[w] && w % 2 && !out.min_odd) out.min_odd = w;
    }
    return out;
}

// Cyclic shift rows of g.
inline std::vector<Word> shift_rows(const Poly& g, std::size_t n) {
    const std::size_t k = n - (g.size() - 1);
    std::vector<Word> rows(k, Word(n, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < g.size(); ++j) rows[i][i + j] = g[j];
    return rows;
}

// Longest run {l, l+v, l+2v, ...} inside T, probing every start.
inline std::size_t longest_ap_run(const std::set<std::uint32_t>& T, std::uint64_t v, std::uint32_t n) {
    if (T.size() == n) return n;
    std::size_t best = 0;
    for (std::uint64_t l = 0; l < n; ++l) {
        std::size_t len = 0;
        while (len < n && T.count(static_cast<std::uint32_t>((l + len * v) % n))) ++len;
        best = std::max(best, len);
    }
    return best;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace oracle
