#pragma once

#include "apolar/forms.hpp"
#include "apolar/linalg.hpp"
#include "apolar/random.hpp"

#include <map>
#include <utility>

namespace apolar::testing {

inline Rational rnd(SplitMix64& rng, std::int64_t bound) { return Rational(static_cast<long>(rng.uniform(-bound, bound))); }

inline BinaryForm random_form(SplitMix64& rng, unsigned d, std::int64_t bound = 10) {
    for (;;) {
        RationalVector c(d + 1);
        for (auto& x : c) x = rnd(rng, bound);
        BinaryForm f(d, c);
        if (!f.is_zero()) return f;
    }
}

inline DualForm random_dual(SplitMix64& rng, unsigned k, std::int64_t bound = 10) {
    for (;;) {
        RationalVector c(k + 1);
        for (auto& x : c) x = rnd(rng, bound);
        DualForm D(k, c);
        if (!D.is_zero()) return D;
    }
}

inline std::vector<BinaryForm> random_independent(SplitMix64& rng, unsigned d, unsigned r, std::int64_t bound = 10) {
    for (;;) {
        std::vector<BinaryForm> forms;
        std::vector<RationalVector> rows;
        for (unsigned i = 0; i < r; ++i) {
            forms.push_back(random_form(rng, d, bound));
            rows.push_back(forms.back().coeffs());
        }
        if (bareiss::rank(RationalMatrix::from_rows(rows, d + 1)) == r) return forms;
    }
}

/// Random matrix of rank at most `max_rank`, built as a product of two random factors.
inline RationalMatrix random_low_rank(SplitMix64& rng, std::size_t rows, std::size_t cols, std::size_t max_rank,
                                      std::int64_t bound = 5) {
    RationalMatrix a(rows, max_rank), b(max_rank, cols), m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t t = 0; t < max_rank; ++t) a(i, t) = rnd(rng, bound);
    for (std::size_t t = 0; t < max_rank; ++t)
        for (std::size_t j = 0; j < cols; ++j) b(t, j) = rnd(rng, bound);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t t = 0; t < max_rank; ++t) m(i, j) += a(i, t) * b(t, j);
    return m;
}

// Sparse bivariate polynomials keyed by exponent pairs, used as an oracle for the
// contraction action that shares no code with the library.
using Sparse = std::map<std::pair<unsigned, unsigned>, Rational>;

inline Sparse to_sparse(const BinaryForm& f) {
    Sparse s;
    const unsigned d = f.degree();
    for (unsigned i = 0; i <= d; ++i)
        if (f[i] != 0) s[{d - i, i}] = f[i];
    return s;
}

inline Sparse differentiate(const Sparse& f, unsigned p, unsigned q) {
    Sparse out;
    for (const auto& [e, c] : f) {
        auto [a, b] = e;
        if (a < p || b < q) continue;
        Rational coef = c;
        for (unsigned t = 0; t < p; ++t) coef *= a - t;
        for (unsigned t = 0; t < q; ++t) coef *= b - t;
        out[{a - p, b - q}] += coef;
    }
    return out;
}

inline Sparse act(const DualForm& D, const BinaryForm& f) {
    Sparse out;
    const unsigned k = D.degree();
    for (unsigned j = 0; j <= k; ++j) {
        if (D[j] == 0) continue;
        for (const auto& [e, c] : differentiate(to_sparse(f), k - j, j)) out[e] += D[j] * c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline RationalVector sparse_to_dense(const Sparse& s, unsigned degree) {
    RationalVector v(degree + 1);
    for (const auto& [e, c] : s) v[e.second] += c;
    return v;
}

/// Matrix of D -> D o f on the monomial basis of T_k, computed with the oracle action.
inline RationalMatrix oracle_catalecticant(const BinaryForm& f, unsigned k) {
    const unsigned d = f.degree();
    RationalMatrix m(d - k + 1, k + 1);
    for (unsigned j = 0; j <= k; ++j) {
        auto col = sparse_to_dense(act(DualForm::monomial(k, j), f), d - k);
        for (unsigned i = 0; i <= d - k; ++i) m(i, j) = col[i];
    }
    return m;
}

/// dim (f^perp)_k via the oracle action and fraction-free rank.
inline std::size_t oracle_perp_dim(const BinaryForm& f, unsigned k) {
    if (k > f.degree()) return k + 1;
    return k + 1 - bareiss::rank(oracle_catalecticant(f, k));
}

/// dim (D^{-1})_d via the oracle action and fraction-free rank.
inline std::size_t oracle_inverse_dim(const DualForm& D, unsigned d) {
    const unsigned k = D.degree();
    RationalMatrix m(d - k + 1, d + 1);
    for (unsigned i = 0; i <= d; ++i) {
        auto col = sparse_to_dense(act(D, BinaryForm::monomial(d, i)), d - k);
        for (unsigned t = 0; t <= d - k; ++t) m(t, i) = col[t];
    }
    return d + 1 - bareiss::rank(m);
}

inline bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b, std::size_t n) {
    auto ra = bareiss::rank(RationalMatrix::from_rows(a, n));
    auto rb = bareiss::rank(RationalMatrix::from_rows(b, n));
    std::vector<RationalVector> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return ra == rb && bareiss::rank(RationalMatrix::from_rows(both, n)) == ra;
}

/// (x0 + t x1)^d expanded by the binomial theorem with a running product, independent of the library.
inline RationalVector power_of_linear(const Rational& a, const Rational& b, unsigned d) {
    RationalVector c(d + 1);
    Rational binom = 1;
    for (unsigned i = 0; i <= d; ++i) {
        Rational term = binom;
        for (unsigned e = 0; e < d - i; ++e) term *= a;
        for (unsigned e = 0; e < i; ++e) term *= b;
        c[i] = term;
        binom = binom * (d - i) / (i + 1);
    }
    return c;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

/// Generic k_min for r forms of degree d, written independently from the library.
inline unsigned expected_kmin(unsigned d, unsigned r) {
    return static_cast<unsigned>(floor_div(static_cast<std::int64_t>(r) * (d + 1) - 1, r + 1) + 1);
}

/// Expected projective dimension of the generic VSPS at degree k (-1 when empty).
inline int expected_dim(unsigned d, unsigned r, unsigned k) {
    long v = static_cast<long>(k) * (r + 1) - static_cast<long>(r) * (d + 1);
    return v < 0 ? -1 : static_cast<int>(v);
}

}  // namespace apolar::testing
