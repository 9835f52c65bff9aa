#pragma once

// Shared test-only helpers: random generators and independent oracles.  The
// oracles deliberately avoid the library's evaluation paths so that each
// comparison checks two distinct routes to the same value.

#include <random>
#include <vector>

#include "lieb/catalog.hpp"

namespace testutil {

using lieb::BasisIndex;
using lieb::Rational;
using lieb::Vec;

inline long rand_int(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline lieb::Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                  long bound) {
    lieb::Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rand_int(rng, -bound, bound);
    return m;
}

// Strictly upper triangular, hence nilpotent.
inline lieb::Matrix random_nilpotent_upper(std::mt19937_64& rng, std::size_t n, long bound) {
    lieb::Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
            if (rng() % 2 == 0) m(r, c) = rand_int(rng, -bound, bound);
    return m;
}

// Independent route to the Jordan type: the difference sequence
// d_p = r_{p-1} - r_p counts blocks of size >= p, so the type is its
// conjugate partition.
inline std::vector<std::size_t> conjugate_of_differences(const std::vector<std::size_t>& profile) {
    std::vector<std::size_t> diffs;
    for (std::size_t p = 1; p < profile.size(); ++p) diffs.push_back(profile[p - 1] - profile[p]);
    std::vector<std::size_t> parts;
    for (std::size_t i = 1;; ++i) {
        std::size_t count = 0;
        for (std::size_t d : diffs)
            if (d >= i) ++count;
        if (count == 0) break;
        parts.push_back(count);
    }
    return parts;
}

// Dense structure-constant tensor built from the entry list alone; evaluation
// below shares no code with Cochain2::accumulate / apply.
struct DenseBilinear {
    std::size_t n = 0;
    std::vector<Rational> t; // t[((i*n)+j)*n+k] = coefficient of X_{k+1} in phi(X_{i+1}, X_{j+1})

    explicit DenseBilinear(const lieb::Cochain2& phi) : n(phi.dim()), t(n * n * n, Rational(0)) {
        for (const auto& [pair, v] : phi.entries())
            for (const auto& [k, c] : v) {
                at(pair.first - 1, pair.second - 1, k - 1) = c;
                at(pair.second - 1, pair.first - 1, k - 1) = -c;
            }
    }

    Rational& at(std::size_t i, std::size_t j, std::size_t k) { return t[(i * n + j) * n + k]; }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
        return t[(i * n + j) * n + k];
    }

    Vec apply(const Vec& x, const Vec& y) const {
        Vec out = lieb::zero_vec(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (y[j] == 0) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (at(i, j, k) != 0) out[k] += x[i] * y[j] * at(i, j, k);
            }
        }
        return out;
    }
};

// (a • b)(x,y,z) by direct cyclic evaluation on dense tensors.
inline Vec bullet_oracle(const DenseBilinear& a, const DenseBilinear& b, const Vec& x,
                         const Vec& y, const Vec& z) {
    Vec out = lieb::zero_vec(a.n);
    auto add = [&](const Vec& v) {
        for (std::size_t k = 0; k < a.n; ++k) out[k] += v[k];
    };
    add(a.apply(b.apply(x, y), z));
    add(a.apply(b.apply(y, z), x));
    add(a.apply(b.apply(z, x), y));
    return out;
}

// Random sparse skew bracket table: a handful of [X_i,X_j] = c X_k entries.
inline lieb::Cochain2 random_sparse_table(std::mt19937_64& rng, std::size_t n,
                                          std::size_t max_entries, long bound) {
    lieb::Cochain2 table(n);
    std::size_t entries = 1 + rng() % max_entries;
    for (std::size_t e = 0; e < entries; ++e) {
        BasisIndex i = 1 + rng() % n;
        BasisIndex j = 1 + rng() % n;
        if (i == j) continue;
        BasisIndex k = 1 + rng() % n;
        table.add_term(i, j, k, rand_int(rng, -bound, bound));
    }
    return table;
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t n, long bound) {
    Vec v = lieb::zero_vec(n);
    for (auto& x : v) x = rand_int(rng, -bound, bound);
    return v;
}

} // namespace testutil
