#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace lieb {

// Exact rational scalar.  GMP keeps every value canonical: positive
// denominator, gcd(|num|, den) = 1 after each operation.
using Rational = mpq_class;

// 1-based basis label, matching the X_1..X_n convention of all tables.
using BasisIndex = std::size_t;

using IndexPair = std::pair<BasisIndex, BasisIndex>;

// Dense coordinate vector, entry t stores the coefficient of X_{t+1}.
using Vec = std::vector<Rational>;

// Sparse vector: nonzero coordinates only, keyed by basis index.
using SparseVec = std::map<BasisIndex, Rational>;

// Canonical "p/q" (or "p" when q = 1) rendering.
std::string to_string(const Rational& q);

// Parses "p" or "p/q" with q > 0; reduces.  Throws parse_error.
Rational parse_rational(const std::string& s);

Vec zero_vec(std::size_t n);
Vec basis_vec(std::size_t n, BasisIndex k);
bool is_zero(const Vec& v);

Vec to_dense(const SparseVec& v, std::size_t n);
SparseVec to_sparse(const Vec& v);

// acc += c * v, dropping entries that cancel to zero.
void add_scaled(SparseVec& acc, const Rational& c, const SparseVec& v);

// "[a, b, c]" with canonical scalar rendering.
std::string to_string(const Vec& v);

} // namespace lieb
