#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "lieb/rational.hpp"

namespace lieb {

// Skew-symmetric bilinear map K^n x K^n -> K^n given by its values on basis
// pairs.  Only pairs i < j are stored; evaluation at (j, i) flips the sign
// and the diagonal is zero.  Also serves as the structure-constant table of
// a Lie algebra.
class Cochain2 {
public:
    explicit Cochain2(std::size_t dim);

    std::size_t dim() const { return dim_; }

    // Replaces the value on (i, j); a value given for i > j is stored negated
    // on (j, i).  Zero values erase the entry.
    void set(BasisIndex i, BasisIndex j, SparseVec value);

    // value(i, j)[k] += c
    void add_term(BasisIndex i, BasisIndex j, BasisIndex k, const Rational& c);

    // Canonical storage: keys i < j, no zero values, no zero coordinates.
    const std::map<IndexPair, SparseVec>& entries() const { return entries_; }

    // phi(e_i, e_j) with the sign applied.
    SparseVec basis_value(BasisIndex i, BasisIndex j) const;

    // acc += c * phi(v, e_j), extending bilinearly in the first slot.
    void accumulate(SparseVec& acc, const Rational& c, const SparseVec& v, BasisIndex j) const;

    // phi(x, y) on dense vectors.
    Vec apply(const Vec& x, const Vec& y) const;

    Cochain2 scaled(const Rational& t) const;
    Cochain2 plus(const Cochain2& other) const;

    bool operator==(const Cochain2& other) const = default;

private:
    void check_indices(BasisIndex i, BasisIndex j) const;

    std::size_t dim_;
    std::map<IndexPair, SparseVec> entries_;
};

// Multilinear map evaluated lazily on basis tuples (1-based indices).  Maps
// of arity up to five arise here; materializing them densely would not scale,
// evaluating on demand does.
struct MultiMap {
    std::size_t dim = 0;
    std::size_t arity = 0;
    std::function<SparseVec(const std::vector<BasisIndex>&)> eval;
};

MultiMap as_multimap(const Cochain2& c);

// (a • b)(X,Y,Z) = a(b(X,Y),Z) + a(b(Y,Z),X) + a(b(Z,X),Y).
// bullet(mu, mu) vanishes identically iff mu satisfies the Jacobi identity.
MultiMap bullet(const Cochain2& a, const Cochain2& b);

// Composition on the first slot: (a o1 b)(x1..x_{p+1}) = a(b(x1,x2), x3..).
MultiMap comp1(const MultiMap& a, const Cochain2& b);
MultiMap comp1(const Cochain2& a, const Cochain2& b);

MultiMap sum(MultiMap a, MultiMap b);

// Coboundary of a 2-cochain: delta_C(phi) = mu0 • phi + phi • mu0.
MultiMap delta_C(const Cochain2& mu0, const Cochain2& phi);

// Sum over all left-normed length-k words in {mu0, phi} containing exactly
// d letters phi, e.g. k=3, d=1 gives mu0^2 o1 phi + mu0 o1 phi o1 mu0 +
// phi o1 mu0^2.  Arity k+1.
MultiMap degree_component(const Cochain2& mu0, const Cochain2& phi, std::size_t k, std::size_t d);

// The one-phi word sum above; the k=4 and k=3 instances are the 5- and
// 4-linear coboundaries of the reduced complexes.
MultiMap delta_R(const Cochain2& mu0, const Cochain2& phi, std::size_t k);

// Every degree component of the length-k word sum at one basis tuple, with
// shared prefixes evaluated once and dead branches pruned: slot d equals
// degree_component(mu0, phi, k, d).eval(t).  This is what makes scanning all
// n^(k+1) tuples of the higher systems affordable.
std::vector<SparseVec> degree_values(const Cochain2& mu0, const Cochain2& phi, std::size_t k,
                                     const std::vector<BasisIndex>& t);

bool is_identically_zero(const MultiMap& m);

struct TupleFailure {
    std::vector<BasisIndex> tuple;
    SparseVec residual;
};

// Basis tuples with nonzero value, at most cap of them; total counts all.
std::vector<TupleFailure> nonzero_tuples(const MultiMap& m, std::size_t cap, std::size_t& total);

} // namespace lieb
