#pragma once

#include <string>
#include <vector>

#include "lieb/cochain.hpp"
#include "lieb/matrix.hpp"

namespace lieb {

// An algebra over Q given by structure constants [X_i, X_j] = sum_k a^k_ij X_k.
// The table alone does not guarantee the Jacobi identity; run jacobi_check.
// Values are immutable after construction.
class LieAlgebra {
public:
    LieAlgebra(std::string name, Cochain2 table)
        : name_(std::move(name)), table_(std::move(table)) {}

    const std::string& name() const { return name_; }
    std::size_t dim() const { return table_.dim(); }
    const Cochain2& table() const { return table_; }

    Vec bracket(const Vec& x, const Vec& y) const { return table_.apply(x, y); }

    bool operator==(const LieAlgebra& other) const = default;

private:
    std::string name_;
    Cochain2 table_;
};

struct JacobiViolation {
    BasisIndex i, j, k;
    Vec residual; // the nonzero cyclic sum [[Xi,Xj],Xk] + [[Xj,Xk],Xi] + [[Xk,Xi],Xj]
};

std::vector<JacobiViolation> jacobi_check(const LieAlgebra& g);

// Linear subspace of K^n carrying a reduced-echelon basis, so equality of
// subspaces is plain comparison of canonical forms.
class Subspace {
public:
    Subspace(std::size_t ambient_dim, const std::vector<Vec>& spanning);
    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool operator==(const Subspace& other) const = default;

private:
    std::size_t ambient_;
    std::vector<Vec> basis_;          // reduced echelon rows
    std::vector<std::size_t> pivots_; // pivot column of each row
};

// Matrix of ad x : y -> [x, y]; column j holds [x, e_j].
Matrix ad_matrix(const LieAlgebra& g, const Vec& x);

// C^1(g), the span of all brackets.
Subspace derived_subalgebra(const LieAlgebra& g);

// Z(g) = {x : [x, e_j] = 0 for all j}, as a joint kernel.
Subspace center(const LieAlgebra& g);

// g = C^0 >= C^1 >= ... with C^{i+1} = [g, C^i]; stops at 0 or when the
// dimension becomes stationary.  Nilpotent iff the last term is zero.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

// 0 = C_0 <= C_1 <= ... with C_i = {x : [x, g] in C_{i-1}}; C_1 is the
// center.  Stops at g or when stationary.
std::vector<Subspace> ascending_series(const LieAlgebra& g);

bool is_nilpotent(const LieAlgebra& g);

// Smallest k with C^k = 0 (abelian gives 1).  Throws not_nilpotent_error.
std::size_t nilpotency_class(const LieAlgebra& g);

// dim C_i = i for i = 0..n-2 in the ascending series.
bool is_filiform(const LieAlgebra& g);

bool is_ideal(const LieAlgebra& g, const Subspace& subspace);

} // namespace lieb
