#include "lieb/lie_algebra.hpp"

#include <algorithm>

#include "lieb/errors.hpp"

namespace lieb {

std::vector<JacobiViolation> jacobi_check(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    const Cochain2& mu = g.table();
    std::vector<JacobiViolation> out;
    for (BasisIndex i = 1; i <= n; ++i)
        for (BasisIndex j = i + 1; j <= n; ++j)
            for (BasisIndex k = j + 1; k <= n; ++k) {
                SparseVec acc;
                mu.accumulate(acc, 1, mu.basis_value(i, j), k);
                mu.accumulate(acc, 1, mu.basis_value(j, k), i);
                mu.accumulate(acc, 1, mu.basis_value(k, i), j);
                if (!acc.empty()) out.push_back({i, j, k, to_dense(acc, n)});
            }
    return out;
}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vec>& spanning)
    : ambient_(ambient_dim) {
    Matrix m = Matrix::from_rows(spanning, ambient_dim);
    pivots_ = rref(m);
    for (std::size_t r = 0; r < pivots_.size(); ++r) basis_.push_back(m.row(r));
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<Vec> rows;
    for (BasisIndex k = 1; k <= ambient_dim; ++k) rows.push_back(basis_vec(ambient_dim, k));
    return Subspace(ambient_dim, rows);
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw dimension_error("vector length does not match ambient space");
    Vec rem = v;
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        const Rational& c = rem[pivots_[r]];
        if (c == 0) continue;
        Rational f = c;
        for (std::size_t t = 0; t < ambient_; ++t) rem[t] -= f * basis_[r][t];
    }
    return is_zero(rem);
}

Matrix ad_matrix(const LieAlgebra& g, const Vec& x) {
    const std::size_t n = g.dim();
    if (x.size() != n) throw dimension_error("vector length does not match the algebra dimension");
    std::vector<Vec> cols;
    cols.reserve(n);
    for (BasisIndex j = 1; j <= n; ++j) {
        SparseVec col;
        g.table().accumulate(col, 1, to_sparse(x), j);
        cols.push_back(to_dense(col, n));
    }
    return Matrix::from_cols(cols, n);
}

Subspace derived_subalgebra(const LieAlgebra& g) {
    std::vector<Vec> spans;
    for (const auto& [pair, v] : g.table().entries()) spans.push_back(to_dense(v, g.dim()));
    return Subspace(g.dim(), spans);
}

Subspace center(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    // Rows of the stacked system: coordinate m of [e_i, e_j] as a condition on
    // the coefficient of e_i.
    std::vector<Vec> rows;
    for (BasisIndex j = 1; j <= n; ++j) {
        std::vector<SparseVec> cols(n + 1);
        for (BasisIndex i = 1; i <= n; ++i)
            if (i != j) cols[i] = g.table().basis_value(i, j);
        for (BasisIndex m = 1; m <= n; ++m) {
            Vec row = zero_vec(n);
            bool nonzero = false;
            for (BasisIndex i = 1; i <= n; ++i) {
                auto it = cols[i].find(m);
                if (it != cols[i].end()) {
                    row[i - 1] = it->second;
                    nonzero = true;
                }
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    Matrix m = Matrix::from_rows(rows, n);
    return Subspace(n, kernel_basis(m));
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<Subspace> series{Subspace::full(n)};
    while (true) {
        const Subspace& current = series.back();
        std::vector<Vec> spans;
        for (BasisIndex i = 1; i <= n; ++i) {
            Vec ei = basis_vec(n, i);
            for (const Vec& b : current.basis()) spans.push_back(g.bracket(ei, b));
        }
        Subspace next(n, spans);
        if (next.dim() == current.dim()) break; // stationary, not nilpotent
        series.push_back(next);
        if (series.back().dim() == 0) break;
    }
    return series;
}

std::vector<Subspace> ascending_series(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<Subspace> series{Subspace::zero(n)};
    while (true) {
        const Subspace& current = series.back();
        // Functionals vanishing on the current term: kernel of its basis rows.
        Matrix rows = Matrix::from_rows(current.basis(), n);
        std::vector<Vec> functionals = kernel_basis(rows);

        // x in next  <=>  f([x, e_j]) = 0 for every j and every functional f.
        std::vector<Vec> conditions;
        for (BasisIndex j = 1; j <= n; ++j) {
            std::vector<SparseVec> cols(n + 1);
            for (BasisIndex i = 1; i <= n; ++i)
                if (i != j) cols[i] = g.table().basis_value(i, j);
            for (const Vec& f : functionals) {
                Vec row = zero_vec(n);
                bool nonzero = false;
                for (BasisIndex i = 1; i <= n; ++i) {
                    Rational s = 0;
                    for (const auto& [m, c] : cols[i]) s += f[m - 1] * c;
                    if (s != 0) {
                        row[i - 1] = s;
                        nonzero = true;
                    }
                }
                if (nonzero) conditions.push_back(std::move(row));
            }
        }
        Subspace next(n, kernel_basis(Matrix::from_rows(conditions, n)));
        if (next.dim() == current.dim()) break; // stationary
        series.push_back(next);
        if (series.back().dim() == n) break;
    }
    return series;
}

bool is_nilpotent(const LieAlgebra& g) {
    return lower_central_series(g).back().dim() == 0;
}

std::size_t nilpotency_class(const LieAlgebra& g) {
    auto series = lower_central_series(g);
    if (series.back().dim() != 0)
        throw not_nilpotent_error("algebra " + g.name() + " is not nilpotent");
    return series.size() - 1;
}

bool is_filiform(const LieAlgebra& g) {
    if (!is_nilpotent(g)) throw not_nilpotent_error("algebra " + g.name() + " is not nilpotent");
    const std::size_t n = g.dim();
    auto series = ascending_series(g);
    for (std::size_t i = 0; n >= 2 && i <= n - 2; ++i) {
        std::size_t d = i < series.size() ? series[i].dim() : series.back().dim();
        if (d != i) return false;
    }
    return true;
}

bool is_ideal(const LieAlgebra& g, const Subspace& subspace) {
    if (subspace.ambient_dim() != g.dim())
        throw dimension_error("subspace ambient dimension does not match the algebra");
    for (BasisIndex i = 1; i <= g.dim(); ++i) {
        Vec ei = basis_vec(g.dim(), i);
        for (const Vec& b : subspace.basis())
            if (!subspace.contains(g.bracket(ei, b))) return false;
    }
    return true;
}

} // namespace lieb
