#include "lieb/matrix.hpp"

#include <algorithm>
#include <utility>

#include "lieb/errors.hpp"

namespace lieb {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw dimension_error("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw dimension_error("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw dimension_error("matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rational& y = rhs(k, j);
                if (y != 0) out(i, j) += x * y;
            }
        }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

void Matrix::swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(r1, c), (*this)(r2, c));
}

Vec Matrix::row(std::size_t r) const {
    Vec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
}

Vec Matrix::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);

        Rational piv = m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) /= piv;

        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const Matrix& m) {
    Matrix tmp = m;
    return rref(tmp).size();
}

std::vector<Vec> kernel_basis(const Matrix& m) {
    Matrix red = m;
    std::vector<std::size_t> pivots = rref(red);

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::size_t> rank_profile(const Matrix& m) {
    if (m.rows() != m.cols()) throw dimension_error("rank_profile needs a square matrix");
    const std::size_t n = m.rows();

    std::vector<std::size_t> profile{n};
    Matrix power = m;
    std::size_t prev = n;
    for (std::size_t k = 1; k <= n && prev > 0; ++k) {
        std::size_t r = rank(power);
        if (r >= prev && r > 0)
            throw not_nilpotent_error("matrix is not nilpotent: rank of powers stabilizes at " +
                                      std::to_string(r));
        profile.push_back(r);
        prev = r;
        if (r > 0) power = power * m;
    }
    if (prev > 0) throw not_nilpotent_error("matrix is not nilpotent");
    return profile;
}

std::vector<std::size_t> jordan_type_from_profile(const std::vector<std::size_t>& profile) {
    if (profile.empty()) throw invalid_profile_error("empty rank profile");
    if (profile.back() != 0) throw invalid_profile_error("rank profile does not reach 0");
    for (std::size_t p = 1; p < profile.size(); ++p)
        if (profile[p] >= profile[p - 1] && profile[p] != 0)
            throw invalid_profile_error("rank profile is not strictly decreasing");

    auto r = [&](std::size_t p) -> std::size_t { return p < profile.size() ? profile[p] : 0; };

    // s = largest block size
    const std::size_t s = profile.size() - 1;
    std::vector<std::size_t> parts;
    for (std::size_t b = s; b >= 1; --b) {
        // count of Jordan blocks of size exactly b
        long long count = static_cast<long long>(r(b - 1)) - 2 * static_cast<long long>(r(b)) +
                          static_cast<long long>(r(b + 1));
        if (count < 0) throw invalid_profile_error("rank profile is not convex");
        parts.insert(parts.end(), static_cast<std::size_t>(count), b);
    }

    std::size_t total = 0;
    for (std::size_t p : parts) total += p;
    if (total != profile[0]) throw invalid_profile_error("block sizes do not sum to the dimension");
    return parts;
}

} // namespace lieb
