#ifndef FANO212_LINALG_HPP
#define FANO212_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <vector>

namespace fano212 {

// Dense exact linear algebra over an arbitrary field F.
// F needs: F(0), F(1), ==, +, -, *, /. Pivoting picks the first nonzero
// entry; over exact fields any nonzero pivot is as good as another.
template <class F>
using Mat = std::vector<std::vector<F>>;

template <class F>
Mat<F> mat_identity(size_t n) {
    Mat<F> m(n, std::vector<F>(n, F(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = F(1);
    return m;
}

// In-place reduced row echelon form; returns pivot column per pivot row.
template <class F>
std::vector<size_t> rref(Mat<F>& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == F(0)) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        F inv = F(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == F(0)) continue;
            F f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
size_t mat_rank(Mat<F> m) {
    return rref(m).size();
}

// Solves A x = b; empty optional if inconsistent. Free variables are set to 0.
template <class F>
std::optional<std::vector<F>> solve(const Mat<F>& a, const std::vector<F>& b) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    Mat<F> m(rows, std::vector<F>(cols + 1, F(0)));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
        m[i][cols] = b[i];
    }
    auto piv = rref(m);
    for (size_t i = piv.size(); i-- > 0;)
        if (piv[i] == cols) return std::nullopt;
    std::vector<F> x(cols, F(0));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = m[i][cols];
    return x;
}

// Basis of the right null space of A.
template <class F>
Mat<F> nullspace(Mat<F> m) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    auto piv = rref(m);
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    Mat<F> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_piv[c]) continue;
        std::vector<F> v(cols, F(0));
        v[c] = F(1);
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F(0) - m[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Is v in the row span of rows?
template <class F>
bool in_row_span(const Mat<F>& rows, const std::vector<F>& v) {
    Mat<F> m = rows;
    size_t base = mat_rank(m);
    m.push_back(v);
    return mat_rank(m) == base;
}

template <class F>
Mat<F> mat_invert(const Mat<F>& a) {
    const size_t n = a.size();
    Mat<F> m(n, std::vector<F>(2 * n, F(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = F(1);
    }
    auto piv = rref(m);
    if (piv.size() != n) throw std::domain_error("mat_invert: singular matrix");
    Mat<F> inv(n, std::vector<F>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

template <class F>
F mat_det(Mat<F> m) {
    const size_t n = m.size();
    F det = F(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == F(0)) ++p;
        if (p == n) return F(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = F(0) - det;
        }
        det = det * m[c][c];
        F inv = F(1) / m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == F(0)) continue;
            F f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
        }
    }
    return det;
}

}  // namespace fano212

#endif
