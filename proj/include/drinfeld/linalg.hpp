#ifndef DRINFELD_LINALG_HPP
#define DRINFELD_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "field_concepts.hpp"

namespace drinfeld {

/// Row-major dense matrix of field elements.
template <Field F>
using DenseMatrix = std::vector<std::vector<typename F::Elem>>;

/// In-place reduced row echelon form; returns the pivot columns.
template <Field F>
std::vector<std::size_t> rref(const F& f, DenseMatrix<F>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && f.is_zero(m[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        const auto inv = f.inv(m[r][c]);
        for (auto& x : m[r]) x = f.mul(x, inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || f.is_zero(m[i][c])) continue;
            const auto factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Basis of {x : m x = 0}.
template <Field F>
DenseMatrix<F> nullspace(const F& f, DenseMatrix<F> m, std::size_t cols) {
    DenseMatrix<F> basis;
    if (m.empty()) {
        for (std::size_t i = 0; i < cols; ++i) {
            std::vector<typename F::Elem> v(cols, f.zero());
            v[i] = f.one();
            basis.push_back(std::move(v));
        }
        return basis;
    }
    const auto pivots = rref(f, m);
    std::vector<int> pivot_row(cols, -1);
    for (std::size_t i = 0; i < pivots.size(); ++i) pivot_row[pivots[i]] = static_cast<int>(i);
    for (std::size_t free = 0; free < cols; ++free) {
        if (pivot_row[free] >= 0) continue;
        std::vector<typename F::Elem> v(cols, f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(m[i][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <Field F>
std::size_t matrix_rank(const F& f, DenseMatrix<F> m) {
    return rref(f, m).size();
}

/// Some x with m x = b, if one exists.
template <Field F>
std::optional<std::vector<typename F::Elem>> solve(const F& f, const DenseMatrix<F>& m,
                                                   const std::vector<typename F::Elem>& b) {
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    DenseMatrix<F> aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    const auto pivots = rref(f, aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    std::vector<typename F::Elem> x(cols, f.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
    return x;
}

}  // namespace drinfeld

#endif  // DRINFELD_LINALG_HPP
