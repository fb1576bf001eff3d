#ifndef JOINRIG_MATRIX_HPP
#define JOINRIG_MATRIX_HPP

#include "joinrig/field.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace joinrig {

template <ExactField F>
using Vector = std::vector<F>;

/// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, field_zero<F>()) {}

    /// Integer literal constructor, mostly for tests and golden values.
    Matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("ragged matrix literal");
            for (auto x : r)
                data_.push_back(F::from_int(x));
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = field_one<F>();
        return m;
    }

    /// Stacks equal-length vectors as rows. `cols` is only used when `rows` is empty.
    static Matrix from_rows(const std::vector<Vector<F>>& rows, std::size_t cols = 0) {
        Matrix m(rows.size(), rows.empty() ? cols : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw std::invalid_argument("from_rows: ragged input");
            std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<F> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<const F> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    [[nodiscard]] Vector<F> apply(std::span<const F> v) const {
        if (v.size() != cols_)
            throw std::invalid_argument("apply: dimension mismatch");
        Vector<F> out(rows_, field_zero<F>());
        for (std::size_t i = 0; i < rows_; ++i) {
            F acc = field_zero<F>();
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero())
                    acc += (*this)(i, j) * v[j];
            out[i] = std::move(acc);
        }
        return out;
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero())
                return false;
        return true;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

/// Reduced row echelon form together with its pivot columns.
template <ExactField F>
struct RowEchelon {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Pivots are the first nonzero entry found scanning
/// each column top-down below the current pivot row.
template <ExactField F>
RowEchelon<F> row_reduce(Matrix<F> m) {
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t sel = pr;
        while (sel < m.rows() && m(sel, c).is_zero())
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != pr)
            for (std::size_t j = c; j < m.cols(); ++j)
                std::swap(m(sel, j), m(pr, j));
        const F inv = m(pr, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j)
            m(pr, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pr || m(r, c).is_zero())
                continue;
            const F factor = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(pr, j).is_zero())
                    m(r, j) -= factor * m(pr, j);
        }
        pivots.push_back(c);
        ++pr;
    }
    return {std::move(m), std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
    // forward elimination only; cheaper than the full reduced form
    Matrix<F> a = m;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < a.cols() && pr < a.rows(); ++c) {
        std::size_t sel = pr;
        while (sel < a.rows() && a(sel, c).is_zero())
            ++sel;
        if (sel == a.rows())
            continue;
        if (sel != pr)
            for (std::size_t j = c; j < a.cols(); ++j)
                std::swap(a(sel, j), a(pr, j));
        const F inv = a(pr, c).inverse();
        for (std::size_t r = pr + 1; r < a.rows(); ++r) {
            if (a(r, c).is_zero())
                continue;
            const F factor = a(r, c) * inv;
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a(pr, j).is_zero())
                    a(r, j) -= factor * a(pr, j);
        }
        ++pr;
    }
    return pr;
}

/// Basis of the right null space {v : Mv = 0}, one vector per free column.
template <ExactField F>
std::vector<Vector<F>> kernel_basis(const Matrix<F>& m) {
    auto [reduced, pivots] = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;

    std::vector<Vector<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector<F> v(m.cols(), field_zero<F>());
        v[free] = field_one<F>();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Basis of the left null space {w : w^T M = 0}.
template <ExactField F>
std::vector<Vector<F>> cokernel_basis(const Matrix<F>& m) {
    return kernel_basis(m.transpose());
}

template <ExactField F>
Vector<F> linear_combination(const std::vector<Vector<F>>& vectors, std::span<const F> coeffs,
                             std::size_t length) {
    Vector<F> out(length, field_zero<F>());
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        if (coeffs[k].is_zero())
            continue;
        for (std::size_t i = 0; i < length; ++i)
            out[i] += coeffs[k] * vectors[k][i];
    }
    return out;
}

} // namespace joinrig

#endif
