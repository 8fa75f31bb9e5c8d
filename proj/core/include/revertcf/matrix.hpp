// Copyright 2026 The revertcf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef REVERTCF_MATRIX_HPP
#define REVERTCF_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <revertcf/error.hpp>
#include <revertcf/ring.hpp>

namespace revertcf
{

// Dense exact matrix, row-major.
template <Coefficient T>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(Rational(1));
        }
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>> &rows)
    {
        std::size_t cols = 0;
        for (const auto &r : rows) {
            cols = std::max(cols, r.size());
        }
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept
    {
        return rows_;
    }
    [[nodiscard]] std::size_t cols() const noexcept
    {
        return cols_;
    }

    T &operator()(std::size_t i, std::size_t j)
    {
        return data_[i * cols_ + j];
    }
    const T &operator()(std::size_t i, std::size_t j) const
    {
        return data_[i * cols_ + j];
    }

    [[nodiscard]] Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const
    {
        if (row0 + nrows > rows_ || col0 + ncols > cols_) {
            fail(errc::domain_violation, "block outside the matrix");
        }
        Matrix m(nrows, ncols);
        for (std::size_t i = 0; i < nrows; ++i) {
            for (std::size_t j = 0; j < ncols; ++j) {
                m(i, j) = (*this)(row0 + i, col0 + j);
            }
        }
        return m;
    }

    // Entries of row i up to and including the diagonal.
    [[nodiscard]] std::vector<T> lower_row(std::size_t i) const
    {
        std::vector<T> r;
        for (std::size_t j = 0; j <= i && j < cols_; ++j) {
            r.push_back((*this)(i, j));
        }
        return r;
    }

    [[nodiscard]] bool is_lower_triangular() const
    {
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = i + 1; j < cols_; ++j) {
                if (!is_zero((*this)(i, j))) {
                    return false;
                }
            }
        }
        return true;
    }

    friend Matrix operator*(const Matrix &a, const Matrix &b)
    {
        if (a.cols_ != b.rows_) {
            fail(errc::domain_violation, "matrix shapes do not conform");
        }
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T &aik = a(i, k);
                if (is_zero(aik)) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (!is_zero(b(k, j))) {
                        c(i, j) += aik * b(k, j);
                    }
                }
            }
        }
        return c;
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

// Inverse of a square lower-triangular matrix whose diagonal entries are units.
template <Coefficient T>
Matrix<T> lower_triangular_inverse(const Matrix<T> &a)
{
    const std::size_t n = a.rows();
    if (a.cols() != n || !a.is_lower_triangular()) {
        fail(errc::domain_violation, "expected a square lower-triangular matrix");
    }
    std::vector<T> dinv(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_unit(a(i, i))) {
            fail(errc::not_unit_diagonal, "diagonal entry " + std::to_string(i) + " is " + to_string(a(i, i)));
        }
        dinv[i] = inverse(a(i, i));
    }
    Matrix<T> x(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        x(j, j) = dinv[j];
        for (std::size_t i = j + 1; i < n; ++i) {
            T acc{};
            for (std::size_t k = j; k < i; ++k) {
                if (!is_zero(a(i, k)) && !is_zero(x(k, j))) {
                    acc += a(i, k) * x(k, j);
                }
            }
            x(i, j) = -(acc * dinv[i]);
        }
    }
    return x;
}

} // namespace revertcf

#endif
