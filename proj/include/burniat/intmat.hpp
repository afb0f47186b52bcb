#pragma once
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "burniat/rational.hpp"

namespace burniat {

// Dense matrix over Z with exact entries.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, BigInt(0))
    {
    }

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto &r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("IntMatrix: ragged initializer");
            for (long long v : r) a_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n)
    {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    BigInt &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt &operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix &o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMatrix operator*(const IntMatrix &o) const
    {
        if (cols_ != o.rows_)
            throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        IntMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const BigInt &aik = (*this)(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) += aik * o(k, j);
            }
        return r;
    }

    void append_row(const std::vector<BigInt> &row)
    {
        if (rows_ == 0 && cols_ == 0) cols_ = row.size();
        if (row.size() != cols_)
            throw std::invalid_argument("IntMatrix: row length mismatch");
        a_.insert(a_.end(), row.begin(), row.end());
        ++rows_;
    }

    void swap_rows(std::size_t i, std::size_t j)
    {
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }

    // row(i) += f * row(j)
    void add_row(std::size_t i, std::size_t j, const BigInt &f)
    {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += f * (*this)(j, k);
    }

    // col(i) += f * col(j)
    void add_col(std::size_t i, std::size_t j, const BigInt &f)
    {
        for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += f * (*this)(k, j);
    }

    void negate_row(std::size_t i)
    {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
    }

    std::string to_string() const;

    // Exact determinant by fraction-free (Bareiss) elimination; square only.
    BigInt determinant() const;

private:
    std::size_t rows_, cols_;
    std::vector<BigInt> a_;
};

} // namespace burniat
