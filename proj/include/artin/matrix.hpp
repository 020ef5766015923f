// Dense matrices over an exact field, with reduction routed through the
// sparse echelon core so every caller sees the same canonical forms.
#ifndef ARTIN_MATRIX_HPP
#define ARTIN_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "artin/sparse.hpp"

namespace artin {

template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, K()) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<K> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: entry count mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    SparseVec<K> row(std::size_t i) const {
        SparseVec<K> v;
        for (std::size_t j = 0; j < cols_; ++j) v.push(static_cast<std::uint32_t>(j), at(i, j));
        return v;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix: dimension mismatch in apply");
        std::vector<K> out(rows_, K());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<K> a_;
};

template <class K>
struct RrefResult {
    std::size_t rank = 0;
    Matrix<K> reduced;
    std::vector<std::size_t> pivot_columns;
};

// Unique reduced row echelon form: nonzero rows first (monic pivots, pivot
// columns cleared), then zero rows.
template <class K>
RrefResult<K> rref(const Matrix<K>& m) {
    Echelon<K> ech;
    for (std::size_t i = 0; i < m.rows(); ++i) ech.insert(m.row(i));
    RrefResult<K> res;
    res.rank = ech.rank();
    res.reduced = Matrix<K>(m.rows(), m.cols());
    std::size_t r = 0;
    for (const auto& row : ech.reduced_rows()) {
        res.pivot_columns.push_back(row.lead_index());
        for (const auto& [j, c] : row.terms) res.reduced.at(r, j) = c;
        ++r;
    }
    return res;
}

}  // namespace artin

#endif
