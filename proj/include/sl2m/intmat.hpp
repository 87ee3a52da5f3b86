#pragma once

#include <vector>

#include "sl2m/mfraction.hpp"

namespace sl2m {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int dst, int src, const Int& factor);  // row dst += factor * row src
    void add_col_multiple(int dst, int src, const Int& factor);
    void negate_row(int i);

    friend bool operator==(const IntMat&, const IntMat&) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

IntMat mat_mul(const IntMat& x, const IntMat& y);

// Determinant by cofactor expansion; fine for the tiny sizes used here.
Int determinant(const IntMat& m);

// gcd of all k x k minors (0 if they all vanish); throws std::out_of_range for
// k outside 1..min(rows, cols). Deliberately naive: this is the independent
// oracle for the Smith normal form.
Int gcd_of_minors(const IntMat& m, int k);

}  // namespace sl2m
