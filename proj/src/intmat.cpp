#include "sl2m/intmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl2m {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void IntMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMat::add_row_multiple(int dst, int src, const Int& factor) {
    for (int c = 0; c < cols_; ++c) at(dst, c) += factor * at(src, c);
}

void IntMat::add_col_multiple(int dst, int src, const Int& factor) {
    for (int r = 0; r < rows_; ++r) at(r, dst) += factor * at(r, src);
}

void IntMat::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("dimension mismatch");
    IntMat out(x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int k = 0; k < x.cols(); ++k)
            if (x.at(i, k) != 0)
                for (int j = 0; j < y.cols(); ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
    return out;
}

Int determinant(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Int acc = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMat sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(i - 1, cc++) = m.at(i, c);
            }
        }
        Int term = m.at(0, j) * determinant(sub);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

namespace {

// Enumerates k-subsets of 0..n-1 in lexicographic order.
bool next_subset(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

Int gcd_of_minors(const IntMat& m, int k) {
    if (k < 1 || k > std::min(m.rows(), m.cols()))
        throw std::out_of_range("minor size out of range");
    std::vector<int> ri(k), ci(k);
    Int g = 0;
    for (int i = 0; i < k; ++i) ri[i] = i;
    do {
        for (int i = 0; i < k; ++i) ci[i] = i;
        do {
            IntMat sub(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
            g = gcd(g, determinant(sub));
        } while (next_subset(ci, m.cols()));
    } while (next_subset(ri, m.rows()));
    return abs(g);
}

}  // namespace sl2m
