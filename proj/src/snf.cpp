#include "sl2m/snf.hpp"

#include <algorithm>

namespace sl2m {

IntMat SNFResult::diagonal_matrix(int rows, int cols) const {
    IntMat d(rows, cols);
    for (std::size_t i = 0; i < diagonal.size(); ++i)
        d.at(static_cast<int>(i), static_cast<int>(i)) = diagonal[i];
    return d;
}

namespace {

// Position of a minimal-absolute-value nonzero entry in the submatrix with
// corner (s, s), or nullopt if that submatrix is zero.
std::optional<std::pair<int, int>> min_pivot(const IntMat& d, int s) {
    std::optional<std::pair<int, int>> best;
    Int best_abs;
    for (int i = s; i < d.rows(); ++i)
        for (int j = s; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            Int a = abs(d.at(i, j));
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    return best;
}

}  // namespace

SNFResult smith_normal_form(const IntMat& m, bool with_transforms) {
    IntMat d = m;
    IntMat left, right;
    if (with_transforms) {
        left = IntMat::identity(m.rows());
        right = IntMat::identity(m.cols());
    }
    int n = std::min(m.rows(), m.cols());

    for (int s = 0; s < n; ++s) {
        for (;;) {
            auto piv = min_pivot(d, s);
            if (!piv) break;  // submatrix is zero; remaining diagonal entries stay 0
            d.swap_rows(s, piv->first);
            d.swap_cols(s, piv->second);
            if (with_transforms) {
                left.swap_rows(s, piv->first);
                right.swap_cols(s, piv->second);
            }

            // Clear the pivot column and row; truncated quotients leave
            // remainders strictly smaller than the pivot, so the loop
            // reselects until both are clean.
            bool dirty = false;
            for (int i = s + 1; i < d.rows(); ++i) {
                if (d.at(i, s) == 0) continue;
                Int q = d.at(i, s) / d.at(s, s);
                if (q != 0) {
                    d.add_row_multiple(i, s, -q);
                    if (with_transforms) left.add_row_multiple(i, s, -q);
                }
                if (d.at(i, s) != 0) dirty = true;
            }
            for (int j = s + 1; j < d.cols(); ++j) {
                if (d.at(s, j) == 0) continue;
                Int q = d.at(s, j) / d.at(s, s);
                if (q != 0) {
                    d.add_col_multiple(j, s, -q);
                    if (with_transforms) right.add_col_multiple(j, s, -q);
                }
                if (d.at(s, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // Pivot is lone; make every remaining entry divisible by it.
            bool fixed_up = false;
            for (int i = s + 1; i < d.rows() && !fixed_up; ++i)
                for (int j = s + 1; j < d.cols() && !fixed_up; ++j)
                    if (d.at(i, j) % d.at(s, s) != 0) {
                        d.add_row_multiple(s, i, 1);
                        if (with_transforms) left.add_row_multiple(s, i, 1);
                        fixed_up = true;
                    }
            if (!fixed_up) break;
        }
        if (d.at(s, s) < 0) {
            d.negate_row(s);
            if (with_transforms) left.negate_row(s);
        }
    }

    SNFResult out;
    out.diagonal.reserve(n);
    for (int s = 0; s < n; ++s) {
        out.diagonal.push_back(d.at(s, s));
        if (d.at(s, s) != 0) ++out.rank;
    }
    if (with_transforms) {
        out.left = std::move(left);
        out.right = std::move(right);
    }
    return out;
}

}  // namespace sl2m
