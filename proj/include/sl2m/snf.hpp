#pragma once

#include <optional>
#include <vector>

#include "sl2m/intmat.hpp"

namespace sl2m {

struct SNFResult {
    // min(rows, cols) non-negative entries forming a divisibility chain.
    std::vector<Int> diagonal;
    int rank = 0;
    // When requested: unimodular L (rows x rows) and R (cols x cols) with
    // L * M * R equal to the diagonal matrix.
    std::optional<IntMat> left;
    std::optional<IntMat> right;

    IntMat diagonal_matrix(int rows, int cols) const;
};

// Smith normal form by minimal-absolute-value pivoting with row/column
// elimination; a final in-loop pass enforces the divisibility chain.
SNFResult smith_normal_form(const IntMat& m, bool with_transforms = false);

}  // namespace sl2m
