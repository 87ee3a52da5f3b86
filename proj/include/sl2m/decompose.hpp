#pragma once

#include <vector>

#include "sl2m/mat2.hpp"
#include "sl2m/word.hpp"

namespace sl2m {

// Abstract alphabet for three-generator words: indices of A, B, U.
inline constexpr int kAbuA = 0;
inline constexpr int kAbuB = 1;
inline constexpr int kAbuU = 2;

inline const std::vector<std::string>& abu_names() {
    static const std::vector<std::string> names{"A", "B", "U"};
    return names;
}

// Images of {A, B, U} over Z[1/m] (mat_A, mat_B, mat_Um).
std::vector<Mat2M> abu_assignment(long m);

// Euclidean norms of the lower-left entry before each reduction step; each
// entry strictly exceeds its successor (the last step zeroes the entry).
struct DecomposeTrace {
    std::vector<Int> corner_norms;
    bool general_unit_endgame = false;
};

// Factors a determinant-1 matrix over Z[1/m] into a word over {A, B, U}:
// Euclidean column reduction of the lower-left entry via euclidean_divmod,
// then an upper-triangular endgame through U-powers, B, and one elementary
// E12 (with a general-unit fallback for composite m). The result is certified
// semantically: evaluate(result, abu_assignment(m)) == input. No minimality
// is promised.
Word decompose_to_abu(const Mat2M& mat, DecomposeTrace* trace = nullptr);

// Substitutes A -> x, B -> x^-1 y^-m x^-1, U -> x y^m x y^-1 x^-m y^-1 and
// freely reduces; evaluation through x -> A, y -> Q_m is preserved.
Word rewrite_abu_to_xy(const Word& w, long m);

// A matrix's class in the abelianization of SL2(Z[1/m]): decompose, rewrite
// over {x, y}, take exponent sums, and project through the Smith normal form
// transforms of the two-generator relation matrix. value lives in Z/order.
struct AbelianClass {
    Int value;
    Int order;

    friend bool operator==(const AbelianClass&, const AbelianClass&) = default;
};

AbelianClass abelianization_image(const Mat2M& mat);

}  // namespace sl2m
