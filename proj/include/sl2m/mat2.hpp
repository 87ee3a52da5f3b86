#pragma once

#include <cstdint>
#include <string>

#include "sl2m/mfraction.hpp"

namespace sl2m {

// 2x2 matrix over Z[1/m]. The ambient m travels with the matrix; binary
// operations require matching m.
struct Mat2M {
    MFraction a, b, c, d;
    long m = 1;

    friend bool operator==(const Mat2M&, const Mat2M&) = default;
};

Mat2M mat2_identity(long m);
Mat2M mat2_mul(const Mat2M& x, const Mat2M& y);
MFraction mat2_det(const Mat2M& x);
bool mat2_is_unimodular(const Mat2M& x);

// Inverse of a determinant-1 matrix: (d, -b; -c, a). Rejects anything else.
Mat2M mat2_inv(const Mat2M& x);

// e may be negative (inverse must exist then). mat2_pow(x, 0) is the identity.
Mat2M mat2_pow(const Mat2M& x, const Int& e);

// "[[1, -1/2], [0, 1]]"
std::string mat2_str(const Mat2M& x);

// 2x2 matrix over Z/rZ, entries always reduced to [0, r).
struct ResidueMat2 {
    std::uint64_t a = 0, b = 0, c = 0, d = 0;
    std::uint64_t r = 0;

    friend bool operator==(const ResidueMat2&, const ResidueMat2&) = default;
};

ResidueMat2 residue_identity(std::uint64_t r);
ResidueMat2 residue_make(std::uint64_t r, std::int64_t a, std::int64_t b, std::int64_t c,
                         std::int64_t d);
ResidueMat2 residue_mul(const ResidueMat2& x, const ResidueMat2& y);
std::uint64_t residue_det(const ResidueMat2& x);

// Inverse of a matrix with det == 1 (mod r); rejects anything else.
ResidueMat2 residue_inv(const ResidueMat2& x);
ResidueMat2 residue_pow(const ResidueMat2& x, const Int& e);
std::string residue_str(const ResidueMat2& x);

// Packs the four entries into a dense key; requires r < 2^16.
std::uint64_t residue_key(const ResidueMat2& x);

// Entrywise numerator * (m^exp)^{-1} mod r. Requires r >= 2 and gcd(r, m) = 1
// so that m is invertible mod r.
ResidueMat2 reduce_mod_r(const Mat2M& x, std::uint64_t r);

}  // namespace sl2m
