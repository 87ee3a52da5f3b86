#include "sl2m/mat2.hpp"

#include <numeric>

namespace sl2m {

namespace {

void require_same_m(const Mat2M& x, const Mat2M& y) {
    if (x.m != y.m) throw std::invalid_argument("mismatched ambient m");
}

}  // namespace

Mat2M mat2_identity(long m) {
    return {MFraction(1), MFraction(0), MFraction(0), MFraction(1), m};
}

Mat2M mat2_mul(const Mat2M& x, const Mat2M& y) {
    require_same_m(x, y);
    long m = x.m;
    return {mf_add(mf_mul(x.a, y.a, m), mf_mul(x.b, y.c, m), m),
            mf_add(mf_mul(x.a, y.b, m), mf_mul(x.b, y.d, m), m),
            mf_add(mf_mul(x.c, y.a, m), mf_mul(x.d, y.c, m), m),
            mf_add(mf_mul(x.c, y.b, m), mf_mul(x.d, y.d, m), m),
            m};
}

MFraction mat2_det(const Mat2M& x) {
    return mf_sub(mf_mul(x.a, x.d, x.m), mf_mul(x.b, x.c, x.m), x.m);
}

bool mat2_is_unimodular(const Mat2M& x) {
    return mat2_det(x).is_one();
}

Mat2M mat2_inv(const Mat2M& x) {
    if (!mat2_is_unimodular(x)) throw std::domain_error("inverse requires determinant 1");
    return {x.d, mf_neg(x.b), mf_neg(x.c), x.a, x.m};
}

Mat2M mat2_pow(const Mat2M& x, const Int& e) {
    Mat2M base = e < 0 ? mat2_inv(x) : x;
    Int n = abs(e);
    Mat2M acc = mat2_identity(x.m);
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) acc = mat2_mul(acc, base);
        n >>= 1;
        if (n > 0) base = mat2_mul(base, base);
    }
    return acc;
}

std::string mat2_str(const Mat2M& x) {
    return "[[" + x.a.str(x.m) + ", " + x.b.str(x.m) + "], [" + x.c.str(x.m) + ", " +
           x.d.str(x.m) + "]]";
}

namespace {

// Entry products must fit in 64 bits.
void require_modulus(std::uint64_t r) {
    if (r < 2) throw std::domain_error("modulus must be >= 2");
    if (r >= (1ULL << 31)) throw std::domain_error("modulus too large");
}

}  // namespace

ResidueMat2 residue_identity(std::uint64_t r) {
    require_modulus(r);
    return {1 % r, 0, 0, 1 % r, r};
}

ResidueMat2 residue_make(std::uint64_t r, std::int64_t a, std::int64_t b, std::int64_t c,
                         std::int64_t d) {
    require_modulus(r);
    auto red = [r](std::int64_t v) {
        std::int64_t q = v % static_cast<std::int64_t>(r);
        if (q < 0) q += static_cast<std::int64_t>(r);
        return static_cast<std::uint64_t>(q);
    };
    return {red(a), red(b), red(c), red(d), r};
}

namespace {

void require_same_r(const ResidueMat2& x, const ResidueMat2& y) {
    if (x.r != y.r) throw std::invalid_argument("mismatched modulus");
}

}  // namespace

ResidueMat2 residue_mul(const ResidueMat2& x, const ResidueMat2& y) {
    require_same_r(x, y);
    std::uint64_t r = x.r;
    return {(x.a * y.a + x.b * y.c) % r, (x.a * y.b + x.b * y.d) % r,
            (x.c * y.a + x.d * y.c) % r, (x.c * y.b + x.d * y.d) % r, r};
}

std::uint64_t residue_det(const ResidueMat2& x) {
    std::uint64_t r = x.r;
    return (x.a * x.d % r + r - x.b * x.c % r) % r;
}

ResidueMat2 residue_inv(const ResidueMat2& x) {
    if (residue_det(x) != 1 % x.r) throw std::domain_error("inverse requires determinant 1 mod r");
    std::uint64_t r = x.r;
    return {x.d, (r - x.b) % r, (r - x.c) % r, x.a, r};
}

ResidueMat2 residue_pow(const ResidueMat2& x, const Int& e) {
    ResidueMat2 base = e < 0 ? residue_inv(x) : x;
    Int n = abs(e);
    ResidueMat2 acc = residue_identity(x.r);
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) acc = residue_mul(acc, base);
        n >>= 1;
        if (n > 0) base = residue_mul(base, base);
    }
    return acc;
}

std::string residue_str(const ResidueMat2& x) {
    return "[[" + std::to_string(x.a) + ", " + std::to_string(x.b) + "], [" +
           std::to_string(x.c) + ", " + std::to_string(x.d) + "]] mod " + std::to_string(x.r);
}

std::uint64_t residue_key(const ResidueMat2& x) {
    if (x.r >= (1ULL << 16)) throw std::domain_error("residue key requires r < 2^16");
    return ((x.a * x.r + x.b) * x.r + x.c) * x.r + x.d;
}

ResidueMat2 reduce_mod_r(const Mat2M& x, std::uint64_t r) {
    require_modulus(r);
    Int rz(static_cast<unsigned long>(r));
    Int mz(x.m);
    if (gcd(rz, mz) != 1) throw std::domain_error("gcd(r, m) must be 1");
    Int m_inv;
    mpz_invert(m_inv.get_mpz_t(), mz.get_mpz_t(), rz.get_mpz_t());
    auto entry = [&](const MFraction& f) -> std::uint64_t {
        Int v = f.num() % rz;
        if (v < 0) v += rz;
        Int inv_pow;
        mpz_powm_ui(inv_pow.get_mpz_t(), m_inv.get_mpz_t(),
                    static_cast<unsigned long>(f.exp()), rz.get_mpz_t());
        Int res = (v * inv_pow) % rz;
        return res.get_ui();
    };
    return {entry(x.a), entry(x.b), entry(x.c), entry(x.d), r};
}

}  // namespace sl2m
