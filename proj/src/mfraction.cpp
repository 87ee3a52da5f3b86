#include "sl2m/mfraction.hpp"

namespace sl2m {

namespace {

void require_m(long m) {
    if (m < 1) throw std::domain_error("ambient m must be >= 1");
}

}  // namespace

Int pow_m(long m, long e) {
    require_m(m);
    if (e < 0) throw std::domain_error("negative power of m");
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(e));
    return r;
}

MFraction MFraction::canonical(Int num, long exp, long m) {
    require_m(m);
    if (exp < 0) throw std::domain_error("exponent must be >= 0");
    if (m == 1 || num == 0) return MFraction(std::move(num), 0, 0);
    while (exp > 0 && mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(m))) {
        mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(m));
        --exp;
    }
    return MFraction(std::move(num), exp, 0);
}

std::string MFraction::str(long m) const {
    if (exp_ == 0) return num_.get_str();
    return num_.get_str() + "/" + pow_m(m, exp_).get_str();
}

MFraction mf_add(const MFraction& x, const MFraction& y, long m) {
    require_m(m);
    long k = std::max(x.exp(), y.exp());
    Int n = x.num() * pow_m(m, k - x.exp()) + y.num() * pow_m(m, k - y.exp());
    return MFraction::canonical(std::move(n), k, m);
}

MFraction mf_sub(const MFraction& x, const MFraction& y, long m) {
    return mf_add(x, mf_neg(y), m);
}

MFraction mf_mul(const MFraction& x, const MFraction& y, long m) {
    require_m(m);
    return MFraction::canonical(x.num() * y.num(), x.exp() + y.exp(), m);
}

MFraction mf_neg(const MFraction& x) {
    // Negation preserves canonical form, so no m is needed.
    return MFraction(-x.num(), x.exp(), 0);
}

Int strip_m_part(Int n, long m) {
    require_m(m);
    n = abs(n);
    if (n == 0) throw std::domain_error("prime-to-m part of zero");
    if (m == 1) return n;
    Int mm(m);
    for (;;) {
        Int g = gcd(n, mm);
        if (g == 1) return n;
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
    }
}

Int euclidean_norm(const MFraction& x, long m) {
    if (x.is_zero()) throw std::domain_error("euclidean norm of zero");
    return strip_m_part(x.num(), m);
}

bool mf_is_unit(const MFraction& x, long m) {
    return !x.is_zero() && euclidean_norm(x, m) == 1;
}

// Smallest s with |u| dividing m^s, for u an m-smooth nonzero integer.
static long unit_denominator_power(const Int& u, long m) {
    Int w = abs(u);
    Int cur(1);
    long s = 0;
    while (!mpz_divisible_p(cur.get_mpz_t(), w.get_mpz_t())) {
        cur *= m;
        ++s;
    }
    return s;
}

MFraction mf_unit_inverse(const MFraction& x, long m) {
    if (!mf_is_unit(x, m)) throw std::domain_error("inverse of a non-unit");
    // x = num/m^j with num = +-(m-smooth); 1/x = m^j * num^{-1}.
    long s = unit_denominator_power(x.num(), m);
    Int inv_num = pow_m(m, s) / x.num();  // exact, carries the sign
    return MFraction::canonical(inv_num * pow_m(m, x.exp()), s, m);
}

MDivMod euclidean_divmod(const MFraction& alpha, const MFraction& beta, long m) {
    require_m(m);
    if (beta.is_zero()) throw std::domain_error("division by zero");
    if (alpha.is_zero()) return {MFraction(), MFraction()};

    // Scale both to integers over the common denominator m^t.
    long t = std::max(alpha.exp(), beta.exp());
    Int a = alpha.num() * pow_m(m, t - alpha.exp());
    Int b = beta.num() * pow_m(m, t - beta.exp());

    // b = n * u with n its prime-to-m part and u a unit of Z[1/m].
    Int n = strip_m_part(b, m);
    Int u = b / n;  // exact; carries the sign and the m-smooth part

    Int q0, r0;
    mpz_tdiv_qr(q0.get_mpz_t(), r0.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());

    // alpha = (q0/u) * beta + r0/m^t, and |r0| < n bounds the remainder norm.
    long s = unit_denominator_power(u, m);
    Int u_inv_num = pow_m(m, s) / u;
    MFraction quot = MFraction::canonical(q0 * u_inv_num, s, m);
    MFraction rem = MFraction::canonical(std::move(r0), t, m);
    return {quot, rem};
}

}  // namespace sl2m
