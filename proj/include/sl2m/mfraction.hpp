#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace sl2m {

using Int = mpz_class;

// m^e as an arbitrary-precision integer. Requires m >= 1, e >= 0.
Int pow_m(long m, long e);

// An element a/m^k of Z[1/m] in canonical form: k == 0, or m does not divide a
// (and zero is stored as 0/m^0). Canonical form makes value equality structural.
// The ambient m is not stored; every operation that needs it takes a matching m.
class MFraction {
public:
    MFraction() : num_(0), exp_(0) {}
    MFraction(long n) : num_(n), exp_(0) {}
    MFraction(Int n) : num_(std::move(n)), exp_(0) {}

    // Canonicalizes num/m^exp by dividing the numerator by m while possible.
    static MFraction canonical(Int num, long exp, long m);

    const Int& num() const { return num_; }
    long exp() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return exp_ == 0 && num_ == 1; }
    bool is_integer() const { return exp_ == 0; }

    friend bool operator==(const MFraction&, const MFraction&) = default;
    friend MFraction mf_neg(const MFraction& x);

    // "7", "-1/2", "5/16" (denominator printed as the evaluated power of m).
    std::string str(long m) const;

private:
    MFraction(Int num, long exp, int) : num_(std::move(num)), exp_(exp) {}

    Int num_;
    long exp_;
};

MFraction mf_add(const MFraction& x, const MFraction& y, long m);
MFraction mf_sub(const MFraction& x, const MFraction& y, long m);
MFraction mf_mul(const MFraction& x, const MFraction& y, long m);
MFraction mf_neg(const MFraction& x);

// True iff x is a unit of Z[1/m], i.e. nonzero with Euclidean norm 1.
bool mf_is_unit(const MFraction& x, long m);

// Inverse of a unit; throws std::domain_error otherwise.
MFraction mf_unit_inverse(const MFraction& x, long m);

// The prime-to-m part of |numerator|: repeatedly divide by gcd(., m) until the
// gcd is 1. Multiplicative, equals 1 exactly on units, needs no factorization
// of m. Throws std::domain_error on zero input.
Int euclidean_norm(const MFraction& x, long m);

// Prime-to-m part of a nonzero integer (the same stripping loop on |n|).
Int strip_m_part(Int n, long m);

struct MDivMod {
    MFraction quot;
    MFraction rem;
};

// Division with remainder in Z[1/m]: alpha = quot*beta + rem, where rem is zero
// or euclidean_norm(rem) < euclidean_norm(beta). Scales both operands to
// integers, splits the divisor into its prime-to-m part and a unit, and takes a
// truncated integer quotient against the prime-to-m part.
MDivMod euclidean_divmod(const MFraction& alpha, const MFraction& beta, long m);

}  // namespace sl2m
