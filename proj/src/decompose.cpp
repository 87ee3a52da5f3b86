#include "sl2m/decompose.hpp"

#include "sl2m/abelianization.hpp"
#include "sl2m/matrix_groups.hpp"
#include "sl2m/snf.hpp"

namespace sl2m {

std::vector<Mat2M> abu_assignment(long m) {
    return {mat_A(m), mat_B(m), mat_Um(m)};
}

namespace {

// Word evaluating to E21(t) = (1, 0; t, 1): conjugating A^e by U-powers
// scales the lower-left parameter by m^-2 per U, so t = a/m^k lifts to
// U^j A^e U^-j with j = ceil(k/2) and e = a * m^(2j - k).
Word e21_word(const MFraction& t, long m) {
    if (t.is_zero()) return Word();
    long k = t.exp();
    long j = (k + 1) / 2;
    Word core = Word::syllable(kAbuA, t.num() * pow_m(m, 2 * j - k));
    if (j == 0) return core;
    Word u_j = Word::syllable(kAbuU, j);
    return u_j * core * inverse(u_j);
}

// E12(t) = B E21(-t) B^-1.
Word e12_word(const MFraction& t, long m) {
    if (t.is_zero()) return Word();
    Word b = Word::syllable(kAbuB, 1);
    return b * e21_word(mf_neg(t), m) * inverse(b);
}

// If u = sign * m^p (p may be negative), returns true and fills sign/p.
bool as_signed_m_power(const MFraction& u, long m, bool& negative, long& p) {
    Int num = u.num();
    negative = num < 0;
    if (negative) num = -num;
    long i = 0;
    if (m == 1) {
        if (num != 1) return false;
    } else {
        while (num > 1 && mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(m))) {
            mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(m));
            ++i;
        }
        if (num != 1) return false;
    }
    p = i - u.exp();
    return true;
}

}  // namespace

Word decompose_to_abu(const Mat2M& mat, DecomposeTrace* trace) {
    if (!mat2_is_unimodular(mat)) throw std::domain_error("decomposition requires determinant 1");
    long m = mat.m;
    Word b = Word::syllable(kAbuB, 1);

    Word out;
    Mat2M work = mat;
    while (!work.c.is_zero()) {
        if (trace) trace->corner_norms.push_back(euclidean_norm(work.c, m));
        if (!work.a.is_zero() &&
            euclidean_norm(work.a, m) <= euclidean_norm(work.c, m)) {
            // Row op: c <- c - t*a with N(c - t*a) < N(a) <= N(c).
            auto [t, rem] = euclidean_divmod(work.c, work.a, m);
            Mat2M e21_neg{MFraction(1), MFraction(0), mf_neg(t), MFraction(1), m};
            work = mat2_mul(e21_neg, work);
            out = out * e21_word(t, m);
        } else {
            // Reduce the top entry to a - q*c = rem with N(rem) < N(c), then
            // swap it down: work = E12(q) B^-1 work'.
            auto [q, rem] = euclidean_divmod(work.a, work.c, m);
            Mat2M e12_neg{MFraction(1), mf_neg(q), MFraction(0), MFraction(1), m};
            work = mat2_mul(mat_B(m), mat2_mul(e12_neg, work));
            out = out * e12_word(q, m) * inverse(b);
        }
    }

    // Upper-triangular endgame: work = (u, t; 0, u^-1) with u a unit.
    const MFraction& u = work.a;
    const MFraction& t = work.b;
    bool negative = false;
    long p = 0;
    if (as_signed_m_power(u, m, negative, p)) {
        if (negative) out = out * b * b;
        if (p != 0) out = out * Word::syllable(kAbuU, p);
    } else {
        // diag(u, u^-1) = E12(u) E21(-u^-1) E12(u) B^-1 handles the units of
        // Z[1/m] that are not powers of m (composite m only).
        if (trace) trace->general_unit_endgame = true;
        MFraction u_inv = mf_unit_inverse(u, m);
        out = out * e12_word(u, m) * e21_word(mf_neg(u_inv), m) * e12_word(u, m) * inverse(b);
    }
    if (!t.is_zero()) {
        MFraction s = mf_mul(t, mf_unit_inverse(u, m), m);
        out = out * e12_word(s, m);
    }
    if (trace) trace->corner_norms.push_back(Int(0));
    return out;
}

Word rewrite_abu_to_xy(const Word& w, long m) {
    Word x = Word::syllable(0, 1);
    Word y = Word::syllable(1, 1);
    Word b_img = inverse(x) * Word::syllable(1, -m) * inverse(x);
    Word u_img = inverse(b_img) * inverse(y) * Word::syllable(0, -m) * inverse(y);
    return substitute(w, Substitution({x, b_img, u_img}));
}

AbelianClass abelianization_image(const Mat2M& mat) {
    long m = mat.m;
    Word wxy = rewrite_abu_to_xy(decompose_to_abu(mat), m);
    Int ex = 0, ey = 0;
    for (const auto& s : wxy.syllables()) (s.gen == 0 ? ex : ey) += s.exp;

    SNFResult snf = smith_normal_form(relation_matrix(make_Hm(m)), true);
    if (snf.diagonal.size() != 2 || snf.diagonal[0] != 1 || snf.diagonal[1] == 0)
        throw std::logic_error("unexpected relation matrix shape");
    const IntMat& left = *snf.left;
    Int order = snf.diagonal[1];
    Int value = (left.at(1, 0) * ex + left.at(1, 1) * ey) % order;
    if (value < 0) value += order;
    return {value, order};
}

}  // namespace sl2m
