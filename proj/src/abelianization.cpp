#include "sl2m/abelianization.hpp"

#include <algorithm>

namespace sl2m {

std::string AbelianGroupDesc::str() const {
    if (is_trivial()) return "trivial";
    std::string out;
    for (int i = 0; i < free_rank; ++i) out += out.empty() ? "Z" : " x Z";
    for (const auto& d : torsion) {
        if (!out.empty()) out += " x ";
        out += "Z/" + d.get_str();
    }
    return out;
}

IntMat relation_matrix(const Presentation& p) {
    IntMat m(static_cast<int>(p.generators.size()), static_cast<int>(p.relators.size()));
    for (std::size_t j = 0; j < p.relators.size(); ++j)
        for (const auto& s : p.relators[j].syllables())
            m.at(s.gen, static_cast<int>(j)) += s.exp;
    return m;
}

AbelianGroupDesc abelianization(const Presentation& p) {
    SNFResult snf = smith_normal_form(relation_matrix(p));
    AbelianGroupDesc out;
    for (const auto& d : snf.diagonal)
        if (d > 1) out.torsion.push_back(d);
    out.free_rank = static_cast<int>(p.generators.size()) - snf.rank;
    return out;
}

AbelianGroupDesc theorem_case(long m) {
    if (m < 1) throw std::domain_error("m must be >= 1");
    bool div2 = m % 2 == 0;
    bool div3 = m % 3 == 0;
    AbelianGroupDesc out;
    if (div2 && div3) return out;  // trivial
    if (div2) out.torsion = {Int(3)};
    else if (div3) out.torsion = {Int(4)};
    else out.torsion = {Int(12)};
    return out;
}

std::vector<Int> coprime_decomposition(const Int& n) {
    std::vector<Int> parts;
    Int rest = abs(n);
    for (Int p(2); rest > 1 && p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        Int q(1);
        while (rest % p == 0) {
            q *= p;
            rest /= p;
        }
        parts.push_back(q);
    }
    if (rest > 1) parts.push_back(rest);
    std::sort(parts.begin(), parts.end());
    return parts;
}

GcdFormulaComparison hm_gcd_formula_comparison(long m) {
    SNFResult snf = smith_normal_form(relation_matrix(make_Hm(m)));
    GcdFormulaComparison out;
    out.snf_factor = snf.diagonal.size() > 1 ? snf.diagonal[1] : Int(1);
    Int mz(m);
    out.printed_formula = gcd(gcd(mz * mz + 1, 12 * mz), 4 * mz * mz + 8);
    out.agree = out.snf_factor == out.printed_formula;
    return out;
}

}  // namespace sl2m
