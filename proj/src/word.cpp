#include "sl2m/word.hpp"

namespace sl2m {

Word operator*(const Word& w, const Word& v) {
    Word out = w;
    for (const auto& s : v.syllables()) out.push(s);
    return out;
}

Word inverse(const Word& w) {
    Word out;
    const auto& syl = w.syllables();
    for (auto it = syl.rbegin(); it != syl.rend(); ++it) out.push({it->gen, -it->exp});
    return out;
}

Word pow(const Word& w, const Int& e) {
    if (e == 0 || w.empty()) return Word();
    if (e < 0) return pow(inverse(w), -e);
    if (w.syllable_count() == 1)
        return Word::syllable(w.syllables()[0].gen, w.syllables()[0].exp * e);
    if (!e.fits_slong_p()) throw std::domain_error("power of a multi-syllable word too large");
    Word out;
    for (long i = 0, n = e.get_si(); i < n; ++i) out = out * w;
    return out;
}

Word cyclic_reduce(const Word& w) {
    std::vector<Syllable> syl = w.syllables();
    while (syl.size() >= 2 && syl.front().gen == syl.back().gen) {
        Int merged = syl.front().exp + syl.back().exp;
        int gen = syl.front().gen;
        syl.pop_back();
        syl.erase(syl.begin());
        if (merged != 0) {
            syl.insert(syl.begin(), {gen, std::move(merged)});
            break;
        }
    }
    return Word(std::move(syl));
}

Word substitute(const Word& w, const Substitution& s) {
    Word out;
    for (const auto& syl : w.syllables()) out = out * pow(s.image(syl.gen), syl.exp);
    return out;
}

}  // namespace sl2m
