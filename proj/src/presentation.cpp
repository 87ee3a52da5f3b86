#include "sl2m/presentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sl2m {

bool valid_generator_name(const std::string& name) {
    if (name.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
    auto tail = [&](char c) { return alpha(c) || (c >= '0' && c <= '9') || c == '_'; };
    if (!alpha(name[0])) return false;
    return std::all_of(name.begin() + 1, name.end(), tail);
}

Presentation Presentation::make(std::vector<std::string> generators, std::vector<Word> relators) {
    std::set<std::string> seen;
    for (const auto& g : generators) {
        if (!valid_generator_name(g)) throw std::invalid_argument("bad generator name: " + g);
        if (!seen.insert(g).second) throw std::invalid_argument("duplicate generator: " + g);
    }
    int n = static_cast<int>(generators.size());
    for (const auto& w : relators)
        if (w.max_gen() >= n) throw std::invalid_argument("relator uses unknown generator");
    return Presentation{std::move(generators), std::move(relators)};
}

int Presentation::gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return static_cast<int>(i);
    return -1;
}

Presentation make_Hm(long m) {
    if (m < 1) throw std::domain_error("m must be >= 1");
    Word x = Word::syllable(0, 1);
    Word y = Word::syllable(1, 1);
    Word xm = Word::syllable(0, m);
    Word ym = Word::syllable(1, m);
    Word r1 = xm * y * xm * inverse(y * xm * y);
    Word r2 = ym * x * ym * inverse(x * ym * x);
    Word r3 = pow(Word::syllable(0, 2) * ym, 4);
    return Presentation::make({"x", "y"}, {r1, r2, r3});
}

Presentation make_serre_behr_mennicke() {
    Word a = Word::syllable(0, 1);
    Word b = Word::syllable(1, 1);
    Word u = Word::syllable(2, 1);
    Word b2 = pow(b, 2);
    Word r1 = pow(b, 4);
    Word r2 = b2 * inverse(pow(b * u, 2));
    Word r3 = b2 * inverse(pow(b * a, 3));
    Word r4 = b2 * inverse(pow(b * u * pow(a, 2), 3));
    Word r5 = inverse(u) * a * u * pow(a, -4);
    return Presentation::make({"a", "b", "u"}, {r1, r2, r3, r4, r5});
}

Presentation make_corollary(long r) {
    if (r < 3 || r % 2 == 0) throw std::domain_error("r must be odd and >= 3");
    Presentation p = make_Hm(2);
    p.relators.push_back(Word::syllable(0, r));
    return p;
}

}  // namespace sl2m
