#pragma once

#include <string>
#include <vector>

#include "sl2m/word.hpp"

namespace sl2m {

// Generator names: [A-Za-z][A-Za-z0-9_]*
bool valid_generator_name(const std::string& name);

// A finite presentation <generators | relators>. Relators are stored freely
// reduced; every syllable's generator indexes into `generators`.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    // Validates names (well-formed, unique) and relator generator indices.
    static Presentation make(std::vector<std::string> generators, std::vector<Word> relators);

    // Index of a named generator, or -1.
    int gen_index(const std::string& name) const;
};

// <x, y | x^m y x^m = y x^m y, y^m x y^m = x y^m x, (x^2 y^m)^4 = 1>,
// equations stored as relators L * R^-1.
Presentation make_Hm(long m);

// <a, b, u | b^4 = 1, b^2 = (bu)^2 = (ba)^3 = (bua^2)^3, u^-1 a u = a^4>,
// the chained equality split into three relators anchored at b^2.
Presentation make_serre_behr_mennicke();

// make_Hm(2) plus the relator x^r; requires odd r >= 3.
Presentation make_corollary(long r);

}  // namespace sl2m
