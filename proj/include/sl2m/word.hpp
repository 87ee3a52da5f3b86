#pragma once

#include <stdexcept>
#include <vector>

#include "sl2m/mfraction.hpp"

namespace sl2m {

// One run g^e of a generator, e != 0. Generators are indices into some
// presentation's generator list. Exponents are arbitrary-precision: words
// produced by matrix decomposition can carry exponents as large as the
// matrix entries.
struct Syllable {
    int gen = 0;
    Int exp = 0;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

// A freely reduced word: adjacent syllables have distinct generators and no
// exponent is zero. The empty word is the identity. Construction reduces.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Syllable> syllables) {
        for (auto& s : syllables) push(std::move(s));
    }

    static Word syllable(int gen, Int exp) {
        Word w;
        w.push({gen, std::move(exp)});
        return w;
    }

    const std::vector<Syllable>& syllables() const { return syl_; }
    bool empty() const { return syl_.empty(); }
    std::size_t syllable_count() const { return syl_.size(); }

    // Total letter count, sum of |exp|.
    Int length() const {
        Int n = 0;
        for (const auto& s : syl_) n += abs(s.exp);
        return n;
    }

    // Largest generator index appearing, or -1 for the empty word.
    int max_gen() const {
        int g = -1;
        for (const auto& s : syl_)
            if (s.gen > g) g = s.gen;
        return g;
    }

    // Appends one syllable, folding into the tail; keeps the word reduced.
    void push(Syllable s) {
        if (s.exp == 0) return;
        if (s.gen < 0) throw std::invalid_argument("negative generator index");
        if (!syl_.empty() && syl_.back().gen == s.gen) {
            syl_.back().exp += s.exp;
            if (syl_.back().exp == 0) syl_.pop_back();
        } else {
            syl_.push_back(std::move(s));
        }
    }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Syllable> syl_;
};

// Concatenate and reduce.
Word operator*(const Word& w, const Word& v);

Word inverse(const Word& w);

// w^e. Arbitrary e is supported for the empty word and single syllables; for
// longer words |e| must fit in a long (the result is materialized).
Word pow(const Word& w, const Int& e);

// Strips matching conjugating prefix/suffix: x^-1 (y^2) x -> y^2.
Word cyclic_reduce(const Word& w);

// A total map from source generators to words over target generators.
class Substitution {
public:
    explicit Substitution(std::vector<Word> images) : images_(std::move(images)) {}

    const Word& image(int gen) const {
        if (gen < 0 || static_cast<std::size_t>(gen) >= images_.size())
            throw std::out_of_range("substitution has no image for generator");
        return images_[static_cast<std::size_t>(gen)];
    }

    std::size_t source_size() const { return images_.size(); }

private:
    std::vector<Word> images_;
};

// Homomorphic image of w, freely reduced.
Word substitute(const Word& w, const Substitution& s);

}  // namespace sl2m
