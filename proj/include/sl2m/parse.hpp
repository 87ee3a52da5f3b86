#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sl2m/mat2.hpp"
#include "sl2m/presentation.hpp"

namespace sl2m {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int col)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + message),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

// Presentation file format:
//   # comment
//   gens: x y
//   rel: x^2*y*x^2 = y*x^2*y
//   rel: (x^2*y^2)^4
// A relator line holds a word, or `word = word` stored as L*R^-1. Relators
// that reduce to the empty word are rejected.
Presentation parse_presentation(std::string_view text);

// Parses a single word over the given generators. `1` denotes the empty word.
Word parse_word(std::string_view text, const std::vector<std::string>& generators);

std::string print_word(const Word& w, const std::vector<std::string>& generators);
std::string print_presentation(const Presentation& p);

// Matrix format: [[p, q], [r, s]] with entries `int` or `int/int`; each
// denominator must divide a power of m. Quoted entries are accepted, so the
// JSON variant with string-encoded big integers parses too.
Mat2M parse_mat2(std::string_view text, long m);

// Assignment file: one `gen = [[..], [..]]` line per generator.
std::vector<std::pair<std::string, Mat2M>> parse_assignment(std::string_view text, long m);

}  // namespace sl2m
