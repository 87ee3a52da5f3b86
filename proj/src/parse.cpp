#include "sl2m/parse.hpp"

#include <cctype>
#include <optional>

namespace sl2m {

namespace {

// Character cursor with line/column tracking; '#' starts a comment that runs
// to end of line.
class Cursor {
public:
    Cursor(std::string_view text, int first_line) : text_(text), line_(first_line) {}

    void skip_ws(bool stop_at_newline = false) {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (c == '\n') {
                if (stop_at_newline) return;
                advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume(char c) {
        skip_ws();
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (!consume(c)) fail("expected '" + std::string(1, c) + "' " + what);
    }

    std::optional<std::string> ident() {
        skip_ws();
        char c = peek();
        if (!std::isalpha(static_cast<unsigned char>(c))) return std::nullopt;
        std::string out;
        while (pos_ < text_.size()) {
            c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                out.push_back(c);
                advance();
            } else {
                break;
            }
        }
        return out;
    }

    std::optional<long> integer() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            advance();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            pos_ = start;  // no digits: not an integer (column state is close enough)
            return std::nullopt;
        }
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_] - '0');
            advance();
        }
        return neg ? -v : v;
    }

    // Big-integer token for matrix entries.
    std::optional<Int> big_integer() {
        skip_ws();
        std::string digits;
        std::size_t start = pos_;
        if (peek() == '-') {
            digits.push_back('-');
            advance();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            pos_ = start;
            return std::nullopt;
        }
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            digits.push_back(text_[pos_]);
            advance();
        }
        return Int(digits);
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, col_);
    }

    int line() const { return line_; }
    int col() const { return col_; }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
    int col_ = 1;
};

Word parse_word_expr(Cursor& cur, const std::vector<std::string>& gens);

Int parse_exponent(Cursor& cur) {
    if (!cur.consume('^')) return Int(1);
    auto e = cur.big_integer();
    if (!e) cur.fail("malformed exponent");
    return *e;
}

Word parse_term(Cursor& cur, const std::vector<std::string>& gens) {
    if (cur.consume('(')) {
        Word inner = parse_word_expr(cur, gens);
        cur.expect(')', "to close group");
        return pow(inner, parse_exponent(cur));
    }
    cur.skip_ws();
    if (cur.peek() == '1') {
        auto one = cur.integer();
        if (!one || *one != 1) cur.fail("expected generator, '(' or '1'");
        return Word();
    }
    auto name = cur.ident();
    if (!name) cur.fail("expected generator, '(' or '1'");
    int g = -1;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == *name) g = static_cast<int>(i);
    if (g < 0) cur.fail("unknown generator '" + *name + "'");
    return Word::syllable(g, parse_exponent(cur));
}

Word parse_word_expr(Cursor& cur, const std::vector<std::string>& gens) {
    Word w = parse_term(cur, gens);
    while (cur.consume('*')) w = w * parse_term(cur, gens);
    return w;
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
    Cursor cur(text, 1);
    Word w = parse_word_expr(cur, generators);
    if (!cur.eof()) cur.fail("trailing input after word");
    return w;
}

Presentation parse_presentation(std::string_view text) {
    std::vector<std::string> gens;
    std::vector<Word> relators;
    bool have_gens = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        ++line_no;

        Cursor cur(line, line_no);
        if (!cur.eof()) {
            auto key = cur.ident();
            if (!key) cur.fail("expected 'gens:' or 'rel:'");
            cur.expect(':', "after '" + *key + "'");
            if (*key == "gens") {
                if (have_gens) cur.fail("generators already declared");
                while (!cur.eof()) {
                    auto name = cur.ident();
                    if (!name) cur.fail("expected generator name");
                    if (!valid_generator_name(*name)) cur.fail("bad generator name '" + *name + "'");
                    for (const auto& g : gens)
                        if (g == *name) cur.fail("duplicate generator '" + *name + "'");
                    gens.push_back(*name);
                }
                if (gens.empty()) cur.fail("empty generator list");
                have_gens = true;
            } else if (*key == "rel") {
                if (!have_gens) cur.fail("'rel:' before 'gens:'");
                Word lhs = parse_word_expr(cur, gens);
                Word rel = lhs;
                if (cur.consume('=')) {
                    Word rhs = parse_word_expr(cur, gens);
                    rel = lhs * inverse(rhs);
                }
                if (!cur.eof()) cur.fail("trailing input after relator");
                if (rel.empty()) cur.fail("relator reduces to the empty word");
                relators.push_back(std::move(rel));
            } else {
                cur.fail("unknown directive '" + *key + "'");
            }
        }

        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }

    if (!have_gens) throw ParseError("missing 'gens:' line", line_no, 1);
    return Presentation::make(std::move(gens), std::move(relators));
}

std::string print_word(const Word& w, const std::vector<std::string>& generators) {
    if (w.empty()) return "1";
    std::string out;
    bool first = true;
    for (const auto& s : w.syllables()) {
        if (!first) out += "*";
        first = false;
        if (s.gen < 0 || static_cast<std::size_t>(s.gen) >= generators.size())
            throw std::out_of_range("word uses unknown generator");
        out += generators[static_cast<std::size_t>(s.gen)];
        if (s.exp != 1) out += "^" + s.exp.get_str();
    }
    return out;
}

std::string print_presentation(const Presentation& p) {
    std::string out = "gens:";
    for (const auto& g : p.generators) out += " " + g;
    out += "\n";
    for (const auto& r : p.relators) out += "rel: " + print_word(r, p.generators) + "\n";
    return out;
}

namespace {

// One matrix entry: integer, fraction `p/q`, or either in double quotes.
MFraction parse_entry(Cursor& cur, long m) {
    cur.skip_ws();
    bool quoted = cur.consume('"');
    auto num = cur.big_integer();
    if (!num) cur.fail("expected integer matrix entry");
    Int den(1);
    if (cur.consume('/')) {
        auto d = cur.big_integer();
        if (!d) cur.fail("expected denominator");
        den = *d;
    }
    if (quoted) cur.expect('"', "to close quoted entry");
    if (den == 0) cur.fail("zero denominator");
    if (den < 0) {
        den = -den;
        *num = -*num;
    }
    // The denominator must divide a power of m; equivalently its prime-to-m
    // part is 1, which also bounds the search for the minimal such power.
    if (strip_m_part(den, m) != 1) cur.fail("denominator does not divide a power of m");
    Int cur_pow(1);
    long k = 0;
    while (!mpz_divisible_p(cur_pow.get_mpz_t(), den.get_mpz_t())) {
        cur_pow *= m;
        ++k;
    }
    return MFraction::canonical(*num * (cur_pow / den), k, m);
}

Mat2M parse_mat2_body(Cursor& cur, long m) {
    cur.expect('[', "to open matrix");
    cur.expect('[', "to open first row");
    MFraction a = parse_entry(cur, m);
    cur.expect(',', "between entries");
    MFraction b = parse_entry(cur, m);
    cur.expect(']', "to close first row");
    cur.expect(',', "between rows");
    cur.expect('[', "to open second row");
    MFraction c = parse_entry(cur, m);
    cur.expect(',', "between entries");
    MFraction d = parse_entry(cur, m);
    cur.expect(']', "to close second row");
    cur.expect(']', "to close matrix");
    return {a, b, c, d, m};
}

}  // namespace

Mat2M parse_mat2(std::string_view text, long m) {
    if (m < 1) throw std::domain_error("ambient m must be >= 1");
    Cursor cur(text, 1);
    Mat2M out = parse_mat2_body(cur, m);
    if (!cur.eof()) cur.fail("trailing input after matrix");
    return out;
}

std::vector<std::pair<std::string, Mat2M>> parse_assignment(std::string_view text, long m) {
    if (m < 1) throw std::domain_error("ambient m must be >= 1");
    std::vector<std::pair<std::string, Mat2M>> out;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        ++line_no;

        Cursor cur(line, line_no);
        if (!cur.eof()) {
            auto name = cur.ident();
            if (!name) cur.fail("expected generator name");
            cur.expect('=', "after generator name");
            Mat2M mat = parse_mat2_body(cur, m);
            if (!cur.eof()) cur.fail("trailing input after matrix");
            for (const auto& [g, _] : out)
                if (g == *name) cur.fail("duplicate assignment for '" + *name + "'");
            out.emplace_back(*name, mat);
        }

        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

}  // namespace sl2m
