#include "hankelforge/symbol_parser.hpp"

#include <cctype>

namespace hankelforge {

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }

    std::size_t pos() const { return pos_; }
    char peek() const { return text_[pos_]; }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    mpz_class integer() {
        skip_ws();
        std::size_t start = pos_;
        std::string digits;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            if (text_[pos_] == '-') digits += '-';
            ++pos_;
        }
        std::size_t first_digit = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        if (pos_ == first_digit) throw ParseError("expected integer", start);
        return mpz_class(digits);
    }

    long exponent() {
        std::size_t start = pos_;
        mpz_class e = integer();
        if (!e.fits_slong_p()) throw ParseError("exponent out of range", start);
        return e.get_si();
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

SymbolExpr parse_symbol(const std::string& text) {
    Scanner sc(text);
    if (sc.done()) throw ParseError("empty input", 0);

    LaurentPoly poly;
    bool first = true;
    while (true) {
        int sign = 1;
        if (sc.accept('-'))
            sign = -1;
        else if (sc.accept('+'))
            sign = 1;
        else if (!first)
            break;
        if (sc.done()) throw ParseError("expected term", sc.pos());
        first = false;

        Rational coeff(1);
        bool saw_coeff = false;
        bool saw_star = false;
        if (sc.peek_digit()) {
            mpz_class num = sc.integer();
            mpz_class den = 1;
            if (sc.accept('/')) {
                std::size_t den_pos = sc.pos();
                den = sc.integer();
                if (den == 0) throw ParseError("division by zero denominator", den_pos);
            }
            coeff = Rational(num, den);
            saw_coeff = true;
            saw_star = sc.accept('*');
        }

        long exp = 0;
        if (sc.accept('z')) {
            exp = 1;
            if (sc.accept('^')) exp = sc.exponent();
        } else if (saw_star) {
            throw ParseError("expected 'z' after '*'", sc.pos());
        } else if (!saw_coeff) {
            throw ParseError("expected coefficient or 'z'", sc.pos());
        }

        if (sign < 0) coeff = -coeff;
        poly.add_term(exp, coeff);
    }
    if (!sc.done()) throw ParseError("unexpected character", sc.pos());
    return SymbolExpr{text, std::move(poly)};
}

std::string print_poly(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        Rational mag = c.sign() < 0 ? -c : c;
        std::string piece;
        if (e == 0) {
            piece = mag.str();
        } else {
            if (mag != Rational(1)) piece = mag.str() + "*";
            piece += "z";
            if (e != 1) piece += "^" + std::to_string(e);
        }
        if (out.empty())
            out = (c.sign() < 0 ? "-" : "") + piece;
        else
            out += (c.sign() < 0 ? " - " : " + ") + piece;
    }
    return out;
}

}  // namespace hankelforge
