#include "prym/poly_parser.hpp"

#include "prym/error.hpp"

#include <cctype>
#include <optional>
#include <string>

namespace prym {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RatPoly parse() {
        skip_space();
        if (pos_ == text_.size()) {
            throw ParseError(pos_, "empty expression");
        }
        RatPoly result = expr();
        skip_space();
        if (pos_ != text_.size()) {
            throw ParseError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return result;
    }

private:
    RatPoly expr() {
        skip_space();
        bool negate = false;
        if (peek('+') || peek('-')) {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        RatPoly acc = term();
        if (negate) {
            acc = -acc;
        }
        while (true) {
            skip_space();
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    RatPoly term() {
        RatPoly acc = factor();
        while (true) {
            skip_space();
            if (!peek('*')) {
                return acc;
            }
            ++pos_;
            acc *= factor();
        }
    }

    RatPoly factor() {
        RatPoly b = base();
        skip_space();
        if (!peek('^')) {
            return b;
        }
        ++pos_;
        skip_space();
        const std::size_t start = pos_;
        if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw ParseError(pos_, "expected a nonnegative integer exponent");
        }
        unsigned long e = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            ++pos_;
            if (e > kMaxParsedExponent) {
                throw ParseError(start, "exponent too large (limit " + std::to_string(kMaxParsedExponent) + ")");
            }
        }
        RatPoly result = RatPoly::constant(1);
        for (unsigned long i = 0; i < e; ++i) {
            result *= b;
        }
        return result;
    }

    RatPoly base() {
        skip_space();
        if (pos_ == text_.size()) {
            throw ParseError(pos_, "unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RatPoly inner = expr();
            skip_space();
            if (!peek(')')) {
                throw ParseError(pos_, "expected ')'");
            }
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return RatPoly::constant(literal());
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            std::string name(text_.substr(start, pos_ - start));
            if (!variable_) {
                variable_ = name;
            } else if (*variable_ != name) {
                throw ParseError(start, "second variable '" + name + "' (already using '" + *variable_ + "')");
            }
            return RatPoly::x();
        }
        throw ParseError(pos_, "unexpected '" + std::string(1, c) + "'");
    }

    Rational literal() {
        Integer num = digits();
        if (peek('/')) {
            const std::size_t slash = pos_;
            ++pos_;
            if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                throw ParseError(pos_, "expected a denominator");
            }
            Integer den = digits();
            if (den == 0) {
                throw ParseError(slash, "zero denominator");
            }
            return make_rational(num, den);
        }
        return Rational(num);
    }

    Integer digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::optional<std::string> variable_;
};

} // namespace

RatPoly parse_poly(std::string_view text) {
    return Parser(text).parse();
}

} // namespace prym
