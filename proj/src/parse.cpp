#include "curvasym/parse.hpp"

#include <cctype>
#include <string>

namespace curvasym {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    BivariatePoly run() {
        skip_ws();
        if (eof()) throw ParseError("empty curve text", pos() + 1);
        BivariatePoly p = expr();
        skip_ws();
        if (!eof()) {
            throw ParseError(std::string("unexpected character '") + peek() + "'", pos() + 1);
        }
        return p;
    }

private:
    const std::string& text_;
    std::size_t i_ = 0;

    bool eof() const { return i_ >= text_.size(); }
    char peek() const { return text_[i_]; }
    std::size_t pos() const { return i_; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
    }
    bool accept(char c) {
        skip_ws();
        if (!eof() && peek() == c) {
            ++i_;
            return true;
        }
        return false;
    }

    BivariatePoly expr() {
        BivariatePoly acc = term();
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    BivariatePoly term() {
        BivariatePoly acc = unary();
        while (accept('*')) acc = acc * unary();
        return acc;
    }

    BivariatePoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        BivariatePoly base = primary();
        skip_ws();
        if (!eof() && peek() == '^') {
            ++i_;
            unsigned e = exponent_literal();
            base = base.pow(e);
            skip_ws();
            if (!eof() && peek() == '^') {
                throw ParseError("chained '^' is ambiguous; parenthesize", pos() + 1);
            }
        }
        return base;
    }

    BivariatePoly primary() {
        skip_ws();
        if (eof()) throw ParseError("unexpected end of input", pos() + 1);
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return number_literal();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            std::string name;
            while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
                name += peek();
                ++i_;
            }
            if (name == "x") return Poly2::var_first();
            if (name == "y") return Poly2::var_second();
            throw ParseError("unknown identifier '" + name + "'", start + 1);
        }
        if (c == '(') {
            ++i_;
            BivariatePoly inner = expr();
            skip_ws();
            if (!accept(')')) throw ParseError("missing ')'", pos() + 1);
            return inner;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos() + 1);
    }

    std::string digits() {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError("expected an integer", pos() + 1);
        }
        std::string out;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            out += peek();
            ++i_;
        }
        return out;
    }

    BivariatePoly number_literal() {
        std::string num = digits();
        skip_ws();
        if (!eof() && peek() == '/') {
            ++i_;
            std::size_t den_pos = pos();
            std::string den = digits();
            if (rational_from_string(den) == 0) {
                throw ParseError("zero denominator", den_pos + 1);
            }
            return BivariatePoly(rational_from_string(num + "/" + den));
        }
        return BivariatePoly(rational_from_string(num));
    }

    unsigned exponent_literal() {
        skip_ws();
        std::size_t start = pos();
        if (!eof() && (peek() == '-' || peek() == '+')) {
            throw ParseError("exponent must be a nonnegative integer literal", start + 1);
        }
        std::string num = digits();
        skip_ws();
        if (!eof() && (peek() == '/' || peek() == '.')) {
            throw ParseError("exponent must be a nonnegative integer literal", pos() + 1);
        }
        unsigned long e = 0;
        try {
            e = std::stoul(num);
        } catch (const std::exception&) {
            throw ParseError("exponent out of range", start + 1);
        }
        if (e > 100000) throw ParseError("exponent out of range", start + 1);
        return static_cast<unsigned>(e);
    }
};

}  // namespace

BivariatePoly parse_polynomial(const std::string& text) { return Parser(text).run(); }

}  // namespace curvasym
