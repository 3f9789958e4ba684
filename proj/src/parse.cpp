#include "ilab/parse.hpp"

#include <cctype>

namespace ilab {

namespace {

class Parser {
    const std::string& s_;
    size_t pos_ = 0;

  public:
    explicit Parser(const std::string& s) : s_(s) {}

    BiPoly parse() {
        BiPoly e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError("trailing input", pos_);
        return e;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    BiPoly expr() {
        skip_ws();
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        BiPoly acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else break;
        }
        return acc;
    }

    BiPoly term() {
        BiPoly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    BiPoly factor() {
        BiPoly b = base();
        if (accept('^')) {
            skip_ws();
            size_t start = pos_;
            if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
                throw SyntaxError("expected exponent", pos_);
            unsigned long e = 0;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
                e = e * 10 + (s_[pos_] - '0');
                if (e > 10000) throw SyntaxError("exponent too large", start);
                ++pos_;
            }
            return pow(b, (unsigned)e);
        }
        return b;
    }

    BiPoly base() {
        skip_ws();
        if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            BiPoly e = expr();
            skip_ws();
            if (!accept(')')) throw SyntaxError("expected ')'", pos_);
            return e;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
            Int v(s_.substr(start, pos_ - start));
            return BiPoly::from_univariate_in_x(IntPoly::constant(v));
        }
        if (std::isalpha((unsigned char)c)) {
            ++pos_;
            switch (c) {
                case 'x':
                case 'y':
                    return BiPoly({IntPoly{}, IntPoly{1}});  // main variable
                case 't':
                case 'v':
                    return BiPoly({IntPoly{0, 1}});  // parameter
                default:
                    throw UnknownVariable(c, pos_ - 1);
            }
        }
        throw SyntaxError("unexpected character", pos_);
    }
};

}  // namespace

BiPoly parse_poly(const std::string& text) {
    Parser p(text);
    return p.parse();
}

}  // namespace ilab
