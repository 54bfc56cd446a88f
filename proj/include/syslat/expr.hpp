#pragma once

// Recursive-descent parser for tower expressions: integers, t, s, w,
// + - * / ^ (non-negative integer exponents) and parentheses.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "syslat/tower.hpp"

namespace syslat {

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    TowerElem parse() {
        TowerElem v = expr();
        skip_space();
        if (pos_ != text_.size()) error("trailing input");
        return v;
    }

private:
    TowerElem expr() {
        TowerElem v = term();
        for (;;) {
            skip_space();
            if (accept('+')) v = v + term();
            else if (accept('-')) v = v - term();
            else return v;
        }
    }

    TowerElem term() {
        TowerElem v = unary();
        for (;;) {
            skip_space();
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                const TowerElem d = unary();
                if (d.is_zero()) error("division by zero");
                v = v / d;
            } else {
                return v;
            }
        }
    }

    TowerElem unary() {
        skip_space();
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    TowerElem power() {
        TowerElem base = atom();
        skip_space();
        if (!accept('^')) return base;
        skip_space();
        const BigInt e = integer();
        if (e > 64) error("exponent too large");
        TowerElem r(1L);
        for (long i = 0; i < e.get_si(); ++i) r = r * base;
        return r;
    }

    TowerElem atom() {
        skip_space();
        if (pos_ >= text_.size()) error("unexpected end of input");
        const char ch = text_[pos_];
        if (accept('(')) {
            TowerElem v = expr();
            skip_space();
            if (!accept(')')) error("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) return TowerElem(RatFunc(BigRational(integer())));
        ++pos_;
        switch (ch) {
        case 't': return tower::t();
        case 's': return tower::s();
        case 'w': return tower::w();
        default: --pos_; error(std::string("unexpected character '") + ch + "'");
        }
    }

    BigInt integer() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) error("expected an integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    bool accept(char ch) {
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline TowerElem parse_tower_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

} // namespace syslat
