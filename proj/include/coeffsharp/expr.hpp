#pragma once

// Tiny expression language for typing parameters on the command line:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | '+' unary | atom
//   atom   := number ['i'] | 'i' | 'sqrt' '(' expr ')' | '(' expr ')'
//   number := digits ['.' digits] [('e'|'E') ['+'|'-'] digits]
//
// Every value is evaluated in floating point; values built only from
// literals, + - * / (no sqrt, no i) also come back as exact rationals.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "scalar.hpp"

namespace coeffsharp {

class expr_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ExprValue {
    Complex value;
    std::optional<Rational> exact;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view src) : s_(src) {}

    ExprValue parse()
    {
        auto v = expr();
        skip();
        if (pos_ != s_.size()) {
            fail("unexpected trailing input");
        }
        return v;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw expr_error("bad expression '" + std::string(s_) + "': " + what);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static ExprValue combine(const ExprValue& a, const ExprValue& b, char op)
    {
        ExprValue r;
        switch (op) {
        case '+': r.value = a.value + b.value; break;
        case '-': r.value = a.value - b.value; break;
        case '*': r.value = a.value * b.value; break;
        default: r.value = a.value / b.value; break;
        }
        if (a.exact && b.exact) {
            switch (op) {
            case '+': r.exact = *a.exact + *b.exact; break;
            case '-': r.exact = *a.exact - *b.exact; break;
            case '*': r.exact = *a.exact * *b.exact; break;
            default:
                if (*b.exact == 0) {
                    throw expr_error("division by zero");
                }
                r.exact = *a.exact / *b.exact;
                break;
            }
        }
        return r;
    }

    ExprValue expr()
    {
        auto v = term();
        for (;;) {
            if (eat('+')) {
                v = combine(v, term(), '+');
            } else if (eat('-')) {
                v = combine(v, term(), '-');
            } else {
                return v;
            }
        }
    }

    ExprValue term()
    {
        auto v = unary();
        for (;;) {
            if (eat('*')) {
                v = combine(v, unary(), '*');
            } else if (eat('/')) {
                v = combine(v, unary(), '/');
            } else {
                return v;
            }
        }
    }

    ExprValue unary()
    {
        if (eat('-')) {
            auto v = unary();
            v.value = -v.value;
            if (v.exact) {
                v.exact = Rational(-*v.exact);
            }
            return v;
        }
        if (eat('+')) {
            return unary();
        }
        return atom();
    }

    ExprValue atom()
    {
        skip();
        if (pos_ >= s_.size()) {
            fail("unexpected end of input");
        }
        if (eat('(')) {
            auto v = expr();
            if (!eat(')')) {
                fail("missing ')'");
            }
            return v;
        }
        if (s_.substr(pos_, 4) == "sqrt") {
            pos_ += 4;
            if (!eat('(')) {
                fail("expected '(' after sqrt");
            }
            auto v = expr();
            if (!eat(')')) {
                fail("missing ')'");
            }
            return {std::sqrt(v.value), std::nullopt};
        }
        if (s_[pos_] == 'i') {
            ++pos_;
            return {{0.0, 1.0}, std::nullopt};
        }
        if (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.') {
            return number();
        }
        fail(std::string("unexpected character '") + s_[pos_] + "'");
    }

    ExprValue number()
    {
        const std::size_t start = pos_;
        std::string digits;
        long long frac_digits = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            digits += s_[pos_++];
        }
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                digits += s_[pos_++];
                ++frac_digits;
            }
        }
        if (digits.empty()) {
            fail("malformed number");
        }
        long long exponent = 0;
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            int sign = 1;
            if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) {
                sign = s_[p] == '-' ? -1 : 1;
                ++p;
            }
            if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
                long long e = 0;
                while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
                    e = e * 10 + (s_[p++] - '0');
                    if (e > 400) {
                        fail("exponent out of range");
                    }
                }
                exponent = sign * e;
                pos_ = p;
            }
        }
        const double x = std::stod(std::string(s_.substr(start, pos_ - start)));
        // cpp_int reads a leading 0 as an octal prefix
        digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
        boost::multiprecision::cpp_int n(digits);
        Rational q(n);
        const long long scale = exponent - frac_digits;
        boost::multiprecision::cpp_int p10 = boost::multiprecision::pow(boost::multiprecision::cpp_int(10),
                                                                        static_cast<unsigned>(scale < 0 ? -scale : scale));
        q = scale < 0 ? Rational(q / Rational(p10)) : Rational(q * Rational(p10));

        if (pos_ < s_.size() && s_[pos_] == 'i') {
            ++pos_;
            return {{0.0, x}, std::nullopt};
        }
        return {{x, 0.0}, q};
    }
};

} // namespace detail

/// Parses and evaluates an expression; throws expr_error on bad input.
inline ExprValue parse_expr(std::string_view src)
{
    return detail::ExprParser(src).parse();
}

} // namespace coeffsharp
