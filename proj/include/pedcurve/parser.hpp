#pragma once

// Recursive-descent parser for polynomial expressions.
//
//   expr     := term (("+"|"-") term)*
//   term     := factor ("*" factor)*
//   factor   := base ("^" uint)?
//   base     := rational | var | "(" expr ")" | "-" base
//   rational := int ("/" uint)?
//   var      := letter (letter|digit|"_")*
//
// No implicit multiplication. Syntax errors carry the byte offset.

#include <cctype>
#include <string>
#include <string_view>

#include "pedcurve/polynomial.hpp"

namespace pedcurve {

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, const VarRegistry& reg) : s_(text), reg_(reg) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw error(errc::syntax_error, "trailing input at offset " + std::to_string(pos_),
                        pos_);
        return p;
    }

private:
    std::string_view s_;
    const VarRegistry& reg_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw error(errc::syntax_error, what + " at offset " + std::to_string(pos_), pos_);
    }

    Poly expr() {
        Poly acc = term();
        while (true) {
            skip_ws();
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }

    Poly factor() {
        Poly b = base();
        if (eat('^')) {
            std::uint64_t e = parse_uint();
            return b.pow(e);
        }
        return b;
    }

    Poly base() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -base();
        }
        if (c == '(') {
            std::size_t open = pos_;
            ++pos_;
            skip_ws();
            if (pos_ == s_.size())
                throw error(errc::syntax_error,
                            "unclosed '(' at offset " + std::to_string(open), open);
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly(parse_rational());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_var();
        fail("expected a factor");
    }

    std::uint64_t parse_uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an unsigned integer");
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            if (v > (1ULL << 30)) fail("exponent too large");
            ++pos_;
        }
        return v;
    }

    Rat parse_rational() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        BigInt n = BigInt::from_string(s_.substr(start, pos_ - start));
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected an unsigned denominator");
            std::size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            BigInt d = BigInt::from_string(s_.substr(dstart, pos_ - dstart));
            if (d.is_zero()) fail("zero denominator");
            return Rat(n, d);
        }
        return Rat(n);
    }

    Poly parse_var() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        std::string name(s_.substr(start, pos_ - start));
        auto id = reg_.find(name);
        if (!id)
            throw error(errc::unknown_variable, "unknown variable '" + name + "'", start);
        return Poly::variable(*id);
    }
};

}  // namespace detail

inline Poly parse_poly(std::string_view text, const VarRegistry& reg) {
    return detail::PolyParser(text, reg).parse();
}

}  // namespace pedcurve
