// Recursive-descent parser for exact scalar literals.
//
// Grammar (whitespace insignificant):
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-'* primary ('^' ('-')? integer)?
//   primary := integer ('/' integer)? | 'i' | identifier | '(' expr ')'
//
// Identifiers become named parameters; the single letter `i` is the
// imaginary unit.  `s^-3` style negative exponents are allowed.
#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "scalar.hpp"

namespace nilalg {

class ScalarParser {
  public:
    explicit ScalarParser(std::string text) : src_(std::move(text)) {}

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != src_.size())
            throw std::runtime_error("trailing input in scalar literal: '" + src_ +
                                     "' at offset " + std::to_string(pos_));
        return v;
    }

  private:
    std::string src_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) { ++pos_; return true; }
        return false;
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            if (eat('*')) v *= factor();
            else if (eat('/')) v /= factor();
            else return v;
        }
    }

    Scalar factor() {
        int sign = 1;
        while (eat('-')) sign = -sign;
        Scalar v = primary();
        if (eat('^')) {
            int esign = eat('-') ? -1 : 1;
            v = v.pow(esign * integer());
        }
        return sign < 0 ? -v : v;
    }

    int integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) throw std::runtime_error("expected integer in '" + src_ + "'");
        return std::stoi(src_.substr(start, pos_ - start));
    }

    Scalar primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!eat(')')) throw std::runtime_error("missing ')' in '" + src_ + "'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            BigInt p{src_.substr(start, pos_ - start)};
            // A '/' directly between two integers is a rational literal; the
            // term loop handles the general quotient case identically, so we
            // simply return the integer and let '/' apply.
            return Scalar(GQ(BigRat(p)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            std::string name = src_.substr(start, pos_ - start);
            if (name == "i") return Scalar(GQ::i_unit());
            return Scalar::var(name);
        }
        throw std::runtime_error("unexpected character '" + std::string(1, c) + "' in '" +
                                 src_ + "'");
    }
};

inline Scalar parse_scalar(const std::string& text) { return ScalarParser(text).parse(); }

}  // namespace nilalg
