#ifndef DRINFELD_EXPR_PARSER_HPP
#define DRINFELD_EXPR_PARSER_HPP

#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace drinfeld {

/// Callbacks used by parse_expression to build values of type V.
template <class V>
struct ExprOps {
    std::function<V(long long)> integer;
    /// Resolves an identifier; should throw std::invalid_argument if unknown.
    std::function<V(const std::string&)> atom;
    std::function<V(const V&, const V&)> add;
    std::function<V(const V&, const V&)> sub;
    std::function<V(const V&, const V&)> mul;
    std::function<V(const V&)> neg;
    /// Optional; division is rejected when empty.
    std::function<V(const V&, const V&)> div;
};

/// Recursive-descent parser for + - * / ^ with integer exponents, integer
/// literals, identifiers and parentheses.
template <class V>
class ExprParser {
  public:
    ExprParser(std::string_view text, const ExprOps<V>& ops) : s_(text), ops_(ops) {}

    V parse() {
        V v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + " in \"" + std::string(s_) +
                                    "\": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    V expr() {
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        V acc = term();
        if (negate) acc = ops_.neg(acc);
        while (true) {
            if (eat('+'))
                acc = ops_.add(acc, term());
            else if (eat('-'))
                acc = ops_.sub(acc, term());
            else
                return acc;
        }
    }

    V term() {
        V acc = power();
        while (true) {
            if (eat('*')) {
                acc = ops_.mul(acc, power());
            } else if (eat('/')) {
                if (!ops_.div) fail("division is not allowed here");
                acc = ops_.div(acc, power());
            } else {
                return acc;
            }
        }
    }

    V power() {
        V b = primary();
        if (eat('^')) {
            skip();
            const long long e = number();
            if (e < 0) fail("negative exponent");
            V r = ops_.integer(1);
            V base = b;
            long long n = e;
            while (n) {
                if (n & 1) r = ops_.mul(r, base);
                n >>= 1;
                if (n) base = ops_.mul(base, base);
            }
            return r;
        }
        return b;
    }

    long long number() {
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a number");
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (1LL << 40)) fail("number too large");
            ++pos_;
        }
        return v;
    }

    V primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            V v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == '-') {
            ++pos_;
            return ops_.neg(power());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return ops_.integer(number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                id += s_[pos_++];
            return ops_.atom(id);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const ExprOps<V>& ops_;
    std::size_t pos_ = 0;
};

/// Whether `s` contains + or / outside parentheses, so that it must be
/// parenthesised when used as a factor.
inline bool needs_parens(const std::string& s) {
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == '+' || c == '/')) return true;
    }
    return false;
}

template <class V>
V parse_expression(std::string_view text, const ExprOps<V>& ops) {
    return ExprParser<V>(text, ops).parse();
}

}  // namespace drinfeld

#endif  // DRINFELD_EXPR_PARSER_HPP
