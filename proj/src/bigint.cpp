#include "drinfeld/bigint.hpp"

#include <stdexcept>

namespace drinfeld {

BigInt big_pow(const BigInt& base, std::uint64_t e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1U) r *= b;
        e >>= 1U;
        if (e) b *= b;
    }
    return r;
}

BigRat rat_pow(const BigRat& base, std::uint64_t e) {
    return BigRat(big_pow(numerator(base), e), big_pow(denominator(base), e));
}

BigRat make_rat(long long num, long long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    return BigRat(BigInt(num), BigInt(den));
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const BigRat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

BigRat parse_rational(const std::string& text) {
    auto parse_int = [&](const std::string& s) {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) throw std::invalid_argument("malformed rational \"" + text + "\"");
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("malformed rational \"" + text + "\"");
        return BigInt(s);
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return BigRat(parse_int(text));
    const BigInt d = parse_int(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
    return BigRat(parse_int(text.substr(0, slash)), d);
}

}  // namespace drinfeld
