#ifndef DRINFELD_BIGINT_HPP
#define DRINFELD_BIGINT_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace drinfeld {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt big_pow(const BigInt& base, std::uint64_t e);
BigRat rat_pow(const BigRat& base, std::uint64_t e);
BigRat make_rat(long long num, long long den = 1);

/// Decimal text; rationals as "num/den" or an integer when den = 1.
std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);
/// Parses "a", "-a" or "a/b".
BigRat parse_rational(const std::string& text);

}  // namespace drinfeld

#endif  // DRINFELD_BIGINT_HPP
