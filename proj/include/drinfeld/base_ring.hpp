#ifndef DRINFELD_BASE_RING_HPP
#define DRINFELD_BASE_RING_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "budget.hpp"
#include "ff_poly.hpp"
#include "galois_field.hpp"

namespace drinfeld {

/// Elements of A = F_q[T].
using PolyA = FPoly;

/// F_q with its canonical modulus. Throws std::domain_error if q is not a
/// prime power or exceeds the desk limit.
FieldPtr make_fq(std::uint64_t q, const DeskLimits& limits = {});

/// Accepts "q=9" or "9".
FieldPtr parse_field(std::string_view text, const DeskLimits& limits = {});

/// Nonzero ideals are stored by their monic generator; the zero ideal has
/// the zero generator.
class IdealA {
  public:
    explicit IdealA(const PolyA& generator) : gen_(generator.monic()) {}

    const PolyA& generator() const { return gen_; }
    bool is_zero() const { return gen_.is_zero(); }
    int degree() const { return gen_.degree(); }
    const FieldPtr& field() const { return gen_.field(); }
    bool contains(const PolyA& a) const { return is_zero() ? a.is_zero() : (a % gen_).is_zero(); }

    friend IdealA operator*(const IdealA& a, const IdealA& b) { return IdealA(a.gen_ * b.gen_); }
    friend bool operator==(const IdealA& a, const IdealA& b) { return a.gen_ == b.gen_; }

  private:
    PolyA gen_;
};

/// |A/n| = q^deg(n).
BigInt ideal_norm(const IdealA& n);

/// Degree of a nonzero polynomial.
int deg_a(const PolyA& a);

struct Factorization {
    GaloisField::Elem unit = 0;
    std::vector<std::pair<PolyA, int>> factors;

    PolyA expand(const FieldPtr& fq) const;
};

Factorization factor_poly(const PolyA& a);

/// Monic irreducibles of degree d in increasing order (degree, then
/// coefficients from the top down).
std::vector<PolyA> irreducibles_of_degree(const FieldPtr& fq, int d);

/// The polynomial of degree < len whose base-q digits (low to high) encode
/// `index`. Enumerating 0..q^len-1 yields all residues mod a degree-len
/// modulus in increasing order.
PolyA poly_from_index(const FieldPtr& fq, std::uint64_t index, int len);
/// Inverse of poly_from_index.
std::uint64_t poly_index(const PolyA& a);

/// The monic polynomial T^d + (poly_from_index(index, d)).
PolyA monic_from_index(const FieldPtr& fq, std::uint64_t index, int d);

/// Number of monic irreducibles of degree d, by the necklace formula.
BigInt necklace_count(std::uint64_t q, int d);

/// q^e as an unsigned integer; throws if it does not fit.
std::uint64_t checked_pow(std::uint64_t q, int e);

/// Coefficient of F_q as text: an integer over a prime field, otherwise a
/// polynomial in `a`.
std::string fq_to_string(const GaloisField& fq, GaloisField::Elem c);
GaloisField::Elem parse_fq(const FieldPtr& fq, std::string_view text);

std::string to_string(const PolyA& a, const std::string& var = "T");
PolyA parse_poly(const FieldPtr& fq, std::string_view text, const std::string& var = "T",
                 const DeskLimits& limits = {});

/// Legendre-type test: is c a nonzero square in F_Q?
bool is_square(const GaloisField& f, GaloisField::Elem c);

/// Elements of K = F_q(T), always in lowest terms with monic denominator.
class RatFunc {
  public:
    RatFunc() = default;
    explicit RatFunc(const PolyA& num);
    RatFunc(const PolyA& num, const PolyA& den);

    static RatFunc zero(const FieldPtr& fq) { return RatFunc(PolyA(fq)); }
    static RatFunc one(const FieldPtr& fq) { return RatFunc(PolyA::one(fq)); }
    /// Skips normalisation; the caller guarantees lowest terms and a monic
    /// denominator.
    static RatFunc from_reduced(PolyA num, PolyA den) { return RatFunc(std::move(num), std::move(den), Reduced{}); }

    const PolyA& num() const { return num_; }
    const PolyA& den() const { return den_; }
    const FieldPtr& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc inv() const;
    RatFunc pow(long long e) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const { return RatFunc(-num_, den_, Reduced{}); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  private:
    struct Reduced {};
    RatFunc(PolyA num, PolyA den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    PolyA num_;
    PolyA den_;
};

/// "num" when the denominator is 1, otherwise "(num)/(den)".
std::string to_string(const RatFunc& a, const std::string& var = "T");
RatFunc parse_ratfunc(const FieldPtr& fq, std::string_view text, const std::string& var = "T",
                      const DeskLimits& limits = {});

}  // namespace drinfeld

#endif  // DRINFELD_BASE_RING_HPP
