#ifndef DRINFELD_POLY_HPP
#define DRINFELD_POLY_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "field_concepts.hpp"

namespace drinfeld {

/// Dense univariate polynomial over a field context F.
///
/// Coefficients are stored low to high with no trailing zeros; the zero
/// polynomial has an empty coefficient vector and degree -1.
template <Field F>
class Poly {
  public:
    using Elem = typename F::Elem;
    using FieldHandle = std::shared_ptr<const F>;

    Poly() = default;
    explicit Poly(FieldHandle field) : field_(std::move(field)) {}
    Poly(FieldHandle field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

    static Poly constant(FieldHandle field, Elem c) { return Poly(std::move(field), std::vector<Elem>{std::move(c)}); }
    static Poly monomial(FieldHandle field, Elem c, std::size_t degree) {
        std::vector<Elem> v(degree + 1, field->zero());
        v[degree] = std::move(c);
        return Poly(std::move(field), std::move(v));
    }
    static Poly x(FieldHandle field) { return monomial(field, field->one(), 1); }
    static Poly one(FieldHandle field) { return constant(field, field->one()); }

    const FieldHandle& field() const { return field_; }
    const F& ctx() const { return *field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && field_->equal(c_[0], field_->one()); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && field_->equal(c_.back(), field_->one()); }
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }
    Elem leading() const { return c_.empty() ? field_->zero() : c_.back(); }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_->zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_->zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = field_->neg(x);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.field_ ? a.field_ : b.field_);
        const F& f = *a.field_;
        std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, f.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (f.is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a.c_[i], b.c_[j]));
        }
        return Poly(a.field_, std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Elem& s) const {
        if (field_->is_zero(s)) return Poly(field_);
        std::vector<Elem> r = c_;
        for (auto& x : r) x = field_->mul(x, s);
        return Poly(field_, std::move(r));
    }
    Poly shifted(std::size_t n) const {
        if (is_zero()) return *this;
        std::vector<Elem> r(n, field_->zero());
        r.insert(r.end(), c_.begin(), c_.end());
        return Poly(field_, std::move(r));
    }

    /// Euclidean division; throws std::domain_error on division by zero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        const F& f = *b.field_;
        if (a.degree() < b.degree()) return {Poly(b.field_), a};
        std::vector<Elem> rem = a.c_;
        std::vector<Elem> quo(a.c_.size() - b.c_.size() + 1, f.zero());
        const Elem lead_inv = f.inv(b.c_.back());
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t i = rem.size(); i-- > db;) {
            if (f.is_zero(rem[i])) continue;
            Elem factor = f.mul(rem[i], lead_inv);
            quo[i - db] = factor;
            for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(factor, b.c_[j]));
        }
        rem.resize(db);
        return {Poly(b.field_, std::move(quo)), Poly(b.field_, std::move(rem))};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    Poly monic() const {
        if (is_zero() || is_monic()) return *this;
        return scaled(field_->inv(c_.back()));
    }

    Elem eval(const Elem& x) const {
        Elem r = field_->zero();
        for (std::size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, x), c_[i]);
        return r;
    }

    /// Substitutes g for the variable: this(g).
    Poly compose(const Poly& g) const {
        Poly r(field_);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * g + constant(field_, c_[i]);
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(field_);
        std::vector<Elem> r(c_.size() - 1, field_->zero());
        for (std::size_t i = 1; i < c_.size(); ++i) {
            Elem acc = field_->zero();
            for (std::size_t k = 0; k < i; ++k) acc = field_->add(acc, c_[i]);
            r[i - 1] = acc;
        }
        return Poly(field_, std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!a.field_->equal(a.c_[i], b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Monic gcd (zero if both are zero).
    friend Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// (g, s, t) with s*a + t*b = g, g monic.
    friend std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) {
        const auto& fh = a.field_ ? a.field_ : b.field_;
        Poly r0 = a, r1 = b;
        Poly s0 = one(fh), s1(fh), t0(fh), t1 = one(fh);
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            Poly s2 = s0 - q * s1;
            s0 = std::move(s1);
            s1 = std::move(s2);
            Poly t2 = t0 - q * t1;
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.is_zero()) return {r0, s0, t0};
        Elem li = fh->inv(r0.leading());
        return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
    }

    friend Poly powmod(Poly base, std::uint64_t e, const Poly& mod) {
        Poly result = one(mod.field_) % mod;
        base = base % mod;
        while (e) {
            if (e & 1U) result = (result * base) % mod;
            e >>= 1U;
            if (e) base = (base * base) % mod;
        }
        return result;
    }


  private:
    void trim() {
        if (!field_) return;
        while (!c_.empty() && field_->is_zero(c_.back())) c_.pop_back();
    }

    FieldHandle field_;
    std::vector<Elem> c_;
};

template <Field F>
Poly<F> pow(Poly<F> base, std::uint64_t e) {
    Poly<F> result = Poly<F>::one(base.field());
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

}  // namespace drinfeld

#endif  // DRINFELD_POLY_HPP
