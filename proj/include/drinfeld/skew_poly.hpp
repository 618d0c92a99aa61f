#ifndef DRINFELD_SKEW_POLY_HPP
#define DRINFELD_SKEW_POLY_HPP

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "expr_parser.hpp"
#include "fields.hpp"

namespace drinfeld {

/// Twisted polynomial Σ c_i τ^i over a coefficient field, with τ b = b^q τ.
template <CoeffField F>
class SkewPoly {
  public:
    using Elem = typename F::Elem;
    using FieldHandle = std::shared_ptr<const F>;

    SkewPoly() = default;
    explicit SkewPoly(FieldHandle field) : field_(std::move(field)) {}
    SkewPoly(FieldHandle field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

    static SkewPoly constant(FieldHandle field, Elem c) { return SkewPoly(std::move(field), std::vector<Elem>{std::move(c)}); }
    static SkewPoly tau_power(FieldHandle field, std::size_t n) {
        std::vector<Elem> c(n + 1, field->zero());
        c[n] = field->one();
        return SkewPoly(std::move(field), std::move(c));
    }
    static SkewPoly tau(FieldHandle field) { return tau_power(std::move(field), 1); }
    static SkewPoly one(FieldHandle field) { return tau_power(std::move(field), 0); }

    const FieldHandle& field() const { return field_; }
    const F& ctx() const { return *field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }
    Elem leading() const { return c_.empty() ? field_->zero() : c_.back(); }

    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
        check_same(a, b);
        const F& f = *a.field_;
        std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), f.zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(a.coeff(i), b.coeff(i));
        return SkewPoly(a.field_, std::move(r));
    }
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }
    SkewPoly operator-() const {
        SkewPoly r = *this;
        for (auto& x : r.c_) x = field_->neg(x);
        return r;
    }
    SkewPoly& operator+=(const SkewPoly& o) { return *this = *this + o; }
    SkewPoly& operator-=(const SkewPoly& o) { return *this = *this - o; }

    /// Product under τ b = b^q τ: (Σ u_i τ^i)(Σ v_j τ^j) = Σ u_i v_j^(q^i) τ^(i+j).
    friend SkewPoly operator*(const SkewPoly& u, const SkewPoly& v) {
        check_same(u, v);
        if (u.is_zero() || v.is_zero()) return SkewPoly(u.field_);
        const F& f = *u.field_;
        std::vector<Elem> r(u.c_.size() + v.c_.size() - 1, f.zero());
        std::vector<Elem> vi = v.c_;
        for (std::size_t i = 0; i < u.c_.size(); ++i) {
            if (i > 0)
                for (auto& x : vi) x = f.frobenius(x);
            if (f.is_zero(u.c_[i])) continue;
            for (std::size_t j = 0; j < vi.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(u.c_[i], vi[j]));
        }
        return SkewPoly(u.field_, std::move(r));
    }
    SkewPoly& operator*=(const SkewPoly& o) { return *this = *this * o; }

    /// c·u.
    SkewPoly scaled_left(const Elem& c) const {
        std::vector<Elem> r = c_;
        for (auto& x : r) x = field_->mul(c, x);
        return SkewPoly(field_, std::move(r));
    }

    /// Σ c_i x^(q^i).
    Elem eval(Elem x) const {
        const F& f = *field_;
        Elem r = f.zero();
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i > 0) x = f.frobenius(x);
            r = f.add(r, f.mul(c_[i], x));
        }
        return r;
    }

    /// (s, rem) with w = s·u + rem and deg rem < deg u. Only the leading
    /// coefficient of u is inverted, so no q-th roots are ever needed.
    friend std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& w, const SkewPoly& u) {
        check_same(w, u);
        if (u.is_zero()) throw std::domain_error("right division by the zero twisted polynomial");
        const F& f = *u.field_;
        const std::size_t m = static_cast<std::size_t>(u.degree());
        if (w.degree() < u.degree()) return {SkewPoly(u.field_), w};
        std::vector<Elem> rem = w.c_;
        std::vector<Elem> s(w.c_.size() - m, f.zero());
        // frobenius powers of u's coefficients, refreshed as k decreases
        std::vector<std::vector<Elem>> uf(s.size());
        uf[0] = u.c_;
        for (std::size_t k = 1; k < s.size(); ++k) {
            uf[k] = uf[k - 1];
            for (auto& x : uf[k]) x = f.frobenius(x);
        }
        for (std::size_t k = s.size(); k-- > 0;) {
            const Elem lead = rem[k + m];
            if (f.is_zero(lead)) continue;
            const Elem sk = f.mul(lead, f.inv(uf[k][m]));
            s[k] = sk;
            for (std::size_t j = 0; j <= m; ++j) rem[k + j] = f.sub(rem[k + j], f.mul(sk, uf[k][j]));
        }
        rem.resize(m);
        return {SkewPoly(u.field_, std::move(s)), SkewPoly(u.field_, std::move(rem))};
    }

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!a.field_->equal(a.c_[i], b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

  private:
    static void check_same(const SkewPoly& a, const SkewPoly& b) {
        if (a.field_ != b.field_) throw std::domain_error("twisted polynomials over different coefficient fields");
    }
    void trim() {
        while (!c_.empty() && field_->is_zero(c_.back())) c_.pop_back();
    }

    FieldHandle field_;
    std::vector<Elem> c_;
};

template <CoeffField F>
SkewPoly<F> skew_mul(const SkewPoly<F>& u, const SkewPoly<F>& v) {
    return u * v;
}

template <CoeffField F>
SkewPoly<F> skew_pow(const SkewPoly<F>& u, unsigned e) {
    SkewPoly<F> r = SkewPoly<F>::one(u.field());
    for (unsigned i = 0; i < e; ++i) r = r * u;
    return r;
}

/// Text form "c0 + c1*tau + c2*tau^2".
template <CoeffField F>
std::string to_string(const SkewPoly<F>& u) {
    if (u.is_zero()) return "0";
    const F& f = u.ctx();
    std::string out;
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
        const auto& c = u.coeffs()[i];
        if (f.is_zero(c)) continue;
        if (!out.empty()) out += " + ";
        std::string cs = f.to_string(c);
        if (i == 0) {
            out += cs;
            continue;
        }
        if (!f.equal(c, f.one())) {
            if (needs_parens(cs)) cs = "(" + cs + ")";
            out += cs + "*";
        }
        out += "tau";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

/// Parses the text form; `tau` is reserved and the remaining identifiers
/// are resolved by the coefficient field.
template <CoeffField F>
SkewPoly<F> parse_skew(const std::shared_ptr<const F>& field, const std::string& text) {
    using S = SkewPoly<F>;
    ExprOps<S> ops;
    ops.integer = [&](long long v) { return S::constant(field, field->from_int(v)); };
    ops.atom = [&](const std::string& id) {
        if (id == "tau") return S::tau(field);
        return S::constant(field, field->atom(id));
    };
    ops.add = [](const S& a, const S& b) { return a + b; };
    ops.sub = [](const S& a, const S& b) { return a - b; };
    ops.mul = [](const S& a, const S& b) { return a * b; };
    ops.neg = [](const S& a) { return -a; };
    ops.div = [&](const S& a, const S& b) {
        if (b.degree() != 0) throw std::invalid_argument("only division by nonzero coefficients is supported");
        return a * S::constant(field, field->inv(b.coeff(0)));
    };
    return parse_expression(text, ops);
}

using SkewL = SkewPoly<FiniteAField>;

/// Roots of a separable twisted polynomial over a finite A-field.
struct KernelRoots {
    unsigned degree = 1;               // d with all roots in L_d
    FiniteAField::Extension extension;  // L_d and L -> L_d
    std::vector<FiniteAField::Elem> basis;  // F_q-basis of the roots in L_d
};

/// Smallest d with the full root space of u inside L_d, together with an
/// F_q-basis of that space. Throws std::domain_error if u is inseparable.
KernelRoots kernel_roots(const SkewL& u);

/// Image of u under an embedding of its coefficient field.
SkewL map_coefficients(const SkewL& u, const FiniteAField::Extension& ext);

/// F_q-basis of {x ∈ L : u(x) = 0} for u over L itself.
std::vector<FiniteAField::Elem> kernel_in_field(const SkewL& u);

}  // namespace drinfeld

#endif  // DRINFELD_SKEW_POLY_HPP
