#include "drinfeld/base_ring.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "drinfeld/expr_parser.hpp"
#include "drinfeld/literal_text.hpp"

namespace drinfeld {

namespace {

using Elem = GaloisField::Elem;

void check_degree(const PolyA& a, const DeskLimits& limits, std::string_view text) {
    if (limits.enforce && a.degree() > limits.max_degree)
        throw std::domain_error("degree " + std::to_string(a.degree()) + " of \"" + std::string(text) +
                                "\" exceeds the desk limit " + std::to_string(limits.max_degree));
}

ExprOps<PolyA> poly_ops(const FieldPtr& fq, const std::string& var) {
    ExprOps<PolyA> ops;
    ops.integer = [fq](long long v) { return PolyA::constant(fq, fq->from_int(v)); };
    ops.atom = [fq, var](const std::string& id) {
        if (id == var) return PolyA::x(fq);
        if (id == "a" && fq->degree() > 1) return PolyA::constant(fq, fq->generator());
        throw std::invalid_argument("unknown symbol \"" + id + "\"");
    };
    ops.add = [](const PolyA& a, const PolyA& b) { return a + b; };
    ops.sub = [](const PolyA& a, const PolyA& b) { return a - b; };
    ops.mul = [](const PolyA& a, const PolyA& b) { return a * b; };
    ops.neg = [](const PolyA& a) { return -a; };
    return ops;
}

}  // namespace

FieldPtr make_fq(std::uint64_t q, const DeskLimits& limits) {
    const auto [p, e] = prime_power(q);
    if (limits.enforce && q > limits.max_q)
        throw std::domain_error("q = " + std::to_string(q) + " exceeds the desk limit " + std::to_string(limits.max_q));
    return GaloisField::make(p, e);
}

FieldPtr parse_field(std::string_view text, const DeskLimits& limits) {
    std::string s = trim(text);
    if (s.rfind("q", 0) == 0) {
        s = trim(std::string_view(s).substr(1));
        if (s.empty() || s[0] != '=') throw std::invalid_argument("expected q=<prime power>, got \"" + std::string(text) + "\"");
        s = trim(std::string_view(s).substr(1));
    }
    if (s.empty() || s.size() > 18) throw std::invalid_argument("malformed field size \"" + std::string(text) + "\"");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("malformed field size \"" + std::string(text) + "\"");
    return make_fq(std::stoull(s), limits);
}

BigInt ideal_norm(const IdealA& n) {
    if (n.is_zero()) throw std::domain_error("norm of the zero ideal");
    return big_pow(BigInt(n.field()->size()), static_cast<std::uint64_t>(n.degree()));
}

int deg_a(const PolyA& a) {
    if (a.is_zero()) throw std::domain_error("degree of the zero polynomial");
    return a.degree();
}

PolyA Factorization::expand(const FieldPtr& fq) const {
    PolyA r = PolyA::constant(fq, unit);
    for (const auto& [p, m] : factors) r *= pow(p, static_cast<std::uint64_t>(m));
    return r;
}

Factorization factor_poly(const PolyA& a) {
    if (a.is_zero()) throw std::domain_error("factorisation of the zero polynomial");
    Factorization out;
    out.unit = a.leading();
    if (a.degree() > 0) out.factors = factor(a);
    return out;
}

std::uint64_t checked_pow(std::uint64_t q, int e) {
    if (e < 0) throw std::domain_error("negative exponent");
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / q) throw std::overflow_error("q^e overflows 64 bits");
        r *= q;
    }
    return r;
}

PolyA poly_from_index(const FieldPtr& fq, std::uint64_t index, int len) {
    std::vector<Elem> c(static_cast<std::size_t>(len));
    const std::uint64_t q = fq->size();
    for (auto& x : c) {
        x = index % q;
        index /= q;
    }
    return PolyA(fq, std::move(c));
}

std::uint64_t poly_index(const PolyA& a) {
    const std::uint64_t q = a.ctx().size();
    std::uint64_t r = 0;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) r = r * q + a.coeffs()[i];
    return r;
}

PolyA monic_from_index(const FieldPtr& fq, std::uint64_t index, int d) {
    std::vector<Elem> c(static_cast<std::size_t>(d) + 1);
    const std::uint64_t q = fq->size();
    for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = index % q;
        index /= q;
    }
    c[static_cast<std::size_t>(d)] = 1;
    return PolyA(fq, std::move(c));
}

std::vector<PolyA> irreducibles_of_degree(const FieldPtr& fq, int d) {
    if (d <= 0) throw std::domain_error("irreducible degree must be at least 1");
    const BigInt count = big_pow(BigInt(fq->size()), static_cast<std::uint64_t>(d));
    check_budget(count, "enumerating monic polynomials of degree " + std::to_string(d));
    const auto n = static_cast<std::uint64_t>(count);
    std::vector<PolyA> out;
    for (std::uint64_t i = 0; i < n; ++i) {
        PolyA f = monic_from_index(fq, i, d);
        if (is_irreducible(f)) out.push_back(std::move(f));
    }
    return out;
}

BigInt necklace_count(std::uint64_t q, int d) {
    if (d <= 0) throw std::domain_error("degree must be at least 1");
    auto mobius = [](std::uint64_t k) {
        int m = 1;
        for (std::uint64_t p = 2; p * p <= k; ++p) {
            if (k % p) continue;
            k /= p;
            if (k % p == 0) return 0;
            m = -m;
        }
        if (k > 1) m = -m;
        return m;
    };
    BigInt total = 0;
    for (int k = 1; k <= d; ++k) {
        if (d % k) continue;
        total += mobius(static_cast<std::uint64_t>(k)) * big_pow(BigInt(q), static_cast<std::uint64_t>(d / k));
    }
    return total / d;
}

std::string fq_to_string(const GaloisField& fq, Elem c) {
    if (fq.degree() == 1) return std::to_string(c);
    return fq.to_string(c, "a");
}

Elem parse_fq(const FieldPtr& fq, std::string_view text) {
    const PolyA p = parse_poly(fq, text, "T", DeskLimits::none());
    if (p.degree() > 0) throw std::invalid_argument("\"" + std::string(text) + "\" is not a constant");
    return p.coeff(0);
}

std::string to_string(const PolyA& a, const std::string& var) {
    if (a.is_zero()) return "0";
    const GaloisField& f = a.ctx();
    std::string out;
    for (int i = a.degree(); i >= 0; --i) {
        const Elem c = a.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        std::string cs = fq_to_string(f, c);
        if (cs.find('+') != std::string::npos && (i > 0 || !out.empty())) cs = "(" + cs + ")";
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += cs;
            continue;
        }
        if (c != 1) out += cs + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

PolyA parse_poly(const FieldPtr& fq, std::string_view text, const std::string& var, const DeskLimits& limits) {
    const auto ops = poly_ops(fq, var);
    PolyA r = parse_expression(text, ops);
    check_degree(r, limits, text);
    return r;
}

bool is_square(const GaloisField& f, Elem c) {
    if (c == 0) return false;
    if (f.characteristic() == 2) return true;
    return f.pow(c, (f.size() - 1) / 2) == 1;
}

RatFunc::RatFunc(const PolyA& num) : num_(num), den_(PolyA::one(num.field())) {}

RatFunc::RatFunc(const PolyA& num, const PolyA& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = PolyA::one(den_.field());
        return;
    }
    const PolyA g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    if (!den_.is_monic()) {
        const Elem li = den_.ctx().inv(den_.leading());
        num_ = num_.scaled(li);
        den_ = den_.scaled(li);
    }
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::domain_error("inverse of the zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    return RatFunc(drinfeld::pow(num_, static_cast<std::uint64_t>(e)), drinfeld::pow(den_, static_cast<std::uint64_t>(e)));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_, a.den_, RatFunc::Reduced{});
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc::zero(a.field());
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_, a.den_, RatFunc::Reduced{});
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

std::string to_string(const RatFunc& a, const std::string& var) {
    if (a.is_polynomial()) return to_string(a.num(), var);
    return "(" + to_string(a.num(), var) + ")/(" + to_string(a.den(), var) + ")";
}

RatFunc parse_ratfunc(const FieldPtr& fq, std::string_view text, const std::string& var, const DeskLimits& limits) {
    ExprOps<RatFunc> ops;
    ops.integer = [fq](long long v) { return RatFunc(PolyA::constant(fq, fq->from_int(v))); };
    ops.atom = [fq, var](const std::string& id) {
        if (id == var) return RatFunc(PolyA::x(fq));
        if (id == "a" && fq->degree() > 1) return RatFunc(PolyA::constant(fq, fq->generator()));
        throw std::invalid_argument("unknown symbol \"" + id + "\"");
    };
    ops.add = [](const RatFunc& a, const RatFunc& b) { return a + b; };
    ops.sub = [](const RatFunc& a, const RatFunc& b) { return a - b; };
    ops.mul = [](const RatFunc& a, const RatFunc& b) { return a * b; };
    ops.neg = [](const RatFunc& a) { return -a; };
    ops.div = [](const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return a / b;
    };
    RatFunc r = parse_expression(text, ops);
    check_degree(r.num(), limits, text);
    check_degree(r.den(), limits, text);
    return r;
}

}  // namespace drinfeld
