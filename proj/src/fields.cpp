#include "drinfeld/fields.hpp"

#include <stdexcept>

#include "drinfeld/expr_parser.hpp"
#include "drinfeld/linalg.hpp"

namespace drinfeld {

namespace {

template <class F>
ExprOps<typename F::Elem> field_ops(const F& f) {
    using E = typename F::Elem;
    ExprOps<E> ops;
    ops.integer = [&f](long long v) { return f.from_int(v); };
    ops.atom = [&f](const std::string& id) { return f.atom(id); };
    ops.add = [&f](const E& a, const E& b) { return f.add(a, b); };
    ops.sub = [&f](const E& a, const E& b) { return f.sub(a, b); };
    ops.mul = [&f](const E& a, const E& b) { return f.mul(a, b); };
    ops.neg = [&f](const E& a) { return f.neg(a); };
    ops.div = [&f](const E& a, const E& b) {
        if (f.is_zero(b)) throw std::domain_error("division by zero");
        return f.mul(a, f.inv(b));
    };
    return ops;
}

std::string wrap_coefficient(const std::string& s) {
    if (needs_parens(s)) return "(" + s + ")";
    return s;
}

}  // namespace

FiniteAField::FiniteAField(FieldPtr fq, FieldPtr absolute, FieldEmbedding fq_emb, Elem t)
    : fq_(std::move(fq)), abs_(std::move(absolute)), fq_emb_(std::move(fq_emb)), t_(t) {
    const unsigned e = fq_->degree();
    const unsigned k = abs_->degree();
    if (k % e != 0) throw std::domain_error("F_" + std::to_string(fq_->size()) + " is not a subfield of L");
    const unsigned m = k / e;

    // minimal polynomial of t over F_q from its Frobenius orbit
    FPoly prod = FPoly::one(abs_);
    Elem c = t_;
    do {
        prod *= FPoly(abs_, {abs_->neg(c), 1});
        c = abs_->pow(c, fq_->size());
    } while (c != t_);
    std::vector<GaloisField::Elem> coeffs;
    for (auto x : prod.coeffs()) {
        GaloisField::Elem pre = 0;
        if (!fq_emb_.preimage(x, pre)) throw std::logic_error("characteristic polynomial not defined over F_q");
        coeffs.push_back(pre);
    }
    char_poly_ = PolyA(fq_, std::move(coeffs));
    t_generates_ = char_poly_.degree() == static_cast<int>(m);
    beta_ = t_generates_ ? t_ : abs_->generator();

    // F_p-basis alpha^i beta^j of L and the inverse of its digit matrix
    const unsigned p = abs_->characteristic();
    auto fp = GaloisField::make(p, 1);
    const Elem alpha = fq_emb_(fq_->degree() == 1 ? 1 : fq_->generator());
    DenseMatrix<GaloisField> aug(k, std::vector<GaloisField::Elem>(2 * k, 0));
    Elem bj = 1;
    for (unsigned j = 0; j < m; ++j) {
        Elem ai = 1;
        for (unsigned i = 0; i < e; ++i) {
            const auto d = abs_->digits(abs_->mul(ai, bj));
            const unsigned col = i + e * j;
            for (unsigned r = 0; r < k; ++r) aug[r][col] = d[r];
            ai = abs_->mul(ai, alpha);
        }
        bj = abs_->mul(bj, beta_);
    }
    for (unsigned r = 0; r < k; ++r) aug[r][k + r] = 1;
    const auto piv = rref(*fp, aug);
    if (piv.size() < k || piv[k - 1] != k - 1) throw std::logic_error("coordinate basis is degenerate");
    coord_inverse_.assign(k, std::vector<unsigned>(k));
    for (unsigned r = 0; r < k; ++r)
        for (unsigned s = 0; s < k; ++s) coord_inverse_[r][s] = static_cast<unsigned>(aug[r][k + s]);
}

std::shared_ptr<const FiniteAField> FiniteAField::residue(const FieldPtr& fq, const PolyA& prime) {
    if (!is_irreducible(prime)) throw std::domain_error("residue field of a non-prime ideal " + drinfeld::to_string(prime));
    const unsigned k = fq->degree() * static_cast<unsigned>(prime.degree());
    auto absolute = GaloisField::make(fq->characteristic(), k);
    auto emb = FieldEmbedding::canonical(fq, absolute);
    std::vector<Elem> c;
    for (auto x : prime.coeffs()) c.push_back(emb(x));
    const auto rts = roots(FPoly(absolute, std::move(c)));
    return std::shared_ptr<const FiniteAField>(new FiniteAField(fq, absolute, emb, rts.front()));
}

std::shared_ptr<const FiniteAField> FiniteAField::make(const FieldPtr& fq, const FieldPtr& absolute, Elem t) {
    if (absolute->degree() % fq->degree() != 0) throw std::domain_error("F_q is not a subfield of L");
    auto emb = FieldEmbedding::canonical(fq, absolute);
    return std::shared_ptr<const FiniteAField>(new FiniteAField(fq, absolute, emb, t));
}

FiniteAField::Extension FiniteAField::extension(unsigned d) const {
    if (d == 0) throw std::domain_error("extension degree must be at least 1");
    std::lock_guard<std::mutex> lock(ext_mu_);
    auto it = ext_cache_.find(d);
    if (it != ext_cache_.end()) return it->second;
    auto abs_d = GaloisField::make(abs_->characteristic(), abs_->degree() * d);
    FieldEmbedding emb = d == 1 ? FieldEmbedding::identity(abs_) : FieldEmbedding::canonical(abs_, abs_d);
    if (d == 1) abs_d = abs_;
    Extension ext{std::shared_ptr<const FiniteAField>(new FiniteAField(fq_, abs_d, fq_emb_.then(emb), emb(t_))), emb};
    ext_cache_.emplace(d, ext);
    return ext;
}

std::vector<GaloisField::Elem> FiniteAField::fq_coords(Elem a) const {
    const unsigned e = fq_->degree();
    const unsigned k = abs_->degree();
    const unsigned p = abs_->characteristic();
    const auto d = abs_->digits(a);
    std::vector<unsigned> v(k, 0);
    for (unsigned r = 0; r < k; ++r) {
        unsigned long long acc = 0;
        for (unsigned s = 0; s < k; ++s) acc += static_cast<unsigned long long>(coord_inverse_[r][s]) * d[s];
        v[r] = static_cast<unsigned>(acc % p);
    }
    std::vector<GaloisField::Elem> out(k / e);
    for (unsigned j = 0; j < k / e; ++j)
        out[j] = fq_->from_digits(std::span<const unsigned>(v.data() + static_cast<std::size_t>(e) * j, e));
    return out;
}

FiniteAField::Elem FiniteAField::from_fq_coords(const std::vector<GaloisField::Elem>& c) const {
    Elem r = 0, bj = 1;
    for (auto x : c) {
        r = abs_->add(r, abs_->mul(fq_emb_(x), bj));
        bj = abs_->mul(bj, beta_);
    }
    return r;
}

FiniteAField::Elem FiniteAField::atom(const std::string& id) const {
    if (id == "t") return t_;
    if (id == "z" && abs_->degree() > 1) return abs_->generator();
    if (id == "a" && fq_->degree() > 1) return fq_emb_(fq_->generator());
    throw std::invalid_argument("unknown symbol \"" + id + "\" for a finite A-field");
}

std::string FiniteAField::to_string(Elem a) const {
    if (!t_generates_) return abs_->to_string(a, "z");
    return drinfeld::to_string(PolyA(fq_, fq_coords(a)), "t");
}

FiniteAField::Elem FiniteAField::parse(const std::string& text) const {
    return parse_expression(text, field_ops(*this));
}

RatFunc RationalFunctionField::frobenius(const RatFunc& a) const {
    const std::uint64_t qq = q();
    auto spread = [&](const PolyA& p) {
        if (p.is_zero()) return p;
        std::vector<GaloisField::Elem> c(static_cast<std::size_t>(p.degree()) * qq + 1, 0);
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i * qq] = p.coeffs()[i];
        return PolyA(fq_, std::move(c));
    };
    // Frobenius is an injective ring map, so lowest terms are preserved
    return RatFunc::from_reduced(spread(a.num()), spread(a.den()));
}

RatFunc RationalFunctionField::atom(const std::string& id) const {
    if (id == var_) return t();
    if (id == "a" && fq_->degree() > 1) return from_fq(fq_->generator());
    throw std::invalid_argument("unknown symbol \"" + id + "\" in F_q(" + var_ + ")");
}

SimpleExtensionField::SimpleExtensionField(std::shared_ptr<const RationalFunctionField> base, KPoly modulus,
                                           std::string var)
    : base_(std::move(base)), modulus_(modulus.monic()), var_(std::move(var)) {
    if (modulus_.degree() < 1) throw std::domain_error("extension modulus must have degree at least 1");
}

std::shared_ptr<const SimpleExtensionField> SimpleExtensionField::over_polynomial(const FieldPtr& fq, const PolyA& g,
                                                                                  std::string var) {
    if (g.degree() < 1) throw std::domain_error("T must map to a nonconstant polynomial");
    auto base = RationalFunctionField::make(fq);
    std::vector<RatFunc> c;
    for (auto x : g.coeffs()) c.push_back(base->from_fq(x));
    c[0] = c[0] - base->t();
    return std::make_shared<const SimpleExtensionField>(base, KPoly(base, std::move(c)), std::move(var));
}

KPoly SimpleExtensionField::inv(const KPoly& a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    auto [g, s, t] = xgcd(a, modulus_);
    if (!g.is_one()) throw std::domain_error("element is not invertible: the modulus is reducible");
    return s % modulus_;
}

KPoly SimpleExtensionField::frobenius(const KPoly& a) const {
    if (a.is_zero()) return a;
    const std::uint64_t qq = q();
    std::vector<RatFunc> c(static_cast<std::size_t>(a.degree()) * qq + 1, base_->zero());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i * qq] = base_->frobenius(a.coeffs()[i]);
    return KPoly(base_, std::move(c)) % modulus_;
}

KPoly SimpleExtensionField::from_y_poly(const PolyA& a) const {
    std::vector<RatFunc> c;
    for (auto x : a.coeffs()) c.push_back(base_->from_fq(x));
    return KPoly(base_, std::move(c)) % modulus_;
}

std::vector<RatFunc> SimpleExtensionField::coords(const KPoly& a) const {
    std::vector<RatFunc> out;
    for (int i = 0; i < degree(); ++i) out.push_back(a.coeff(static_cast<std::size_t>(i)));
    return out;
}

KPoly SimpleExtensionField::atom(const std::string& id) const {
    if (id == var_) return y();
    if (id == base_->variable()) return t();
    if (id == "a" && fq()->degree() > 1) return from_fq(fq()->generator());
    throw std::invalid_argument("unknown symbol \"" + id + "\" in the extension field");
}

std::string SimpleExtensionField::to_string(const KPoly& a) const {
    if (a.is_zero()) return "0";
    std::string out;
    for (int i = a.degree(); i >= 0; --i) {
        const RatFunc& c = a.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        const std::string cs = base_->to_string(c);
        if (i == 0) {
            out += out.empty() ? cs : wrap_coefficient(cs);
            continue;
        }
        if (!(c == base_->one())) out += wrap_coefficient(cs) + "*";
        out += var_;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

KPoly SimpleExtensionField::parse(const std::string& text) const { return parse_expression(text, field_ops(*this)); }

}  // namespace drinfeld
