#ifndef DRINFELD_FIELDS_HPP
#define DRINFELD_FIELDS_HPP

#include <concepts>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "base_ring.hpp"
#include "field_concepts.hpp"

namespace drinfeld {

/// A field carrying an A-field structure γ: A -> F and the q-power
/// Frobenius, usable as the coefficient field of twisted polynomials.
template <class F>
concept CoeffField = Field<F> && requires(const F& f, const typename F::Elem& a, const std::string& s) {
    { f.frobenius(a) } -> std::convertible_to<typename F::Elem>;
    { f.q() } -> std::convertible_to<std::uint64_t>;
    { f.t() } -> std::convertible_to<typename F::Elem>;
    { f.from_fq(GaloisField::Elem{}) } -> std::convertible_to<typename F::Elem>;
    { f.from_int(0LL) } -> std::convertible_to<typename F::Elem>;
    { f.atom(s) } -> std::convertible_to<typename F::Elem>;
    { f.to_string(a) } -> std::convertible_to<std::string>;
    { f.fq() } -> std::convertible_to<FieldPtr>;
};

/// γ(a) for a ∈ A, by Horner's rule in t = γ(T).
template <CoeffField F>
typename F::Elem gamma(const F& f, const PolyA& a) {
    auto r = f.zero();
    for (std::size_t i = a.coeffs().size(); i-- > 0;) r = f.add(f.mul(r, f.t()), f.from_fq(a.coeffs()[i]));
    return r;
}

/// Finite A-field: a finite extension L of F_q with t = γ(T) ∈ L.
///
/// L is stored as an absolute field F_{p^k}; F_q sits inside it through a
/// fixed embedding. The A-characteristic is the minimal polynomial of t
/// over F_q.
class FiniteAField {
  public:
    using Elem = GaloisField::Elem;

    /// L = A/P with t the least root of P in the absolute field.
    static std::shared_ptr<const FiniteAField> residue(const FieldPtr& fq, const PolyA& prime);
    /// L given as an absolute field containing F_q (canonical embedding).
    static std::shared_ptr<const FiniteAField> make(const FieldPtr& fq, const FieldPtr& absolute, Elem t);

    struct Extension {
        std::shared_ptr<const FiniteAField> field;
        FieldEmbedding embedding;  // this -> field
    };
    /// The degree-d extension L_d with the canonical embedding L -> L_d.
    Extension extension(unsigned d) const;

    const GaloisField& abs() const { return *abs_; }
    const FieldPtr& abs_ptr() const { return abs_; }
    FieldPtr fq() const { return fq_; }
    const FieldEmbedding& fq_embedding() const { return fq_emb_; }
    std::uint64_t q() const { return fq_->size(); }
    std::uint64_t size() const { return abs_->size(); }
    /// [L : F_q].
    unsigned degree_over_fq() const { return abs_->degree() / fq_->degree(); }
    Elem t() const { return t_; }
    /// Minimal polynomial of t over F_q.
    const PolyA& characteristic() const { return char_poly_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const { return abs_->add(a, b); }
    Elem sub(Elem a, Elem b) const { return abs_->sub(a, b); }
    Elem neg(Elem a) const { return abs_->neg(a); }
    Elem mul(Elem a, Elem b) const { return abs_->mul(a, b); }
    Elem inv(Elem a) const { return abs_->inv(a); }
    Elem pow(Elem a, std::uint64_t e) const { return abs_->pow(a, e); }
    bool is_zero(Elem a) const { return a == 0; }
    bool equal(Elem a, Elem b) const { return a == b; }
    Elem frobenius(Elem a) const { return abs_->pow(a, q()); }
    Elem from_fq(GaloisField::Elem c) const { return fq_emb_(c); }
    Elem from_int(long long v) const { return abs_->from_int(v); }

    /// Coordinates over F_q in the basis 1, β, ..., β^(m-1) where β is t if
    /// t generates L over F_q and the absolute generator z otherwise.
    std::vector<GaloisField::Elem> fq_coords(Elem a) const;
    Elem from_fq_coords(const std::vector<GaloisField::Elem>& c) const;
    /// Whether elements print as polynomials in t (otherwise in z over F_p).
    bool prints_in_t() const { return t_generates_; }

    /// Identifiers: t, z (absolute generator), a (generator of F_q).
    Elem atom(const std::string& id) const;
    std::string to_string(Elem a) const;
    Elem parse(const std::string& text) const;

  private:
    FiniteAField(FieldPtr fq, FieldPtr absolute, FieldEmbedding fq_emb, Elem t);

    FieldPtr fq_;
    FieldPtr abs_;
    FieldEmbedding fq_emb_;
    Elem t_ = 0;
    PolyA char_poly_;
    bool t_generates_ = false;
    Elem beta_ = 0;
    // inverse of the F_p-matrix of the basis alpha^i beta^j, rows indexed by i + e*j
    std::vector<std::vector<unsigned>> coord_inverse_;
    mutable std::mutex ext_mu_;
    mutable std::map<unsigned, Extension> ext_cache_;
};

using FiniteAFieldPtr = std::shared_ptr<const FiniteAField>;

/// K = F_q(T) with γ the inclusion.
class RationalFunctionField {
  public:
    using Elem = RatFunc;

    explicit RationalFunctionField(FieldPtr fq, std::string var = "T") : fq_(std::move(fq)), var_(std::move(var)) {}
    static std::shared_ptr<const RationalFunctionField> make(const FieldPtr& fq, std::string var = "T") {
        return std::make_shared<const RationalFunctionField>(fq, std::move(var));
    }

    FieldPtr fq() const { return fq_; }
    std::uint64_t q() const { return fq_->size(); }
    const std::string& variable() const { return var_; }

    Elem zero() const { return RatFunc::zero(fq_); }
    Elem one() const { return RatFunc::one(fq_); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const { return a.inv(); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    /// a^q: coefficients lie in F_q, so T^i -> T^(iq).
    Elem frobenius(const Elem& a) const;
    Elem t() const { return RatFunc(PolyA::x(fq_)); }
    Elem from_fq(GaloisField::Elem c) const { return RatFunc(PolyA::constant(fq_, c)); }
    Elem from_int(long long v) const { return from_fq(fq_->from_int(v)); }
    Elem from_poly(const PolyA& a) const { return RatFunc(a); }

    Elem atom(const std::string& id) const;
    std::string to_string(const Elem& a) const { return drinfeld::to_string(a, var_); }
    Elem parse(const std::string& text) const { return parse_ratfunc(fq_, text, var_, DeskLimits::none()); }

  private:
    FieldPtr fq_;
    std::string var_;
};

using KPoly = Poly<RationalFunctionField>;

/// Simple extension K[y]/(m(y)) of K = F_q(T), with γ the inclusion of K.
/// The modulus must be irreducible over K; inverses fail loudly otherwise.
class SimpleExtensionField {
  public:
    using Elem = KPoly;

    SimpleExtensionField(std::shared_ptr<const RationalFunctionField> base, KPoly modulus, std::string var = "y");
    /// K' = K[y]/(g(y) - T), the fraction field of A' = F_q[y] with T = g(y).
    static std::shared_ptr<const SimpleExtensionField> over_polynomial(const FieldPtr& fq, const PolyA& g,
                                                                       std::string var = "y");

    const RationalFunctionField& base() const { return *base_; }
    const std::shared_ptr<const RationalFunctionField>& base_ptr() const { return base_; }
    const KPoly& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }
    FieldPtr fq() const { return base_->fq(); }
    std::uint64_t q() const { return base_->q(); }

    Elem zero() const { return KPoly(base_); }
    Elem one() const { return KPoly::one(base_); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % modulus_; }
    Elem inv(const Elem& a) const;
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    Elem pow(const Elem& a, std::uint64_t e) const { return powmod(a, e, modulus_); }
    Elem frobenius(const Elem& a) const;
    Elem t() const { return KPoly::constant(base_, base_->t()); }
    Elem y() const { return KPoly::x(base_) % modulus_; }
    Elem from_fq(GaloisField::Elem c) const { return KPoly::constant(base_, base_->from_fq(c)); }
    Elem from_int(long long v) const { return from_fq(fq()->from_int(v)); }
    Elem from_base(const RatFunc& c) const { return KPoly::constant(base_, c); }
    /// Image of a polynomial in y with F_q coefficients.
    Elem from_y_poly(const PolyA& a) const;
    /// Coordinates over K in the basis 1, y, ..., y^(n-1).
    std::vector<RatFunc> coords(const Elem& a) const;

    Elem atom(const std::string& id) const;
    std::string to_string(const Elem& a) const;
    Elem parse(const std::string& text) const;

  private:
    std::shared_ptr<const RationalFunctionField> base_;
    KPoly modulus_;
    std::string var_;
};

}  // namespace drinfeld

#endif  // DRINFELD_FIELDS_HPP
