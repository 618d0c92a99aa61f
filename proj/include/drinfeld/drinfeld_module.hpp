#ifndef DRINFELD_DRINFELD_MODULE_HPP
#define DRINFELD_DRINFELD_MODULE_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "budget.hpp"
#include "linalg.hpp"
#include "skew_poly.hpp"

namespace drinfeld {

/// Drinfeld module of rank r over a coefficient field:
/// φ_X = γ(X) + g_1 τ + ... + g_r τ^r for the generator X of the base
/// polynomial ring. By default X = T and γ(X) = t.
template <CoeffField F>
class DrinfeldModule {
  public:
    using Elem = typename F::Elem;
    using S = SkewPoly<F>;
    using FieldHandle = std::shared_ptr<const F>;

    /// φ_T = t + Σ g_i τ^i with g = (g_1, ..., g_r).
    DrinfeldModule(FieldHandle field, std::vector<Elem> g) : DrinfeldModule(field, field->t(), std::move(g)) {}

    /// Module over a polynomial ring whose generator acts with constant
    /// term `structure`.
    DrinfeldModule(FieldHandle field, Elem structure, std::vector<Elem> g) {
        std::vector<Elem> c{structure};
        for (auto& x : g) c.push_back(std::move(x));
        phi_gen_ = S(std::move(field), std::move(c));
        validate();
    }

    /// From the twisted polynomial of the generator.
    explicit DrinfeldModule(S phi_gen) : phi_gen_(std::move(phi_gen)) { validate(); }

    const FieldHandle& field() const { return phi_gen_.field(); }
    const F& ctx() const { return phi_gen_.ctx(); }
    int rank() const { return phi_gen_.degree(); }
    /// φ of the generator (φ_T for modules over A).
    const S& phi_T() const { return phi_gen_; }
    Elem structure() const { return phi_gen_.coeff(0); }
    /// g_i for 1 <= i <= r.
    Elem g(int i) const { return phi_gen_.coeff(static_cast<std::size_t>(i)); }

    /// φ_a by Horner's rule in φ_T. The zero polynomial maps to the zero
    /// twisted polynomial.
    S phi_a(const PolyA& a) const {
        const F& f = ctx();
        S r(field());
        for (std::size_t i = a.coeffs().size(); i-- > 0;)
            r = r * phi_gen_ + S::constant(field(), f.from_fq(a.coeffs()[i]));
        return r;
    }

    friend bool operator==(const DrinfeldModule& a, const DrinfeldModule& b) { return a.phi_gen_ == b.phi_gen_; }

  private:
    void validate() const {
        if (phi_gen_.degree() < 1) throw std::domain_error("a Drinfeld module needs rank at least 1");
    }

    S phi_gen_;
};

/// j = g_1^(q+1) / g_2 for rank 2.
template <CoeffField F>
typename F::Elem j_invariant(const DrinfeldModule<F>& phi) {
    if (phi.rank() != 2) throw std::domain_error("j-invariant needs rank 2, got rank " + std::to_string(phi.rank()));
    const F& f = phi.ctx();
    auto g1 = phi.g(1);
    auto p = f.one();
    for (std::uint64_t i = 0; i <= f.q(); ++i) p = f.mul(p, g1);
    return f.mul(p, f.inv(phi.g(2)));
}

/// Conjugate c^{-1} φ c: g_i -> c^(q^i - 1) g_i.
template <CoeffField F>
DrinfeldModule<F> scale(const DrinfeldModule<F>& phi, const typename F::Elem& c) {
    const F& f = phi.ctx();
    using S = SkewPoly<F>;
    const S cs = S::constant(phi.field(), c);
    const S ci = S::constant(phi.field(), f.inv(c));
    return DrinfeldModule<F>(ci * phi.phi_T() * cs);
}

using ModuleL = DrinfeldModule<FiniteAField>;
using ModuleK = DrinfeldModule<RationalFunctionField>;
using ModuleExt = DrinfeldModule<SimpleExtensionField>;

/// Coefficients mapped into an extension of L.
ModuleL base_change(const ModuleL& phi, const FiniteAField::Extension& ext);

/// Generators of φ[n] ≅ (A/n)^r over the smallest extension containing it.
struct TorsionBasis {
    PolyA n;
    unsigned degree = 1;
    FiniteAField::Extension extension;
    /// φ over L_d.
    std::shared_ptr<const ModuleL> module;
    /// A-module generators, each of exact order n.
    std::vector<FiniteAField::Elem> generators;
    /// F_q-basis of φ[n].
    std::vector<FiniteAField::Elem> fq_basis;
};

TorsionBasis torsion_basis(const ModuleL& phi, const PolyA& n);

/// F_q-basis of the A-span of the given points: φ_{T^i}(λ) for i < deg n
/// suffices when every point is killed by φ_n.
std::vector<FiniteAField::Elem> a_span_basis(const ModuleL& phi, const std::vector<FiniteAField::Elem>& points,
                                             int n_degree);

/// Rank of a set of elements of L as an F_q-vector space.
std::size_t fq_rank(const FiniteAField& L, const std::vector<FiniteAField::Elem>& v);

/// Whether λ is killed by φ_n but not by φ_{n/p} for any prime p | n.
bool has_exact_order(const ModuleL& phi, FiniteAField::Elem lambda, const PolyA& n);

/// φ_T = φ'_{g(y)} for φ' a module over A' = F_q[y] (generator y) and the
/// embedding T -> g(y). Both live over K' = K[y]/(g(y) - T).
ModuleExt restrict_scalars(const ModuleExt& phi_prime, const PolyA& g);

/// Carlitz module φ'_y = y + τ over K' = K[y]/(g(y) - T).
ModuleExt carlitz_over_extension(const std::shared_ptr<const SimpleExtensionField>& field);

/// Minimal polynomial over K of an element of K' (monic, coefficients in K).
std::vector<RatFunc> min_poly_over_k(const SimpleExtensionField& field, const KPoly& a);

/// Checks Σ φ_{b_i} (φ'_a)^i = 0 where f(X) = Σ b_i X^i is the minimal
/// polynomial of a over K and φ is the restriction of φ' along T -> g(y).
bool verify_min_poly_identity(const ModuleExt& phi_prime, const PolyA& g, const PolyA& a);

}  // namespace drinfeld

#endif  // DRINFELD_DRINFELD_MODULE_HPP
