#ifndef DRINFELD_ISOGENY_HECKE_HPP
#define DRINFELD_ISOGENY_HECKE_HPP

#include <optional>
#include <string>
#include <vector>

#include "drinfeld_module.hpp"
#include "finite_module.hpp"

namespace drinfeld {

/// u : φ -> ψ with u φ_T = ψ_T u.
struct Isogeny {
    ModuleL source;
    ModuleL target;
    SkewL u;
    FiniteAModule kernel;
};

/// Monic u whose roots are the F_q-span of `basis`, built as a product of
/// factors τ - w^(q-1). Throws if the basis is linearly dependent.
SkewL kernel_polynomial_from_basis(const std::shared_ptr<const FiniteAField>& L,
                                   const std::vector<FiniteAField::Elem>& basis);

/// Same, for an explicit finite set H that must be an F_q-subspace.
SkewL kernel_polynomial(const std::shared_ptr<const FiniteAField>& L, const std::vector<FiniteAField::Elem>& points);

/// ψ with u φ_T = ψ_T u, by right division. Throws "kernel not A-stable"
/// when the remainder is nonzero.
template <CoeffField F>
DrinfeldModule<F> codomain_module(const DrinfeldModule<F>& phi, const SkewPoly<F>& u) {
    if (u.is_zero()) throw std::domain_error("the zero map is not an isogeny");
    auto [psi_T, rem] = right_divmod(u * phi.phi_T(), u);
    if (!rem.is_zero()) throw std::domain_error("kernel not A-stable: u phi_T is not right-divisible by u");
    return DrinfeldModule<F>(std::move(psi_T));
}

/// A-module structure of a φ-stable F_q-subspace with the given basis:
/// invariant factors of T - M, M the matrix of φ_T on the subspace.
FiniteAModule kernel_module(const ModuleL& phi, const std::vector<FiniteAField::Elem>& basis);

/// Isogeny with kernel computed from the roots of u (over a splitting
/// extension of L when needed).
Isogeny codomain(const ModuleL& phi, const SkewL& u);

/// One tuple (a_1, ..., a_r) in (A/n)^r per cyclic submodule ≅ A/n, found as
/// orbit representatives of exact-order tuples under (A/n)^×.
std::vector<std::vector<PolyA>> cyclic_generator_classes(const IdealA& n, int r);

/// [GL_r(A/n) : image of K_0(n)] by orbit enumeration.
BigInt hecke_degree_index(int r, const IdealA& n);

/// One isogeny per cyclic submodule of φ[n] isomorphic to A/n, all defined
/// over the field of definition of φ[n].
std::vector<Isogeny> cyclic_isogenies(const ModuleL& phi, const IdealA& n);

/// Rank-2 module with invariant j: g_1 = j, g_2 = j^q, or t + τ^2 for j = 0.
ModuleL module_with_j(const std::shared_ptr<const FiniteAField>& L, FiniteAField::Elem j);

struct HeckeImage {
    FiniteAField::Extension extension;  // L -> field holding the values
    std::vector<FiniteAField::Elem> values;
};

/// j-invariants of the targets of all cyclic p-isogenies from a module with
/// invariant j.
HeckeImage hecke_image_j(const std::shared_ptr<const FiniteAField>& L, FiniteAField::Elem j, const IdealA& p);

/// Frobenius π = τ^n of a rank-2 module over L = F_(q^n):
/// π^2 - φ_a π + φ_b = 0.
struct FrobeniusCharPoly {
    PolyA trace;
    PolyA norm;
    bool ordinary = false;
};

FrobeniusCharPoly frobenius_char_poly(const ModuleL& phi);

/// a with φ_a = w, if any.
std::optional<PolyA> phi_preimage(const ModuleL& phi, const SkewL& w);

/// Conductor of End(φ) inside the maximal order of K(π), for ordinary
/// rank-2 modules with q odd.
struct EndomorphismData {
    FrobeniusCharPoly frobenius;
    /// a^2 - 4b = unit · z^2 · d with d squarefree.
    PolyA squarefree_part;
    PolyA frobenius_conductor;
    PolyA conductor;
};

EndomorphismData endomorphism_data(const ModuleL& phi);

/// Hecke graph of rank 2 on the j-invariants of L_B, B = tower_degree.
struct HeckeGraph {
    struct Edge {
        std::size_t src = 0;
        /// index into vertices, or nullopt for a boundary stub
        std::optional<std::size_t> dst;
        std::string dst_label;
        std::string kernel;
    };
    PolyA prime;
    std::shared_ptr<const FiniteAField> field;
    std::vector<FiniteAField::Elem> vertices;
    std::vector<std::string> labels;
    std::vector<Edge> edges;

    /// Common out-degree, or nullopt if the graph is not regular.
    std::optional<std::size_t> out_degree() const;
    std::size_t stub_count() const;
};

HeckeGraph isogeny_graph(const std::shared_ptr<const FiniteAField>& L, const IdealA& p, unsigned tower_degree = 1);

/// Sizes of the connected components among the given vertices, using edges
/// in either direction (sorted).
std::vector<std::size_t> component_sizes(const HeckeGraph& g, const std::vector<bool>& keep);

/// Crater vertices: j ≠ 0, ordinary, and End(φ) maximal at p. Needs q odd.
std::vector<bool> crater_vertices(const HeckeGraph& g);

/// Crater cycle lengths: component sizes on the crater vertices.
std::vector<std::size_t> crater_cycles(const HeckeGraph& g);

/// Whether φ is ordinary with End(φ) the maximal order of K(√f):
/// a^2 - 4b = f · (square in A) and conductor 1. Needs q odd.
bool has_maximal_cm_by(const ModuleL& phi, const PolyA& f);

/// Vertices j ≠ 0 whose module has End the maximal order of K(√f).
std::vector<bool> maximal_cm_vertices(const HeckeGraph& g, const PolyA& f);

/// Line-oriented dump: "vertex <label>" and "edge <src> <dst> <kernel>".
std::string dump(const HeckeGraph& g);

/// Deg(M)^2 · ∏_i |n|^(r-1) ψ_r(n)^2 w_i.
BigInt degree_bound(const IdealA& n, int r, const BigInt& deg_m, const std::vector<BigInt>& w);

/// Minimal polynomial over F_q of an element of a finite A-field.
PolyA min_poly_over_fq(const FiniteAField& L, FiniteAField::Elem x);

}  // namespace drinfeld

#endif  // DRINFELD_ISOGENY_HECKE_HPP
