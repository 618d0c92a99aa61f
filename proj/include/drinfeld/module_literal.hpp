#ifndef DRINFELD_MODULE_LITERAL_HPP
#define DRINFELD_MODULE_LITERAL_HPP

#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "drinfeld_module.hpp"

namespace drinfeld {

/// Twisted polynomial over a coefficient field; over a finite A-field the
/// image of T may be written T or t.
template <CoeffField F>
SkewPoly<F> parse_twisted(const std::shared_ptr<const F>& field, const std::string& text) {
    using S = SkewPoly<F>;
    ExprOps<S> ops;
    ops.integer = [&](long long v) { return S::constant(field, field->from_int(v)); };
    ops.atom = [&](const std::string& id) {
        if (id == "tau") return S::tau(field);
        if constexpr (std::is_same_v<F, FiniteAField>)
            if (id == "T") return S::constant(field, field->t());
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

/// "A/(P)" with P irreducible.
FiniteAFieldPtr parse_residue_field(const FieldPtr& fq, const std::string& text, const DeskLimits& limits = {});

/// A module read from text, over K = F_q(T) ("L=generic") or over a finite
/// A-field L = A/(P) ("L=A/(P)").
struct ModuleLiteral {
    FieldPtr fq;
    std::variant<ModuleK, ModuleL> module;

    int rank() const;
    bool is_finite() const { return module.index() == 1; }
};

/// "rank=2; q=3; L=generic; phiT = T + g1*tau + g2*tau^2". Over A/(P) the
/// image of T may be written T or t. The constant term must be the image of
/// T and the τ-degree must equal the declared rank.
ModuleLiteral parse_module(std::string_view text, const DeskLimits& limits = {});

std::string to_string(const ModuleLiteral& m);
/// Literal of a module over L = A/(P); throws for proper extensions of A/(P).
std::string module_literal(const ModuleL& phi);

}  // namespace drinfeld

#endif  // DRINFELD_MODULE_LITERAL_HPP
