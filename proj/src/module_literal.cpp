#include "drinfeld/module_literal.hpp"

#include <stdexcept>

#include "drinfeld/literal_text.hpp"

namespace drinfeld {

namespace {

template <CoeffField F>
DrinfeldModule<F> checked_module(SkewPoly<F> phi, int rank) {
    if (phi.degree() != rank)
        throw std::domain_error("phiT has tau-degree " + std::to_string(phi.degree()) + " but rank=" +
                                std::to_string(rank));
    if (!phi.ctx().equal(phi.coeff(0), phi.ctx().t()))
        throw std::domain_error("the constant term of phiT must be the image of T");
    return DrinfeldModule<F>(std::move(phi));
}

}  // namespace

FiniteAFieldPtr parse_residue_field(const FieldPtr& fq, const std::string& text, const DeskLimits& limits) {
    const std::string l = trim(text);
    if (l.size() < 5 || l.rfind("A/(", 0) != 0 || l.back() != ')')
        throw std::invalid_argument("L must be \"generic\" or \"A/(P)\" with P irreducible");
    const PolyA p = parse_poly(fq, l.substr(3, l.size() - 4), "T", limits);
    if (p.degree() < 1 || !is_irreducible(p)) throw std::domain_error("L = A/(P) needs P irreducible");
    return FiniteAField::residue(fq, p.monic());
}

int ModuleLiteral::rank() const {
    return std::visit([](const auto& m) { return m.rank(); }, module);
}

ModuleLiteral parse_module(std::string_view text, const DeskLimits& limits) {
    const auto parts = split(text, ';');
    if (parts.size() != 4)
        throw std::invalid_argument("module literal must look like \"rank=2; q=3; L=generic; phiT = ...\"");
    const std::string rank_text = rhs_of(parts[0], "rank");
    std::size_t used = 0;
    int rank = 0;
    try {
        rank = std::stoi(rank_text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != rank_text.size()) throw std::invalid_argument("rank must be an integer");
    if (rank < 1) throw std::domain_error("rank must be ≥ 1");
    const FieldPtr fq = parse_field(rhs_of(parts[1], "q"), limits);
    const std::string l = rhs_of(parts[2], "L");
    const std::string phi = rhs_of(parts[3], "phiT");
    if (l == "generic") {
        auto K = RationalFunctionField::make(fq);
        return ModuleLiteral{fq, checked_module(parse_twisted(K, phi), rank)};
    }
    auto L = parse_residue_field(fq, l, limits);
    return ModuleLiteral{fq, checked_module(parse_twisted(L, phi), rank)};
}

std::string module_literal(const ModuleL& phi) {
    const FiniteAField& L = phi.ctx();
    if (!L.prints_in_t() || L.degree_over_fq() != static_cast<unsigned>(L.characteristic().degree()))
        throw std::domain_error("module literals describe modules over A/(P) only");
    return "rank=" + std::to_string(phi.rank()) + "; q=" + std::to_string(L.q()) + "; L=A/(" +
           to_string(L.characteristic()) + "); phiT = " + to_string(phi.phi_T());
}

std::string to_string(const ModuleLiteral& m) {
    if (const auto* phi = std::get_if<ModuleL>(&m.module)) return module_literal(*phi);
    const auto& phi = std::get<ModuleK>(m.module);
    return "rank=" + std::to_string(phi.rank()) + "; q=" + std::to_string(m.fq->size()) +
           "; L=generic; phiT = " + to_string(phi.phi_T());
}

}  // namespace drinfeld
