#include "drinfeld/drinfeld_module.hpp"

namespace drinfeld {

using Elem = FiniteAField::Elem;

ModuleL base_change(const ModuleL& phi, const FiniteAField::Extension& ext) {
    return ModuleL(map_coefficients(phi.phi_T(), ext));
}

std::size_t fq_rank(const FiniteAField& L, const std::vector<Elem>& v) {
    DenseMatrix<GaloisField> rows;
    for (auto x : v) rows.push_back(L.fq_coords(x));
    return matrix_rank(*L.fq(), std::move(rows));
}

std::vector<Elem> a_span_basis(const ModuleL& phi, const std::vector<Elem>& points, int n_degree) {
    const FiniteAField& L = phi.ctx();
    DenseMatrix<GaloisField> rows;
    for (auto x : points) {
        for (int i = 0; i < n_degree; ++i) {
            rows.push_back(L.fq_coords(x));
            x = phi.phi_T().eval(x);
        }
    }
    const auto pivots = rref(*L.fq(), rows);
    std::vector<Elem> out;
    for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(L.from_fq_coords(rows[i]));
    return out;
}

bool has_exact_order(const ModuleL& phi, Elem lambda, const PolyA& n) {
    if (phi.phi_a(n).eval(lambda) != 0) return false;
    if (n.degree() < 1) return true;
    for (const auto& [p, mult] : factor(n)) {
        (void)mult;
        if (phi.phi_a(n / p).eval(lambda) == 0) return false;
    }
    return true;
}

TorsionBasis torsion_basis(const ModuleL& phi, const PolyA& n) {
    if (n.is_zero()) throw std::domain_error("torsion of the zero ideal");
    const FiniteAField& L = phi.ctx();
    const PolyA nm = n.monic();
    if (gcd(nm, L.characteristic()).degree() > 0)
        throw std::domain_error("inseparable torsion: n = " + to_string(nm) +
                                " is not coprime to the A-characteristic " + to_string(L.characteristic()));
    const int r = phi.rank();
    const BigInt size = big_pow(BigInt(L.q()), static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(nm.degree()));
    check_budget(size, "the torsion module phi[" + to_string(nm) + "]");

    TorsionBasis out;
    out.n = nm;
    if (nm.degree() == 0) {
        out.extension = L.extension(1);
        out.module = std::make_shared<const ModuleL>(base_change(phi, out.extension));
        return out;
    }
    KernelRoots kr = kernel_roots(phi.phi_a(nm));
    out.degree = kr.degree;
    out.extension = kr.extension;
    out.fq_basis = kr.basis;
    out.module = std::make_shared<const ModuleL>(base_change(phi, kr.extension));
    const ModuleL& phid = *out.module;
    const FiniteAField& Ld = phid.ctx();
    const int dn = nm.degree();
    const std::size_t dim = out.fq_basis.size();
    const std::uint64_t total = static_cast<std::uint64_t>(size);

    // greedy: each new generator must enlarge the span by a free copy of A/n
    std::vector<Elem> gens;
    for (std::uint64_t idx = 1; idx < total && static_cast<int>(gens.size()) < r; ++idx) {
        std::uint64_t c = idx;
        Elem lambda = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            const auto coef = Ld.from_fq(c % L.q());
            c /= L.q();
            if (coef) lambda = Ld.add(lambda, Ld.mul(coef, out.fq_basis[i]));
        }
        std::vector<Elem> trial = gens;
        trial.push_back(lambda);
        if (a_span_basis(phid, trial, dn).size() == trial.size() * static_cast<std::size_t>(dn)) gens = std::move(trial);
    }
    if (static_cast<int>(gens.size()) != r) throw std::logic_error("torsion module is not free over A/n");
    out.generators = std::move(gens);
    return out;
}

ModuleExt carlitz_over_extension(const std::shared_ptr<const SimpleExtensionField>& field) {
    return ModuleExt(field, field->y(), {field->one()});
}

ModuleExt restrict_scalars(const ModuleExt& phi_prime, const PolyA& g) {
    const SimpleExtensionField& f = phi_prime.ctx();
    const auto expected = SimpleExtensionField::over_polynomial(f.fq(), g);
    if (!(expected->modulus() == f.modulus()))
        throw std::domain_error("incompatible structure maps: the coefficient field is not K[y]/(g(y) - T)");
    if (!f.equal(phi_prime.structure(), f.y()))
        throw std::domain_error("incompatible structure maps: phi'_y must have constant term y");
    return ModuleExt(phi_prime.phi_a(g));
}

std::vector<RatFunc> min_poly_over_k(const SimpleExtensionField& field, const KPoly& a) {
    const RationalFunctionField& K = field.base();
    const int n = field.degree();
    std::vector<std::vector<RatFunc>> powers;
    KPoly x = field.one();
    powers.push_back(field.coords(x));
    for (int k = 1; k <= n; ++k) {
        x = field.mul(x, a);
        const auto target = field.coords(x);
        DenseMatrix<RationalFunctionField> m(static_cast<std::size_t>(n), std::vector<RatFunc>(powers.size(), K.zero()));
        for (std::size_t col = 0; col < powers.size(); ++col)
            for (int row = 0; row < n; ++row) m[static_cast<std::size_t>(row)][col] = powers[col][static_cast<std::size_t>(row)];
        if (auto sol = solve(K, m, target)) {
            std::vector<RatFunc> f;
            for (auto& c : *sol) f.push_back(-c);
            f.push_back(K.one());
            return f;
        }
        powers.push_back(target);
    }
    throw std::logic_error("no linear dependence among powers");
}

bool verify_min_poly_identity(const ModuleExt& phi_prime, const PolyA& g, const PolyA& a) {
    const SimpleExtensionField& f = phi_prime.ctx();
    const ModuleExt phi = restrict_scalars(phi_prime, g);
    const auto coeffs = min_poly_over_k(f, f.from_y_poly(a));
    const auto phi_a = phi_prime.phi_a(a);
    using S = SkewPoly<SimpleExtensionField>;
    S sum(phi.field());
    S power = S::one(phi.field());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i].is_polynomial()) throw std::domain_error("minimal polynomial is not defined over A");
        sum += phi.phi_a(coeffs[i].num()) * power;
        if (i + 1 < coeffs.size()) power = power * phi_a;
    }
    return sum.is_zero();
}

}  // namespace drinfeld
