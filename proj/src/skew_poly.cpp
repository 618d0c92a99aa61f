#include "drinfeld/skew_poly.hpp"

#include "drinfeld/linalg.hpp"

namespace drinfeld {

SkewL map_coefficients(const SkewL& u, const FiniteAField::Extension& ext) {
    std::vector<FiniteAField::Elem> c;
    for (auto x : u.coeffs()) c.push_back(ext.embedding(x));
    return SkewL(ext.field, std::move(c));
}

std::vector<FiniteAField::Elem> kernel_in_field(const SkewL& u) {
    const FiniteAField& L = u.ctx();
    const GaloisField& fq = *L.fq();
    const unsigned m = L.degree_over_fq();
    DenseMatrix<GaloisField> mat(m, std::vector<GaloisField::Elem>(m, 0));
    std::vector<GaloisField::Elem> unit(m, 0);
    for (unsigned j = 0; j < m; ++j) {
        unit.assign(m, 0);
        unit[j] = 1;
        const auto img = L.fq_coords(u.eval(L.from_fq_coords(unit)));
        for (unsigned r = 0; r < m; ++r) mat[r][j] = img[r];
    }
    std::vector<FiniteAField::Elem> out;
    for (const auto& v : nullspace(fq, std::move(mat), m)) out.push_back(L.from_fq_coords(v));
    return out;
}

KernelRoots kernel_roots(const SkewL& u) {
    if (u.is_zero()) throw std::domain_error("kernel of the zero twisted polynomial");
    if (u.ctx().is_zero(u.coeff(0)))
        throw std::domain_error("inseparable twisted polynomial: constant coefficient c_0 = 0");
    const auto m = static_cast<std::size_t>(u.degree());
    for (unsigned d = 1;; ++d) {
        FiniteAField::Extension ext;
        try {
            ext = u.ctx().extension(d);
        } catch (const std::domain_error& e) {
            throw BudgetExceeded(std::string("roots are not in any representable extension: ") + e.what());
        }
        auto basis = kernel_in_field(map_coefficients(u, ext));
        if (basis.size() == m) return KernelRoots{d, std::move(ext), std::move(basis)};
    }
}

}  // namespace drinfeld
