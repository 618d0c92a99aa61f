#include "drinfeld/isogeny_hecke.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace drinfeld {

using Elem = FiniteAField::Elem;

SkewL kernel_polynomial_from_basis(const std::shared_ptr<const FiniteAField>& L, const std::vector<Elem>& basis) {
    const FiniteAField& f = *L;
    SkewL u = SkewL::one(L);
    for (auto v : basis) {
        const Elem w = u.eval(v);
        if (w == 0) throw std::domain_error("kernel generators are F_q-linearly dependent");
        const Elem c = f.pow(w, f.q() - 1);
        u = SkewL(L, {f.neg(c), f.one()}) * u;
    }
    return u;
}

SkewL kernel_polynomial(const std::shared_ptr<const FiniteAField>& L, const std::vector<Elem>& points) {
    std::vector<Elem> h = points;
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    if (h.empty() || h.front() != 0) throw std::domain_error("kernel set must contain 0");
    std::vector<Elem> basis;
    for (auto x : h) {
        basis.push_back(x);
        if (fq_rank(*L, basis) < basis.size()) basis.pop_back();
    }
    if (BigInt(h.size()) != big_pow(BigInt(L->q()), basis.size()))
        throw std::domain_error("kernel set is not closed under F_q-linear combinations");
    return kernel_polynomial_from_basis(L, basis);
}

FiniteAModule kernel_module(const ModuleL& phi, const std::vector<Elem>& basis) {
    const FiniteAField& L = phi.ctx();
    const GaloisField& fq = *L.fq();
    const std::size_t k = basis.size();
    if (k == 0) return FiniteAModule(L.fq(), {});
    const std::size_t dim = L.degree_over_fq();
    DenseMatrix<GaloisField> m(dim, std::vector<GaloisField::Elem>(k, 0));
    for (std::size_t j = 0; j < k; ++j) {
        const auto c = L.fq_coords(basis[j]);
        for (std::size_t i = 0; i < dim; ++i) m[i][j] = c[i];
    }
    MatA rel(L.fq(), k, k);
    for (std::size_t j = 0; j < k; ++j) {
        const auto col = solve(fq, m, L.fq_coords(phi.phi_T().eval(basis[j])));
        if (!col) throw std::domain_error("subspace is not stable under phi_T");
        for (std::size_t i = 0; i < k; ++i) rel.at(j, i) = PolyA::constant(L.fq(), fq.neg((*col)[i]));
        rel.at(j, j) += PolyA::x(L.fq());
    }
    return FiniteAModule::from_relations(rel);
}

Isogeny codomain(const ModuleL& phi, const SkewL& u) {
    ModuleL psi = codomain_module(phi, u);
    if (u.degree() == 0) return Isogeny{phi, psi, u, FiniteAModule(phi.ctx().fq(), {})};
    const KernelRoots kr = kernel_roots(u);
    const FiniteAModule ker = kernel_module(base_change(phi, kr.extension), kr.basis);
    return Isogeny{phi, std::move(psi), u, ker};
}

namespace {

void require_rank(int r) {
    if (r < 1) throw std::domain_error("rank must be ≥ 1");
}

struct ResidueTable {
    std::vector<PolyA> residues;
    std::vector<std::uint32_t> masks;
    std::vector<std::size_t> units;
};

ResidueTable residue_table(const IdealA& n) {
    ResidueTable t;
    const auto count = static_cast<std::uint64_t>(ideal_norm(n));
    std::vector<PolyA> primes;
    if (n.degree() > 0)
        for (const auto& [p, m] : factor(n.generator())) {
            (void)m;
            primes.push_back(p);
        }
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        PolyA x = poly_from_index(n.field(), idx, n.degree());
        std::uint32_t mask = 0;
        for (std::size_t k = 0; k < primes.size(); ++k)
            if ((x % primes[k]).is_zero()) mask |= 1U << k;
        if (mask == 0) t.units.push_back(static_cast<std::size_t>(idx));
        t.residues.push_back(std::move(x));
        t.masks.push_back(mask);
    }
    return t;
}

struct CyclicIsogenies {
    FiniteAField::Extension extension;
    std::vector<Isogeny> isogenies;
};

CyclicIsogenies cyclic_isogenies_impl(const ModuleL& phi, const IdealA& n) {
    if (n.is_zero()) throw std::domain_error("cyclic isogenies for the zero ideal");
    const TorsionBasis tb = torsion_basis(phi, n.generator());
    const ModuleL& phid = *tb.module;
    const auto& Ld = tb.extension.field;
    CyclicIsogenies out{tb.extension, {}};
    for (const auto& tuple : cyclic_generator_classes(n, phi.rank())) {
        Elem lambda = 0;
        for (std::size_t i = 0; i < tuple.size(); ++i)
            lambda = Ld->add(lambda, phid.phi_a(tuple[i]).eval(tb.generators[i]));
        const auto basis = a_span_basis(phid, {lambda}, n.degree());
        const SkewL u = kernel_polynomial_from_basis(Ld, basis);
        out.isogenies.push_back(Isogeny{phid, codomain_module(phid, u), u, kernel_module(phid, basis)});
    }
    return out;
}

}  // namespace

std::vector<std::vector<PolyA>> cyclic_generator_classes(const IdealA& n, int r) {
    require_rank(r);
    if (n.is_zero()) throw std::domain_error("cyclic submodules of a zero ideal quotient");
    const BigInt total = big_pow(ideal_norm(n), static_cast<std::uint64_t>(r));
    check_budget(total, "enumerating (A/n)^r");
    const ResidueTable t = residue_table(n);
    const std::uint64_t count = t.residues.size();
    const auto all = static_cast<std::uint64_t>(total);
    const PolyA& ng = n.generator();

    std::unordered_map<std::uint64_t, std::size_t> index_of;
    for (std::size_t i = 0; i < t.residues.size(); ++i) index_of.emplace(poly_index(t.residues[i]), i);
    std::vector<bool> seen(all, false);
    std::vector<std::vector<PolyA>> out;
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(r), 0);
    for (std::uint64_t idx = 0; idx < all; ++idx) {
        if (idx > 0)
            for (std::size_t k = 0; k < digits.size(); ++k) {
                if (++digits[k] < count) break;
                digits[k] = 0;
            }
        if (seen[idx]) continue;
        std::uint32_t common = ~0U;
        for (auto d : digits) common &= t.masks[d];
        if (common != 0) continue;
        std::vector<PolyA> rep;
        for (auto d : digits) rep.push_back(t.residues[d]);
        for (auto ui : t.units) {
            std::uint64_t j = 0;
            for (std::size_t k = digits.size(); k-- > 0;) {
                const PolyA prod = n.degree() > 0 ? (t.residues[ui] * rep[k]) % ng : rep[k];
                j = j * count + index_of.at(poly_index(prod));
            }
            seen[j] = true;
        }
        out.push_back(std::move(rep));
    }
    return out;
}

BigInt hecke_degree_index(int r, const IdealA& n) { return BigInt(cyclic_generator_classes(n, r).size()); }

std::vector<Isogeny> cyclic_isogenies(const ModuleL& phi, const IdealA& n) {
    return cyclic_isogenies_impl(phi, n).isogenies;
}

ModuleL module_with_j(const std::shared_ptr<const FiniteAField>& L, Elem j) {
    if (j == 0) return ModuleL(L, {0, 1});
    return ModuleL(L, {j, L->frobenius(j)});
}

HeckeImage hecke_image_j(const std::shared_ptr<const FiniteAField>& L, Elem j, const IdealA& p) {
    auto res = cyclic_isogenies_impl(module_with_j(L, j), p);
    HeckeImage out{res.extension, {}};
    for (const auto& iso : res.isogenies) out.values.push_back(j_invariant(iso.target));
    return out;
}

std::optional<PolyA> phi_preimage(const ModuleL& phi, const SkewL& w) {
    const FiniteAField& L = phi.ctx();
    std::vector<GaloisField::Elem> coeffs;
    SkewL rest = w;
    while (!rest.is_zero()) {
        auto [q, r] = right_divmod(rest, phi.phi_T());
        if (r.degree() > 0) return std::nullopt;
        GaloisField::Elem c = 0;
        if (!L.fq_embedding().preimage(r.coeff(0), c)) return std::nullopt;
        coeffs.push_back(c);
        rest = std::move(q);
    }
    return PolyA(L.fq(), std::move(coeffs));
}

FrobeniusCharPoly frobenius_char_poly(const ModuleL& phi) {
    if (phi.rank() != 2) throw std::domain_error("Frobenius characteristic polynomial needs rank 2");
    const FiniteAField& L = phi.ctx();
    const unsigned n = L.degree_over_fq();
    const PolyA P = L.characteristic();
    const PolyA Pm = pow(P, n / static_cast<unsigned>(P.degree()));
    const SkewL pi = SkewL::tau_power(phi.field(), n);
    const SkewL pi2 = pi * pi;
    const GaloisField& fq = *L.fq();
    for (GaloisField::Elem c = 1; c < fq.size(); ++c) {
        const PolyA b = Pm.scaled(c);
        auto [quot, rem] = right_divmod(pi2 + phi.phi_a(b), pi);
        if (!rem.is_zero()) continue;
        if (auto a = phi_preimage(phi, quot)) return FrobeniusCharPoly{*a, b, !(*a % P).is_zero()};
    }
    throw std::logic_error("no Frobenius relation found");
}

EndomorphismData endomorphism_data(const ModuleL& phi) {
    const FiniteAField& L = phi.ctx();
    if (L.characteristic().ctx().characteristic() == 2)
        throw std::domain_error("endomorphism conductors are only computed for odd q");
    EndomorphismData out;
    out.frobenius = frobenius_char_poly(phi);
    if (!out.frobenius.ordinary) throw std::domain_error("supersingular module: End is not an order in K(pi)");
    const auto& fq = L.fq();
    const PolyA& a = out.frobenius.trace;
    const PolyA D = a * a - out.frobenius.norm.scaled(fq->from_int(4));
    const PolyA x = a.scaled(fq->inv(fq->from_int(2)));
    const SkewL w = SkewL::tau_power(phi.field(), L.degree_over_fq()) - phi.phi_a(x);
    out.squarefree_part = PolyA::one(fq);
    out.frobenius_conductor = PolyA::one(fq);
    out.conductor = PolyA::one(fq);
    for (const auto& [p, e] : factor(D)) {
        if (e % 2) out.squarefree_part *= p;
        const int k = e / 2;
        if (k == 0) continue;
        out.frobenius_conductor *= pow(p, static_cast<std::uint64_t>(k));
        int j = 0;
        while (j < k && right_divmod(w, phi.phi_a(pow(p, static_cast<std::uint64_t>(j + 1)))).second.is_zero()) ++j;
        out.conductor *= pow(p, static_cast<std::uint64_t>(k - j));
    }
    return out;
}

PolyA min_poly_over_fq(const FiniteAField& L, Elem x) {
    const GaloisField& abs = L.abs();
    FPoly prod = FPoly::one(L.abs_ptr());
    Elem c = x;
    do {
        prod *= FPoly(L.abs_ptr(), {abs.neg(c), 1});
        c = L.frobenius(c);
    } while (c != x);
    std::vector<GaloisField::Elem> coeffs;
    for (auto v : prod.coeffs()) {
        GaloisField::Elem pre = 0;
        if (!L.fq_embedding().preimage(v, pre)) throw std::logic_error("minimal polynomial not defined over F_q");
        coeffs.push_back(pre);
    }
    return PolyA(L.fq(), std::move(coeffs));
}

std::optional<std::size_t> HeckeGraph::out_degree() const {
    std::vector<std::size_t> deg(vertices.size(), 0);
    for (const auto& e : edges) ++deg[e.src];
    if (deg.empty()) return std::nullopt;
    for (auto d : deg)
        if (d != deg.front()) return std::nullopt;
    return deg.front();
}

std::size_t HeckeGraph::stub_count() const {
    return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [](const Edge& e) { return !e.dst; }));
}

HeckeGraph isogeny_graph(const std::shared_ptr<const FiniteAField>& L, const IdealA& p, unsigned tower_degree) {
    if (!is_irreducible(p.generator())) throw std::domain_error("Hecke graph needs a prime ideal p");
    if (gcd(p.generator(), L->characteristic()).degree() > 0)
        throw std::domain_error("p must be coprime to the characteristic of L");
    HeckeGraph g;
    g.prime = p.generator();
    g.field = tower_degree == 1 ? L : L->extension(tower_degree).field;
    const FiniteAField& F = *g.field;
    const BigInt size = big_pow(BigInt(F.q()), F.degree_over_fq());
    check_budget(size, "vertices of the Hecke graph");
    const auto count = static_cast<std::uint64_t>(size);
    std::unordered_map<Elem, std::size_t> index_of;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<GaloisField::Elem> c(F.degree_over_fq());
        std::uint64_t v = idx;
        for (auto& x : c) {
            x = v % F.q();
            v /= F.q();
        }
        const Elem j = F.from_fq_coords(c);
        index_of.emplace(j, g.vertices.size());
        g.vertices.push_back(j);
        g.labels.push_back(F.to_string(j));
    }

    std::vector<std::vector<HeckeGraph::Edge>> per_vertex(g.vertices.size());
    std::vector<std::exception_ptr> errors(g.vertices.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (std::size_t i = next++; i < g.vertices.size() && !failed; i = next++) {
            try {
                const auto res = cyclic_isogenies_impl(module_with_j(g.field, g.vertices[i]), p);
                for (const auto& iso : res.isogenies) {
                    HeckeGraph::Edge e;
                    e.src = i;
                    e.kernel = to_string(iso.kernel);
                    const Elem jv = j_invariant(iso.target);
                    GaloisField::Elem pre = 0;
                    if (res.extension.embedding.preimage(jv, pre)) {
                        e.dst = index_of.at(pre);
                        e.dst_label = g.labels[*e.dst];
                    } else {
                        e.dst_label = "stub[" + to_string(min_poly_over_fq(*res.extension.field, jv), "X") + "]";
                    }
                    per_vertex[i].push_back(std::move(e));
                }
            } catch (...) {
                errors[i] = std::current_exception();
                failed = true;
            }
        }
    };
    const unsigned workers = std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (auto& list : per_vertex) {
        std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) { return a.dst_label < b.dst_label; });
        for (auto& e : list) g.edges.push_back(std::move(e));
    }
    return g;
}

std::vector<std::size_t> component_sizes(const HeckeGraph& g, const std::vector<bool>& keep) {
    std::vector<std::size_t> parent(g.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges)
        if (e.dst && keep[e.src] && keep[*e.dst]) parent[find(e.src)] = find(*e.dst);
    std::vector<std::size_t> size(g.vertices.size(), 0);
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (keep[v]) ++size[find(v)];
    std::vector<std::size_t> out;
    for (auto s : size)
        if (s > 0) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<bool> crater_vertices(const HeckeGraph& g) {
    std::vector<bool> keep(g.vertices.size(), false);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (g.vertices[v] == 0) continue;
        const ModuleL phi = module_with_j(g.field, g.vertices[v]);
        if (!frobenius_char_poly(phi).ordinary) continue;
        keep[v] = !(endomorphism_data(phi).conductor % g.prime).is_zero();
    }
    return keep;
}

std::vector<std::size_t> crater_cycles(const HeckeGraph& g) { return component_sizes(g, crater_vertices(g)); }

bool has_maximal_cm_by(const ModuleL& phi, const PolyA& f) {
    const FrobeniusCharPoly fr = frobenius_char_poly(phi);
    if (!fr.ordinary) return false;
    const auto& fq = phi.ctx().fq();
    const PolyA D = fr.trace * fr.trace - fr.norm.scaled(fq->from_int(4));
    const auto [quo, rem] = divmod(D, f);
    if (!rem.is_zero() || !is_square(*fq, quo.leading())) return false;
    for (const auto& [p, e] : factor(quo))
        if (e % 2) return false;
    return endomorphism_data(phi).conductor.is_one();
}

std::vector<bool> maximal_cm_vertices(const HeckeGraph& g, const PolyA& f) {
    std::vector<bool> keep(g.vertices.size(), false);
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (g.vertices[v] != 0) keep[v] = has_maximal_cm_by(module_with_j(g.field, g.vertices[v]), f);
    return keep;
}

std::string dump(const HeckeGraph& g) {
    auto squash = [](std::string s) {
        s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
        return s;
    };
    std::string out;
    for (const auto& l : g.labels) out += "vertex " + l + "\n";
    for (const auto& e : g.edges) out += "edge " + g.labels[e.src] + " " + e.dst_label + " " + squash(e.kernel) + "\n";
    return out;
}

BigInt degree_bound(const IdealA& n, int r, const BigInt& deg_m, const std::vector<BigInt>& w) {
    require_rank(r);
    if (w.empty()) throw std::domain_error("degree bound needs at least one weight w(J_i)");
    if (deg_m <= 0) throw std::domain_error("Deg(M) must be positive");
    const BigInt N = ideal_norm(n);
    const BigInt psi = psi_r(n, r);
    BigInt out = deg_m * deg_m;
    for (const auto& wi : w) {
        if (wi <= 0) throw std::domain_error("weights must be positive");
        out *= big_pow(N, static_cast<std::uint64_t>(r - 1)) * psi * psi * wi;
    }
    return out;
}

}  // namespace drinfeld
