#include "drinfeld/ff_poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace drinfeld {

namespace {

using Elem = GaloisField::Elem;

FPoly frob_step(const FPoly& h, const FPoly& f) { return powmod(h, h.ctx().size(), f); }

// p-th root of a polynomial whose derivative vanishes.
FPoly pth_root(const FPoly& f) {
    const GaloisField& F = f.ctx();
    const unsigned p = F.characteristic();
    // a -> a^(Q/p) inverts the absolute Frobenius on F_Q
    const std::uint64_t root_exp = F.size() / p;
    std::vector<Elem> out;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(F.pow(f.coeffs()[i], root_exp));
    return FPoly(f.field(), std::move(out));
}

void squarefree(const FPoly& f, int mult, std::vector<std::pair<FPoly, int>>& out) {
    if (f.degree() < 1) return;
    const FPoly df = f.derivative();
    FPoly c = gcd(f, df);
    FPoly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        FPoly y = gcd(w, c);
        FPoly fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) squarefree(pth_root(c.monic()), mult * static_cast<int>(f.ctx().characteristic()), out);
}

std::vector<std::pair<FPoly, int>> distinct_degree(FPoly f) {
    std::vector<std::pair<FPoly, int>> out;
    const FPoly x = FPoly::x(f.field());
    FPoly h = x % f;
    int i = 1;
    while (f.degree() >= 2 * i) {
        h = frob_step(h, f);
        FPoly g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
        ++i;
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
    return out;
}

FPoly random_poly(const FPoly& g, std::mt19937_64& rng) {
    const GaloisField& F = g.ctx();
    std::uniform_int_distribution<std::uint64_t> dist(0, F.size() - 1);
    std::vector<Elem> c(static_cast<std::size_t>(g.degree()));
    for (auto& x : c) x = dist(rng);
    return FPoly(g.field(), std::move(c));
}

void equal_degree(const FPoly& g, int d, std::mt19937_64& rng, std::vector<FPoly>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const GaloisField& F = g.ctx();
    while (true) {
        FPoly a = random_poly(g, rng);
        if (a.degree() < 1) continue;
        FPoly b(g.field());
        if (F.characteristic() == 2) {
            // trace map to F_2 over F_{Q^d}
            const unsigned terms = F.degree() * static_cast<unsigned>(d);
            FPoly t = a % g;
            b = t;
            for (unsigned i = 1; i < terms; ++i) {
                t = (t * t) % g;
                b += t;
            }
        } else {
            std::uint64_t qd = 1;
            for (int i = 0; i < d; ++i) qd *= F.size();
            b = powmod(a, (qd - 1) / 2, g) - FPoly::one(g.field());
        }
        FPoly h = gcd(g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree(g / h, d, rng, out);
            return;
        }
    }
}

}  // namespace

FPoly frobenius_power_mod(const FPoly& f, unsigned i) {
    FPoly h = FPoly::x(f.field()) % f;
    for (unsigned k = 0; k < i; ++k) h = frob_step(h, f);
    return h;
}

bool is_irreducible(const FPoly& f) {
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const FPoly x = FPoly::x(f.field());
    const FPoly g = f.monic();
    // X^(Q^(n/r)) for each prime r | n, then X^(Q^n)
    std::vector<FPoly> powers{x % g};
    for (int i = 1; i <= n; ++i) powers.push_back(frob_step(powers.back(), g));
    if (powers[static_cast<std::size_t>(n)] != x % g) return false;
    for (auto r : prime_factors(static_cast<std::uint64_t>(n))) {
        if (gcd(g, powers[static_cast<std::size_t>(n) / r] - x).degree() != 0) return false;
    }
    return true;
}

std::vector<Elem> roots(const FPoly& f) {
    if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
    std::vector<Elem> out;
    if (f.degree() < 1) return out;
    const FPoly x = FPoly::x(f.field());
    const FPoly g = gcd(f, frob_step(x % f, f) - x);
    if (g.degree() < 1) return out;
    std::mt19937_64 rng(0x5eed1234ULL);
    std::vector<FPoly> lin;
    equal_degree(g, 1, rng, lin);
    for (const auto& l : lin) out.push_back(g.ctx().neg(l.coeff(0)));
    std::sort(out.begin(), out.end());
    return out;
}

bool poly_less(const FPoly& a, const FPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const auto ai = a.coeff(static_cast<std::size_t>(i));
        const auto bi = b.coeff(static_cast<std::size_t>(i));
        if (ai != bi) return ai < bi;
    }
    return false;
}

std::vector<std::pair<FPoly, int>> factor(const FPoly& f) {
    if (f.is_zero()) throw std::domain_error("factorisation of the zero polynomial");
    std::vector<std::pair<FPoly, int>> sqf;
    squarefree(f.monic(), 1, sqf);
    std::vector<std::pair<FPoly, int>> out;
    std::mt19937_64 rng(0xfac7012eULL);
    for (const auto& [part, mult] : sqf) {
        for (const auto& [g, d] : distinct_degree(part)) {
            std::vector<FPoly> pieces;
            equal_degree(g, d, rng, pieces);
            for (auto& p : pieces) out.emplace_back(std::move(p), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    // merge equal factors arising from different square-free layers
    std::vector<std::pair<FPoly, int>> merged;
    for (auto& e : out) {
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(std::move(e));
    }
    return merged;
}

}  // namespace drinfeld
