#include "drinfeld/cm_orders.hpp"

#include <algorithm>
#include <stdexcept>

#include "drinfeld/finite_module.hpp"
#include "drinfeld/literal_text.hpp"

namespace drinfeld {

namespace {

using Elem = GaloisField::Elem;

// Legendre-type character of c in A/p: 1, -1 or 0.
int quadratic_character(const PolyA& c, const PolyA& p) {
    const PolyA r = c % p;
    if (r.is_zero()) return 0;
    const BigInt order = ideal_norm(IdealA(p));
    const auto e = static_cast<std::uint64_t>((order - 1) / 2);
    return powmod(r, e, p).is_one() ? 1 : -1;
}

void require_odd_q(const FieldPtr& fq) {
    if (fq->characteristic() == 2) throw std::domain_error("q must be odd for an imaginary quadratic extension");
}

}  // namespace

ImaginaryQuadExt make_imaginary_quadratic(const PolyA& f) {
    const FieldPtr& fq = f.field();
    require_odd_q(fq);
    if (f.is_zero() || f.degree() % 2 == 0)
        throw std::domain_error("f must have odd degree so that the infinite place ramifies");
    if (gcd(f, f.derivative()).degree() > 0) throw std::domain_error("f must be squarefree");
    return ImaginaryQuadExt{fq, f};
}

ImaginaryQuadExt parse_extension(std::string_view text, const DeskLimits& limits) {
    const auto parts = split(text, ';');
    if (parts.size() != 2) throw std::invalid_argument("extension literal must look like \"q=3; y^2 = f(T)\"");
    const FieldPtr fq = parse_field(parts[0], limits);
    return make_imaginary_quadratic(parse_poly(fq, rhs_of(parts[1], "y^2"), "T", limits));
}

std::string to_string(const ImaginaryQuadExt& e) {
    return "q=" + std::to_string(e.fq->size()) + "; y^2 = " + to_string(e.f);
}

OrderR make_order(const ImaginaryQuadExt& ext, const PolyA& c) {
    if (c.is_zero()) throw std::domain_error("conductor must be nonzero");
    return OrderR{ext, c.monic()};
}

OrderR parse_order(std::string_view text, const DeskLimits& limits) {
    const auto parts = split(text, ';');
    if (parts.size() != 2 && parts.size() != 3)
        throw std::invalid_argument("order literal must look like \"q=3; y^2 = f(T); c = T\"");
    const FieldPtr fq = parse_field(parts[0], limits);
    ImaginaryQuadExt ext = make_imaginary_quadratic(parse_poly(fq, rhs_of(parts[1], "y^2"), "T", limits));
    const PolyA c = parts.size() == 3 ? parse_poly(fq, rhs_of(parts[2], "c"), "T", limits) : PolyA::one(fq);
    return make_order(ext, c);
}

BigInt class_number(const ImaginaryQuadExt& e) {
    const int g = e.genus();
    if (g > 3) throw std::domain_error("class numbers are computed for genus at most 3");
    if (g == 0) return 1;
    const std::uint64_t q = e.fq->size();
    check_budget(big_pow(BigInt(q), static_cast<std::uint64_t>(g)), "point counts over F_(q^g)");
    // power sums s_i = q^i + 1 - #C(F_(q^i))
    std::vector<BigInt> s(static_cast<std::size_t>(g) + 1, 0);
    for (int i = 1; i <= g; ++i) {
        auto big = GaloisField::make(e.fq->characteristic(), e.fq->degree() * static_cast<unsigned>(i));
        const auto emb = FieldEmbedding::canonical(e.fq, big);
        std::vector<Elem> coeffs;
        for (auto c : e.f.coeffs()) coeffs.push_back(emb(c));
        const std::uint64_t Q = big->size();
        BigInt points = 1;  // the ramified point at infinity
        for (Elem x = 0; x < Q; ++x) {
            Elem v = 0;
            for (std::size_t k = coeffs.size(); k-- > 0;) v = big->add(big->mul(v, x), coeffs[k]);
            if (v == 0)
                points += 1;
            else if (big->pow(v, (Q - 1) / 2) == 1)
                points += 2;
        }
        s[static_cast<std::size_t>(i)] = big_pow(BigInt(q), static_cast<std::uint64_t>(i)) + 1 - points;
    }
    // Newton's identities for e_k, then L(u) = Σ (-1)^k e_k u^k
    std::vector<BigInt> el(static_cast<std::size_t>(g) + 1, 0);
    el[0] = 1;
    for (int k = 1; k <= g; ++k) {
        BigInt acc = 0;
        for (int i = 1; i <= k; ++i) {
            const BigInt term = el[static_cast<std::size_t>(k - i)] * s[static_cast<std::size_t>(i)];
            acc += (i % 2 == 1) ? term : BigInt(-term);
        }
        if (acc % k != 0) throw std::logic_error("Newton identity produced a non-integer coefficient");
        el[static_cast<std::size_t>(k)] = acc / k;
    }
    std::vector<BigInt> c(static_cast<std::size_t>(2 * g) + 1, 0);
    for (int k = 0; k <= g; ++k) c[static_cast<std::size_t>(k)] = (k % 2 == 0) ? el[static_cast<std::size_t>(k)] : BigInt(-el[static_cast<std::size_t>(k)]);
    for (int k = 0; k < g; ++k)
        c[static_cast<std::size_t>(2 * g - k)] = big_pow(BigInt(q), static_cast<std::uint64_t>(g - k)) * c[static_cast<std::size_t>(k)];
    BigInt h = 0;
    for (const auto& x : c) h += x;
    return h;
}

BigRat class_number_lower_bound(std::uint64_t q, int g) {
    if (g < 0) throw std::domain_error("genus must be non-negative");
    if (g == 0) return BigRat(1);
    const BigInt Q(q);
    const BigInt qg = big_pow(Q, static_cast<std::uint64_t>(g));
    const BigInt num = (Q - 1) * (qg * qg - 2 * g * qg + 1);
    const BigInt den = 2 * g * (big_pow(Q, static_cast<std::uint64_t>(g) + 1) - 1);
    return BigRat(num, den);
}

std::string to_string(const MumfordDivisor& d) { return "(" + to_string(d.a) + ", " + to_string(d.b) + ")"; }

MumfordDivisor identity_divisor(const ImaginaryQuadExt& e) { return {PolyA::one(e.fq), PolyA(e.fq)}; }

MumfordDivisor reduce(const ImaginaryQuadExt& e, MumfordDivisor d) {
    if (!((d.b * d.b - e.f) % d.a).is_zero()) throw std::domain_error("not a Mumford pair: a does not divide b^2 - f");
    d.a = d.a.monic();
    d.b = d.b % d.a;
    while (d.a.degree() > e.genus()) {
        d.a = ((e.f - d.b * d.b) / d.a).monic();
        d.b = (-d.b) % d.a;
    }
    return d;
}

MumfordDivisor compose(const ImaginaryQuadExt& e, const MumfordDivisor& x, const MumfordDivisor& y) {
    const auto [d0, e1, e2] = xgcd(x.a, y.a);
    const auto [d, c1, c2] = xgcd(d0, x.b + y.b);
    const PolyA s1 = c1 * e1, s2 = c1 * e2, s3 = c2;
    MumfordDivisor out;
    out.a = (x.a * y.a) / (d * d);
    out.b = ((s1 * x.a * y.b + s2 * y.a * x.b + s3 * (x.b * y.b + e.f)) / d) % out.a;
    return reduce(e, out);
}

MumfordDivisor inverse(const ImaginaryQuadExt& e, const MumfordDivisor& x) { return reduce(e, {x.a, -x.b}); }

std::size_t PicGroup::index_of(const MumfordDivisor& d) const {
    const auto it = std::find(elements.begin(), elements.end(), d);
    if (it == elements.end()) throw std::logic_error("divisor " + to_string(d) + " is not in the class group list");
    return static_cast<std::size_t>(it - elements.begin());
}

PicGroup pic_group(const ImaginaryQuadExt& e) {
    const int g = e.genus();
    if (g > 2) throw std::domain_error("class groups are enumerated for genus at most 2");
    const std::uint64_t q = e.fq->size();
    check_budget(big_pow(BigInt(q), 2 * static_cast<std::uint64_t>(g)), "Mumford pairs");
    PicGroup out{e, {}};
    for (int k = 0; k <= g; ++k) {
        const std::uint64_t na = checked_pow(q, k);
        for (std::uint64_t ia = 0; ia < na; ++ia) {
            const PolyA a = monic_from_index(e.fq, ia, k);
            const PolyA fa = e.f % a;
            for (std::uint64_t ib = 0; ib < na; ++ib) {
                const PolyA b = poly_from_index(e.fq, ib, k);
                if (((b * b - fa) % a).is_zero()) out.elements.push_back({a, b});
            }
        }
    }
    return out;
}

BigInt maximal_residue_units(const ImaginaryQuadExt& e, const PolyA& c) {
    const BigInt N = ideal_norm(IdealA(c));
    check_budget(N * N, "residues of A'/cA'");
    const auto n = static_cast<std::uint64_t>(N);
    const int d = c.degree();
    const PolyA f = e.f % c;
    std::vector<PolyA> res;
    for (std::uint64_t i = 0; i < n; ++i) res.push_back(poly_from_index(e.fq, i, d));
    BigInt units = 0;
    for (const auto& u : res)
        for (const auto& v : res)
            if (gcd((u * u - f * v * v) % c, c).is_one() || d == 0) ++units;
    return units;
}

BigInt pic_order_of_order(const OrderR& r) {
    if (r.conductor.degree() > 2) throw std::domain_error("orders are handled for deg c at most 2");
    const BigInt h = class_number(r.ext);
    if (r.conductor.degree() == 0) return h;
    const BigInt big = maximal_residue_units(r.ext, r.conductor);
    const BigInt small = unit_count(IdealA(r.conductor));
    // units of A' and R are both F_q^×
    const BigInt global = 1;
    const BigInt den = small * global;
    if ((h * big) % den != 0) throw std::logic_error("Picard order formula is not integral");
    return h * big / den;
}

namespace {

// A-lattice in R = A[w], w = c y, w^2 = F, in Hermite form with rows
// (a, 0), (b, d): a, d monic, deg b < deg a.
struct Lattice {
    PolyA a, b, d;
    friend bool operator==(const Lattice& x, const Lattice& y) { return x.a == y.a && x.b == y.b && x.d == y.d; }
};

using Vec2 = std::pair<PolyA, PolyA>;

Lattice hermite(std::vector<Vec2> rows) {
    const FieldPtr fq = rows.front().first.field();
    // Euclid on the w-coordinate
    while (true) {
        std::size_t piv = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!rows[i].second.is_zero() && (piv == rows.size() || rows[i].second.degree() < rows[piv].second.degree()))
                piv = i;
        if (piv == rows.size()) throw std::domain_error("lattice is not of full rank");
        bool changed = false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == piv || rows[i].second.is_zero()) continue;
            const PolyA m = rows[i].second / rows[piv].second;
            rows[i].first -= m * rows[piv].first;
            rows[i].second -= m * rows[piv].second;
            changed = true;
        }
        if (!changed) {
            std::swap(rows[piv], rows.front());
            break;
        }
    }
    PolyA a(fq);
    for (std::size_t i = 1; i < rows.size(); ++i) a = gcd(a, rows[i].first);
    if (a.is_zero()) throw std::domain_error("lattice is not of full rank");
    const Elem li = fq->inv(rows.front().second.leading());
    Lattice out{a.monic(), rows.front().first.scaled(li), rows.front().second.scaled(li)};
    out.b = out.b % out.a;
    return out;
}

struct OrderArith {
    FieldPtr fq;
    PolyA F;  // w^2
    PolyA c;
    int f_degree;

    Vec2 mul(const Vec2& x, const Vec2& y) const {
        return {x.first * y.first + x.second * y.second * F, x.first * y.second + x.second * y.first};
    }
    bool contains(const Lattice& l, const Vec2& v) const {
        if (!(v.second % l.d).is_zero()) return false;
        return ((v.first - (v.second / l.d) * l.b) % l.a).is_zero();
    }
    std::vector<Vec2> basis(const Lattice& l) const { return {{l.a, PolyA(fq)}, {l.b, l.d}}; }
    Lattice product(const Lattice& x, const Lattice& y) const {
        std::vector<Vec2> rows;
        for (const auto& u : basis(x))
            for (const auto& v : basis(y)) rows.push_back(mul(u, v));
        return hermite(std::move(rows));
    }
    Lattice conjugate(const Lattice& l) const { return hermite({{l.a, PolyA(fq)}, {l.b, -l.d}}); }
    bool is_ideal(const Lattice& l) const {
        const Vec2 w{PolyA(fq), PolyA::one(fq)};
        for (const auto& v : basis(l))
            if (!contains(l, mul(w, v))) return false;
        return true;
    }
    PolyA norm(const Lattice& l) const { return l.a * l.d; }
    bool invertible(const Lattice& l) const {
        const PolyA n = norm(l);
        return product(l, conjugate(l)) == Lattice{n, PolyA(fq), n};
    }
    // Principal iff some β in M has |N(β)| = |N(M)|.
    bool principal(const Lattice& m) const {
        const int deg = norm(m).degree();
        const int max_x = deg / 2;
        const int y_room = deg - f_degree - 2 * c.degree();
        const int max_y = y_room < 0 ? -1 : y_room / 2;
        const std::uint64_t q = fq->size();
        const std::uint64_t nx = checked_pow(q, max_x + 1);
        const std::uint64_t ny = max_y < 0 ? 1 : checked_pow(q, max_y + 1);
        for (std::uint64_t iy = 0; iy < ny; ++iy) {
            const PolyA y = max_y < 0 ? PolyA(fq) : poly_from_index(fq, iy, max_y + 1);
            if (!(y % m.d).is_zero()) continue;
            const PolyA yw = y * y * F;
            for (std::uint64_t ix = 0; ix < nx; ++ix) {
                const PolyA x = poly_from_index(fq, ix, max_x + 1);
                if (x.is_zero() && y.is_zero()) continue;
                const PolyA n = x * x - yw;
                if (n.degree() != deg) continue;
                if (contains(m, {x, y})) return true;
            }
        }
        return false;
    }
};

}  // namespace

BigInt pic_order_bruteforce(const OrderR& r) {
    const ImaginaryQuadExt& e = r.ext;
    const OrderArith ar{e.fq, r.conductor * r.conductor * e.f, r.conductor, e.f.degree()};
    const int bound = e.genus() + 2;
    const std::uint64_t q = e.fq->size();
    check_budget(big_pow(BigInt(q), 2 * static_cast<std::uint64_t>(bound)), "R-ideals of bounded norm");
    std::vector<Lattice> reps;
    for (int da = 0; da <= bound; ++da)
        for (std::uint64_t ia = 0; ia < checked_pow(q, da); ++ia) {
            const PolyA a = monic_from_index(e.fq, ia, da);
            for (int dd = 0; dd + da <= bound; ++dd)
                for (std::uint64_t id = 0; id < checked_pow(q, dd); ++id) {
                    const PolyA d = monic_from_index(e.fq, id, dd);
                    for (std::uint64_t ib = 0; ib < checked_pow(q, da); ++ib) {
                        const Lattice l{a, poly_from_index(e.fq, ib, da), d};
                        if (!ar.is_ideal(l) || !ar.invertible(l)) continue;
                        const Lattice lbar = ar.conjugate(l);
                        bool known = false;
                        for (const auto& j : reps)
                            if (ar.principal(ar.product(j, lbar))) {
                                known = true;
                                break;
                            }
                        if (!known) reps.push_back(l);
                    }
                }
        }
    return BigInt(reps.size());
}

CmHeight cm_height(const OrderR& r, int rank) {
    if (rank < 1) throw std::domain_error("rank must be ≥ 1");
    const BigInt q(r.ext.fq->size());
    const BigInt norm_c = big_pow(q, 2 * static_cast<std::uint64_t>(r.conductor.degree()));
    return {big_pow(q, static_cast<std::uint64_t>(rank) * static_cast<std::uint64_t>(r.ext.genus())) * norm_c, rank};
}

bool pic_lower_bound_check(const OrderR& r, int rank, const BigRat& eps, const BigRat& c_eps) {
    if (eps <= 0 || eps >= 1) throw std::domain_error("epsilon must lie strictly between 0 and 1");
    if (c_eps <= 0) throw std::domain_error("C_epsilon must be positive");
    const BigInt pic = pic_order_of_order(r);
    const CmHeight h = cm_height(r, rank);
    // pic > C H^(1-ε) with H^r known and 1-ε = (v-u)/v
    const BigInt u = numerator(eps), v = denominator(eps);
    const auto e = static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(rank);
    const BigInt lhs = big_pow(pic, e) * big_pow(denominator(c_eps), e);
    const BigInt rhs = big_pow(numerator(c_eps), e) * big_pow(h.power, static_cast<std::uint64_t>(v - u));
    return lhs > rhs;
}

bool is_residual(const PolyA& p, const ImaginaryQuadExt& e) {
    if (p.degree() < 1 || !is_irreducible(p)) throw std::domain_error(to_string(p) + " is not a prime of A");
    return quadratic_character(e.f, p) >= 0;
}

bool is_residual(const PolyA& p, const OrderR& r) {
    return is_residual(p, r.ext) && !(r.conductor % p).is_zero();
}

MumfordDivisor prime_class(const ImaginaryQuadExt& e, const PolyA& p, bool conjugate) {
    if (!is_residual(p, e)) throw std::domain_error(to_string(p) + " is inert: no prime of degree one above it");
    const PolyA pm = p.monic();
    const int d = pm.degree();
    const BigInt n = ideal_norm(IdealA(pm));
    check_budget(n, "square roots modulo " + to_string(pm));
    const PolyA f = e.f % pm;
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(n); ++i) {
        const PolyA b = poly_from_index(e.fq, i, d);
        if (((b * b - f) % pm).is_zero()) return reduce(e, {pm, conjugate ? -b : b});
    }
    throw std::logic_error("no square root of f modulo a residual prime");
}

PicAction pic_action(const MumfordDivisor& prime, const PicGroup& g) {
    PicAction out;
    for (const auto& x : g.elements) out.permutation.push_back(g.index_of(compose(g.ext, prime, x)));
    const MumfordDivisor id = identity_divisor(g.ext);
    MumfordDivisor acc = reduce(g.ext, prime);
    out.order = 1;
    while (!(acc == id)) {
        acc = compose(g.ext, acc, prime);
        ++out.order;
    }
    return out;
}

ConductorIndex conductor_index_identity(const OrderR& r) {
    if (r.conductor.degree() > 2) throw std::domain_error("conductor index identity is checked for deg c at most 2");
    const FieldPtr& fq = r.ext.fq;
    const PolyA one = PolyA::one(fq), zero(fq), c = r.conductor;
    // A-lattices in A' with basis (1, y)
    const MatA maximal(fq, {{one, zero}, {zero, one}});
    const MatA order(fq, {{one, zero}, {zero, c}});
    const MatA cond(fq, {{c, zero}, {zero, c}});
    ConductorIndex out;
    out.maximal_mod_conductor = module_index(maximal, cond);
    out.order_mod_conductor = module_index(order, cond);
    out.maximal_mod_order = module_index(maximal, order);
    out.identity = out.maximal_mod_conductor == out.order_mod_conductor * out.maximal_mod_order;
    out.chain = out.maximal_mod_order * out.maximal_mod_order >= out.maximal_mod_conductor;
    return out;
}

}  // namespace drinfeld
