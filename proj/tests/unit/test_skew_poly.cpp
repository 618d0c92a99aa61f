#include <random>

#include "doctest.h"
#include "drinfeld/linalg.hpp"
#include "drinfeld/skew_poly.hpp"

using namespace drinfeld;

namespace {

struct Samplers {
    std::mt19937_64 rng{42};

    FiniteAField::Elem sample(const FiniteAField& L) { return rng() % L.size(); }
    RatFunc sample(const RationalFunctionField& K) {
        auto fq = K.fq();
        PolyA num = poly_from_index(fq, rng() % checked_pow(fq->size(), 3), 3);
        PolyA den = monic_from_index(fq, rng() % checked_pow(fq->size(), 1), static_cast<int>(rng() % 2));
        return RatFunc(num, den);
    }
    KPoly sample(const SimpleExtensionField& E) {
        std::vector<RatFunc> c;
        for (int i = 0; i < E.degree(); ++i) c.push_back(RatFunc(poly_from_index(E.fq(), rng() % 9, 2)));
        return KPoly(E.base_ptr(), std::move(c));
    }
    template <class F>
    SkewPoly<F> sample_skew(const std::shared_ptr<const F>& f, int deg) {
        std::vector<typename F::Elem> c;
        for (int i = 0; i <= deg; ++i) c.push_back(sample(*f));
        return SkewPoly<F>(f, std::move(c));
    }
};

template <class F>
void ring_laws(const std::shared_ptr<const F>& f, Samplers& s, int rounds) {
    for (int i = 0; i < rounds; ++i) {
        auto a = s.sample_skew(f, 2), b = s.sample_skew(f, 1), c = s.sample_skew(f, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
        const auto x = s.sample(*f);
        CHECK(f->equal((a * b).eval(x), a.eval(b.eval(x))));
        if (!b.is_zero()) {
            auto [q, r] = right_divmod(a * c + b, b);
            CHECK(q * b + r == a * c + b);
            CHECK(r.degree() < b.degree());
        }
    }
}

// Additive polynomial Σ c_i X^(q^i) over the absolute field.
FPoly additive(const SkewL& u) {
    const auto& L = u.ctx();
    std::vector<GaloisField::Elem> c(checked_pow(L.q(), u.degree()) + 1, 0);
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) c[checked_pow(L.q(), static_cast<int>(i))] = u.coeffs()[i];
    return FPoly(L.abs_ptr(), std::move(c));
}

std::size_t basis_rank(const FiniteAField& L, const std::vector<FiniteAField::Elem>& v) {
    DenseMatrix<GaloisField> rows;
    for (auto x : v) rows.push_back(L.fq_coords(x));
    return matrix_rank(*L.fq(), rows);
}

}  // namespace

TEST_CASE("commutation rule and worked products") {
    auto fq = make_fq(3);
    auto L = FiniteAField::residue(fq, parse_poly(fq, "T^2+1"));
    const auto y = L->t();
    const auto tau = SkewL::tau(L);
    for (FiniteAField::Elem c = 0; c < L->size(); ++c)
        CHECK(tau * SkewL::constant(L, c) == SkewL(L, {0, L->pow(c, 3)}));
    const SkewL u(L, {y, 1});
    CHECK(u * u == SkewL(L, {L->mul(y, y), L->add(y, L->pow(y, 3)), 1}));
    CHECK((u * SkewL(L)).is_zero());

    auto K = RationalFunctionField::make(fq);
    const SkewPoly<RationalFunctionField> v(K, {K->t(), K->one()});
    CHECK(to_string(v * v) == "T^2 + (T^3+T)*tau + tau^2");

    auto E = SimpleExtensionField::over_polynomial(fq, parse_poly(fq, "T^2"));
    const SkewPoly<SimpleExtensionField> w(E, {E->y(), E->one()});
    const auto ww = w * w;
    CHECK(E->equal(ww.coeff(1), E->add(E->y(), E->pow(E->y(), 3))));
    CHECK(to_string(ww) == "T + (T+1)*y*tau + tau^2");
}

TEST_CASE("ring laws in all three coefficient fields") {
    Samplers s;
    auto fq = make_fq(3);
    ring_laws(FiniteAField::residue(fq, parse_poly(fq, "T^2+1")), s, 100);
    ring_laws(FiniteAField::residue(make_fq(4), parse_poly(make_fq(4), "T^3+T+1")), s, 100);
    ring_laws(RationalFunctionField::make(fq), s, 20);
    ring_laws(SimpleExtensionField::over_polynomial(make_fq(2), parse_poly(make_fq(2), "T^3+T")), s, 10);
}

TEST_CASE("right division examples") {
    auto fq = make_fq(3);
    auto L = FiniteAField::residue(fq, parse_poly(fq, "T^2+1"));
    const SkewL u(L, {L->t(), 1});
    auto [s1, r1] = right_divmod(u * u, u);
    CHECK(s1 == u);
    CHECK(r1.is_zero());
    auto [s2, r2] = right_divmod(SkewL::tau_power(L, 2), SkewL::tau(L));
    CHECK(s2 == SkewL::tau(L));
    CHECK(r2.is_zero());
    const auto c = SkewL::constant(L, 5);
    auto [s3, r3] = right_divmod(SkewL::tau_power(L, 2) + c, SkewL::tau(L));
    CHECK(s3 == SkewL::tau(L));
    CHECK(r3 == c);
    CHECK_THROWS_AS(right_divmod(u, SkewL(L)), std::domain_error);
    auto other = FiniteAField::residue(fq, parse_poly(fq, "T^2+1"));
    CHECK_THROWS_AS(u * SkewL::tau(other), std::domain_error);
}

TEST_CASE("evaluation") {
    auto fq = make_fq(3);
    auto L = FiniteAField::residue(fq, parse_poly(fq, "T^2+1"));
    for (FiniteAField::Elem x = 0; x < L->size(); ++x) CHECK(SkewL::tau(L).eval(x) == L->pow(x, 3));
    CHECK(SkewL(L, {L->t(), 1}).eval(0) == 0);
}

TEST_CASE("kernel roots") {
    auto fq = make_fq(3);
    auto L = FiniteAField::residue(fq, parse_poly(fq, "T^2+1"));
    const SkewL u(L, {L->t(), 1});
    auto kr = kernel_roots(u);
    REQUIRE(kr.basis.size() == 1);
    const auto ud = map_coefficients(u, kr.extension);
    CHECK(ud.eval(kr.basis[0]) == 0);
    CHECK(kr.basis[0] != 0);
    CHECK_THROWS_WITH_AS(kernel_roots(SkewL::tau(L)), doctest::Contains("c_0 = 0"), std::domain_error);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const SkewL w(L, {1 + rng() % (L->size() - 1), rng() % L->size(), 1 + rng() % (L->size() - 1)});
        auto k2 = kernel_roots(w);
        REQUIRE(k2.basis.size() == 2);
        const auto wd = map_coefficients(w, k2.extension);
        // gcd with X^|L_d| - X has all q^2 roots, and no smaller extension does
        const auto add = additive(wd);
        const auto& Ld = k2.extension.field;
        const auto frob = powmod(FPoly::x(Ld->abs_ptr()), Ld->size(), add) - FPoly::x(Ld->abs_ptr());
        CHECK(gcd(add, frob).degree() == 9);
        for (unsigned d = 1; d < k2.degree; ++d) {
            const auto ext = L->extension(d);
            const auto wdd = additive(map_coefficients(w, ext));
            const auto fr = powmod(FPoly::x(ext.field->abs_ptr()), ext.field->size(), wdd) - FPoly::x(ext.field->abs_ptr());
            CHECK(gcd(wdd, fr).degree() < 9);
        }
        CHECK(basis_rank(*Ld, k2.basis) == 2);
    }
}

TEST_CASE("text round trip") {
    auto fq = make_fq(3);
    auto K = RationalFunctionField::make(fq);
    for (const char* s : {"T^2 + (T^3+T)*tau + tau^2", "(T+1)/(T) + tau^3", "0", "2*tau"}) {
        auto u = parse_skew(K, s);
        CHECK(to_string(u) == s);
    }
    CHECK(to_string(parse_skew(K, "tau*T")) == "T^3*tau");
    auto L = FiniteAField::residue(fq, parse_poly(fq, "T^2+1"));
    auto u = parse_skew(L, "t + (t+1)*tau + 2*tau^2");
    CHECK(to_string(u) == "t + (t+1)*tau + 2*tau^2");
    CHECK_THROWS_AS(parse_skew(L, "t + x"), std::invalid_argument);
    auto E = SimpleExtensionField::over_polynomial(fq, parse_poly(fq, "T^2"));
    auto e = parse_skew(E, "y^2 + (y + y^3)*tau + tau^2");
    CHECK(to_string(parse_skew(E, to_string(e))) == to_string(e));
}
