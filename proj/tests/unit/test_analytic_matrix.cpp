#include <random>

#include "doctest.h"
#include "drinfeld/analytic_matrix.hpp"

using namespace drinfeld;

namespace {

RatFunc rf(const FieldPtr& fq, const char* s) { return parse_ratfunc(fq, s); }
PolyA pa(const FieldPtr& fq, const char* s) { return parse_poly(fq, s); }

}  // namespace

TEST_CASE("Möbius action on the chart") {
    auto fq = make_fq(3);
    const AffinePoint w{rf(fq, "T/(T+1)")};
    CHECK(mobius_action(MatK::identity(fq, 2), w) == w);
    const MatK shift = parse_mat_k(fq, "1, T^2; 0, 1");
    CHECK(mobius_action(shift, w)[0] == w[0] + rf(fq, "T^2"));
    const MatK scale = MatK::diagonal(fq, {rf(fq, "T"), RatFunc::one(fq)});
    CHECK(mobius_action(scale, w)[0] == rf(fq, "T") * w[0]);
    CHECK(to_string(mobius_action(scale, w)) == "((T^2)/(T+1))");
    // (0, 1) sent to (1, 0) leaves the chart
    const MatK swap = parse_mat_k(fq, "0, 1; 1, 0");
    CHECK_THROWS_WITH_AS(mobius_action(swap, {RatFunc::zero(fq)}),
                         "image lies at infinity of the affine chart omega_r = 1", std::domain_error);
    // composition is an action
    const MatK g = parse_mat_k(fq, "T, 1; 1, 0"), h = parse_mat_k(fq, "1, 0; T+1, 1");
    CHECK(mobius_action(g * h, w) == mobius_action(g, mobius_action(h, w)));
}

TEST_CASE("MatK arithmetic and parsing") {
    auto fq = make_fq(5);
    const MatK m = parse_mat_k(fq, "T, 1, 0; 0, 1/T, 2; 1, 0, 1");
    CHECK(m.size() == 3);
    CHECK(m * m.inverse() == MatK::identity(fq, 3));
    CHECK(m.pow(-2) == m.inverse() * m.inverse());
    CHECK(m.pow(0) == MatK::identity(fq, 3));
    CHECK(m.pow(3) == m * m * m);
    CHECK(parse_mat_k(fq, to_string(m)) == m);
    CHECK_THROWS_AS(parse_mat_k(fq, "1, 1; 1, 1"), std::domain_error);
    CHECK_THROWS_WITH_AS(parse_mat_k(fq, "1, 0; 0"), "matrix over K must be square", std::domain_error);
    const MatK e = MatK::elementary(fq, 3, 1, 3, rf(fq, "T"));
    CHECK(e.at(0, 2) == rf(fq, "T"));
    CHECK(e.determinant() == RatFunc::one(fq));
}

TEST_CASE("σ generators") {
    auto fq = make_fq(3);
    const PolyA a = pa(fq, "T+1"), N = pa(fq, "T");
    // σ_1 with n = 0 is 1 + a δ_12
    CHECK(sigma_generator(1, 0, a, N, 2) == MatK::elementary(fq, 2, 1, 2, RatFunc(a)));
    CHECK(sigma_generator(1, 1, a, N, 3) == MatK::elementary(fq, 3, 1, 3, RatFunc(a, N)));
    for (int r = 2; r <= 4; ++r)
        for (int i = 1; i < r; ++i)
            for (long long n : {-2LL, 0LL, 1LL, 3LL}) {
                CAPTURE(r);
                CAPTURE(i);
                CAPTURE(n);
                const MatK s = sigma_generator(i, n, a, N, r);
                const RatFunc c = RatFunc(a).pow(i) * RatFunc(N).pow(-n);
                CHECK(s == MatK::elementary(fq, r, i, r, c));
                CHECK(s.determinant() == RatFunc::one(fq));
                const PolyA b = pa(fq, "2*T^2");
                const RatFunc cb = RatFunc(b).pow(i) * RatFunc(N).pow(-n);
                CHECK(s * sigma_generator(i, n, b, N, r) == MatK::elementary(fq, r, i, r, c + cb));
                if (i <= 2) CHECK(sigma_generator_via_first(i, n, a, N, r) == s);
            }
    const MatK lit = sigma_generator_via_first(3, 1, a, N, 4);
    CHECK(lit == MatK::elementary(fq, 4, 3, 4, RatFunc(a * a, N)));
    CHECK_FALSE(lit == sigma_generator(3, 1, a, N, 4));
}

TEST_CASE("σ translations") {
    auto fq = make_fq(3);
    const PolyA T = pa(fq, "T");
    const AffinePoint origin{RatFunc::zero(fq), RatFunc::zero(fq)};
    const AffinePoint img = mobius_action(sigma_generator(2, 1, T, T, 3), origin);
    CHECK(to_string(img) == "(0, T)");

    std::mt19937_64 rng(20261016);
    auto rand_poly = [&](int d, bool nonzero) {
        while (true) {
            std::vector<GaloisField::Elem> c(static_cast<std::size_t>(d) + 1);
            for (auto& x : c) x = rng() % 3;
            PolyA p(fq, c);
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    for (int r = 2; r <= 4; ++r) {
        int ok = 0;
        for (int s = 0; s < 100; ++s) {
            const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(r - 1));
            const long long n = static_cast<long long>(rng() % 7) - 3;
            const PolyA a = rand_poly(2, true);
            PolyA N = rand_poly(2, true);
            if (N.degree() < 1) N = N + T;
            AffinePoint w;
            for (int k = 0; k + 1 < r; ++k) w.push_back(RatFunc(rand_poly(3, false), rand_poly(1, true).monic()));
            ok += verify_translation(i, n, a, N, r, w) ? 1 : 0;
        }
        CHECK(ok == 100);
    }
}

TEST_CASE("σ argument checks") {
    auto fq = make_fq(3);
    const PolyA T = pa(fq, "T");
    CHECK_THROWS_AS(sigma_generator(1, 0, T, T, 1), std::domain_error);
    CHECK_THROWS_AS(sigma_generator(0, 0, T, T, 3), std::domain_error);
    CHECK_THROWS_AS(sigma_generator(3, 0, T, T, 3), std::domain_error);
    CHECK_THROWS_WITH_AS(sigma_generator(1, 0, PolyA(fq), T, 3), "sigma generators need a ≠ 0", std::domain_error);
    CHECK_THROWS_WITH_AS(sigma_generator(1, 0, T, PolyA::one(fq), 3), "N must be nonconstant", std::domain_error);
}
