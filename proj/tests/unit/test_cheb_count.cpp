#include "doctest.h"
#include "drinfeld/cheb_count.hpp"
#include "drinfeld/cm_orders.hpp"

using namespace drinfeld;

namespace {

PolyA pa(const FieldPtr& fq, const char* s) { return parse_poly(fq, s); }

// f mod p is a nonzero square in A/p, by brute force over all residues
bool square_mod(const PolyA& f, const PolyA& p) {
    const PolyA r = f % p;
    if (r.is_zero()) return false;
    const std::uint64_t n = checked_pow(p.ctx().size(), p.degree());
    for (std::uint64_t i = 1; i < n; ++i) {
        const PolyA x = poly_from_index(p.field(), i, p.degree());
        if ((x * x - r) % p == PolyA(p.field())) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("Jacobi symbol against brute-force squares") {
    for (std::uint64_t q : {3, 5, 9}) {
        auto fq = make_fq(q);
        for (int d = 1; d <= (q == 3 ? 3 : 2); ++d)
            for (const auto& p : irreducibles_of_degree(fq, d))
                for (std::uint64_t i = 0; i < checked_pow(q, 3); i += (q == 3 ? 1 : 11)) {
                    const PolyA a = poly_from_index(fq, i, 3);
                    CAPTURE(to_string(a));
                    CAPTURE(to_string(p));
                    const int j = jacobi_symbol(a, p);
                    if ((a % p).is_zero()) CHECK(j == 0);
                    else CHECK((j == 1) == square_mod(a, p));
                }
    }
    auto fq = make_fq(3);
    // multiplicative in the modulus
    const PolyA a = pa(fq, "T^3+2*T+1"), b = pa(fq, "T^2+1"), c = pa(fq, "T^3+2*T+2");
    CHECK(jacobi_symbol(a, b * c) == jacobi_symbol(a, b) * jacobi_symbol(a, c));
    CHECK_THROWS_AS(jacobi_symbol(a, pa(fq, "2*T+1")), std::domain_error);
    CHECK_THROWS_AS(jacobi_symbol(pa(make_fq(4), "T"), pa(make_fq(4), "T+1")), std::domain_error);
}

TEST_CASE("splitting counts") {
    auto fq = make_fq(3);
    for (const char* fs : {"T^3-T+1", "T^3-T-1", "T^5+T^2+2"}) {
        const PolyA f = pa(fq, fs);
        const auto e = make_imaginary_quadratic(f);
        for (int t = 1; t <= 5; ++t) {
            CAPTURE(fs);
            CAPTURE(t);
            const auto s = splitting_counts(t, f);
            CHECK(s.split + s.inert + s.ramified == s.total);
            CHECK(BigInt(s.total) == necklace_count(3, t));
            std::uint64_t split = 0;
            for (const auto& p : irreducibles_of_degree(fq, t))
                if (!(f % p).is_zero() && is_residual(p, e)) ++split;
            CHECK(s.split == split);
        }
    }
    CHECK(pi_M(1, pa(fq, "T^3-T+1")) == 3);
    CHECK(pi_M(1, pa(fq, "T^3-T-1")) == 0);
    CHECK(splitting_counts(3, pa(fq, "T^3-T+1")).ramified == 1);
    CHECK_THROWS_AS(pi_M(0, pa(fq, "T^3-T+1")), std::domain_error);
    CHECK_THROWS_AS(pi_M(1, pa(fq, "T^2*(T+1)")), std::domain_error);
}

TEST_CASE("Chebotarev bound") {
    auto fq = make_fq(3);
    const auto b1 = cheb_bound_check(1, pa(fq, "T^3-T-1"));
    CHECK(b1.main_term == BigRat(3, 2));
    CHECK(b1.count == 0);
    CHECK(b1.lhs_squared == BigRat(9, 4));
    CHECK(b1.rhs_squared == 432);
    CHECK(b1.holds);
    for (const char* fs : {"T^3-T+1", "T^3-T-1"})
        for (int t = 1; t <= 8; ++t) {
            const auto b = cheb_bound_check(t, pa(fq, fs));
            CHECK(b.holds);
            if (t + 2 <= 8) CHECK(cheb_bound_check(t + 2, pa(fq, fs)).rhs_squared == b.rhs_squared * 9);
        }
    CHECK(cheb_bound_check(2, pa(fq, "T^3-T+1"), 4).rhs_squared == 16 * 36 * 9);
    CHECK_THROWS_AS(cheb_bound_check(2, pa(fq, "T^3-T+1"), -1), std::domain_error);
}

TEST_CASE("effective degree search") {
    ChebParams p;
    p.q = 3;
    p.c_eps = BigRat(1, 100);
    CHECK_FALSE(effective_degree_search(p, 40).has_value());

    ChebParams easy;
    easy.q = 3;
    easy.c_eps = BigInt(1) << 400;
    easy.n_c = 2;
    const auto t = effective_degree_search(easy, 60);
    REQUIRE(t.has_value());
    CHECK(*t % 2 == 0);
    CHECK(first_inequality(easy, *t));
    CHECK(second_inequality(easy, *t));
    for (int s = easy.n_c; s < *t; s += easy.n_c) CHECK_FALSE((first_inequality(easy, s) && second_inequality(easy, s)));

    ChebParams bad = easy;
    bad.eps = 1;
    CHECK_THROWS_AS(effective_degree_search(bad, 10), std::domain_error);
    bad = easy;
    bad.q = 6;
    CHECK_THROWS_AS(effective_degree_search(bad, 10), std::domain_error);
    CHECK_THROWS_AS(effective_degree_search(easy, 1), std::domain_error);
}
