#include <random>

#include "doctest.h"
#include "drinfeld/base_ring.hpp"

using namespace drinfeld;

namespace {

// Irreducibility by trial division over all monic polynomials of lower degree.
bool irreducible_by_trial(const PolyA& f) {
    const auto& fq = f.field();
    for (int d = 1; d <= f.degree() / 2; ++d) {
        const std::uint64_t n = checked_pow(fq->size(), d);
        for (std::uint64_t i = 0; i < n; ++i)
            if ((f % monic_from_index(fq, i, d)).is_zero()) return false;
    }
    return f.degree() >= 1;
}

}  // namespace

TEST_CASE("canonical moduli are least irreducibles") {
    CHECK(GaloisField::make(3, 2)->modulus() == std::vector<unsigned>{1, 0, 1});
    CHECK(GaloisField::make(2, 2)->modulus() == std::vector<unsigned>{1, 1, 1});
    CHECK(GaloisField::make(2, 3)->modulus() == std::vector<unsigned>{1, 1, 0, 1});
    CHECK(GaloisField::make(3, 2) == GaloisField::make(3, 2));
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(7);
    for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 4}, {3, 2}, {5, 2}, {3, 7}, {3, 20}}) {
        auto F = GaloisField::make(p, k);
        std::uniform_int_distribution<std::uint64_t> d(0, F->size() - 1);
        for (int i = 0; i < 200; ++i) {
            const auto a = d(rng), b = d(rng), c = d(rng);
            CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            CHECK(F->add(F->sub(a, b), b) == a);
            if (a) CHECK(F->mul(a, F->inv(a)) == 1);
            CHECK(F->pow(a, F->size()) == a);
        }
    }
}

TEST_CASE("embeddings are ring maps and preimages invert them") {
    auto src = GaloisField::make(3, 2);
    auto dst = GaloisField::make(3, 4);
    auto emb = FieldEmbedding::canonical(src, dst);
    for (std::uint64_t a = 0; a < 9; ++a) {
        for (std::uint64_t b = 0; b < 9; ++b) CHECK(emb(src->mul(a, b)) == dst->mul(emb(a), emb(b)));
        GaloisField::Elem back = 0;
        REQUIRE(emb.preimage(emb(a), back));
        CHECK(back == a);
    }
    int hits = 0;
    for (std::uint64_t x = 0; x < dst->size(); ++x) {
        GaloisField::Elem back = 0;
        hits += emb.preimage(x, back);
    }
    CHECK(hits == 9);
}

TEST_CASE("ideal norms and degrees") {
    auto f3 = make_fq(3);
    auto f2 = make_fq(2);
    CHECK(ideal_norm(IdealA(parse_poly(f3, "T"))) == 3);
    CHECK(ideal_norm(IdealA(parse_poly(f3, "T^2+1"))) == 9);
    CHECK(ideal_norm(IdealA(parse_poly(f2, "T^3+T+1"))) == 8);
    CHECK_THROWS_AS(ideal_norm(IdealA(PolyA(f3))), std::domain_error);
    CHECK(deg_a(parse_poly(f3, "T^2+1")) == 2);
    CHECK(deg_a(parse_poly(make_fq(7), "5")) == 0);
    CHECK(deg_a(parse_poly(f3, "2*T^4")) == 4);
    CHECK_THROWS_AS(deg_a(PolyA(f3)), std::domain_error);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto m = monic_from_index(f3, rng() % 81, 4);
        auto n = monic_from_index(f3, rng() % 27, 3);
        CHECK(ideal_norm(IdealA(m) * IdealA(n)) == ideal_norm(IdealA(m)) * ideal_norm(IdealA(n)));
        CHECK(deg_a(m * n) == deg_a(m) + deg_a(n));
    }
}

TEST_CASE("factorisation") {
    auto f3 = make_fq(3);
    auto f2 = make_fq(2);
    auto fa = factor_poly(parse_poly(f3, "T^2-1"));
    REQUIRE(fa.factors.size() == 2);
    CHECK(to_string(fa.factors[0].first) == "T+1");
    CHECK(to_string(fa.factors[1].first) == "T+2");
    auto fb = factor_poly(parse_poly(f2, "T^2+T+1"));
    REQUIRE(fb.factors.size() == 1);
    CHECK(fb.factors[0].second == 1);
    auto fc = factor_poly(parse_poly(f3, "T^3"));
    REQUIRE(fc.factors.size() == 1);
    CHECK(to_string(fc.factors[0].first) == "T");
    CHECK(fc.factors[0].second == 3);
    CHECK_THROWS_AS(factor_poly(PolyA(f3)), std::domain_error);

    std::mt19937_64 rng(3);
    for (std::uint64_t q : {2, 3, 4, 5, 9}) {
        auto fq = make_fq(q);
        for (int i = 0; i < 40; ++i) {
            const int d = 1 + static_cast<int>(rng() % 9);
            PolyA a = poly_from_index(fq, rng() % checked_pow(q, d), d);
            a += PolyA::monomial(fq, 1 + rng() % (q - 1), static_cast<std::size_t>(d));
            a *= pow(monic_from_index(fq, rng() % q, 1), rng() % 4);
            auto fac = factor_poly(a);
            CHECK(fac.expand(fq) == a);
            for (const auto& [p, m] : fac.factors) {
                CHECK(p.is_monic());
                CHECK(irreducible_by_trial(p));
            }
        }
    }
}

TEST_CASE("irreducible enumeration matches necklace counts") {
    auto f3 = make_fq(3);
    auto f2 = make_fq(2);
    auto d1 = irreducibles_of_degree(f3, 1);
    REQUIRE(d1.size() == 3);
    CHECK(to_string(d1[0]) == "T");
    CHECK(to_string(d1[1]) == "T+1");
    CHECK(to_string(d1[2]) == "T+2");
    auto d2 = irreducibles_of_degree(f2, 2);
    REQUIRE(d2.size() == 1);
    CHECK(to_string(d2[0]) == "T^2+T+1");
    CHECK(irreducibles_of_degree(f2, 3).size() == 2);
    CHECK_THROWS_AS(irreducibles_of_degree(f2, 0), std::domain_error);
    for (std::uint64_t q : {2, 3, 4, 5}) {
        auto fq = make_fq(q);
        for (int d = 1; d <= 5; ++d) {
            auto list = irreducibles_of_degree(fq, d);
            CHECK(BigInt(list.size()) == necklace_count(q, d));
            if (d <= 3)
                for (const auto& p : list) CHECK(irreducible_by_trial(p));
        }
    }
}

TEST_CASE("polynomial and rational function text round trip") {
    auto f9 = make_fq(9);
    auto f3 = make_fq(3);
    for (const char* s : {"2*T^3+T+1", "T", "0", "2", "T^12+2*T"}) CHECK(to_string(parse_poly(f3, s)) == s);
    for (const char* s : {"(a+1)*T^2+a*T+2*a", "T^2+(2*a+1)", "a"}) CHECK(to_string(parse_poly(f9, s)) == s);
    CHECK(to_string(parse_poly(f3, "(T+1)^2 - T")) == "T^2+T+1");
    CHECK(to_string(parse_poly(f3, "T^3-T+1")) == "T^3+2*T+1");
    CHECK_THROWS_AS(parse_poly(f3, "T+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(f3, "x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(f3, "T^13"), std::domain_error);
    CHECK(parse_poly(f3, "T^13", "T", DeskLimits::none()).degree() == 13);
    CHECK_THROWS_AS(make_fq(17), std::domain_error);
    CHECK_THROWS_AS(make_fq(6), std::domain_error);
    CHECK(parse_field("q=9")->size() == 9);

    auto r = parse_ratfunc(f3, "(T^2-1)/(2*T+2)");
    CHECK(to_string(r) == "2*T+1");
    auto s = parse_ratfunc(f3, "1/T + T");
    CHECK(to_string(s) == "(T^2+1)/(T)");
    CHECK(to_string(parse_ratfunc(f3, to_string(s))) == to_string(s));
    CHECK((s - s).is_zero());
    CHECK(s * s.inv() == RatFunc::one(f3));
    CHECK(s.pow(-2) * s.pow(2) == RatFunc::one(f3));
    CHECK_THROWS_AS(parse_ratfunc(f3, "1/0"), std::domain_error);
}
