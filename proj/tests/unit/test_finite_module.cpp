#include <random>

#include "doctest.h"
#include "drinfeld/finite_module.hpp"

using namespace drinfeld;

namespace {

MatA diag(const FieldPtr& fq, const std::vector<PolyA>& d, std::size_t rows, std::size_t cols) {
    MatA m(fq, rows, cols);
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

std::vector<std::string> strs(const std::vector<PolyA>& v) {
    std::vector<std::string> out;
    for (const auto& p : v) out.push_back(to_string(p));
    return out;
}

}  // namespace

TEST_CASE("smith normal form examples") {
    auto fq = make_fq(3);
    CHECK(strs(smith_normal_form(parse_mat_a(fq, "T,0;0,T")).factors) == std::vector<std::string>{"T", "T"});
    CHECK(strs(smith_normal_form(parse_mat_a(fq, "T,1;0,T")).factors) == std::vector<std::string>{"1", "T^2"});
    CHECK(strs(smith_normal_form(parse_mat_a(fq, "0,0;0,0")).factors) == std::vector<std::string>{"0", "0"});
    CHECK(strs(smith_normal_form(parse_mat_a(fq, "T,0;0,T+1")).factors) == std::vector<std::string>{"1", "T^2+T"});
}

TEST_CASE("smith transforms are unimodular and reconstruct") {
    std::mt19937_64 rng(17);
    for (std::uint64_t q : {2, 3, 4}) {
        auto fq = make_fq(q);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
            MatA m(fq, rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    m.at(i, j) = rng() % 4 == 0 ? PolyA(fq) : poly_from_index(fq, rng() % checked_pow(q, 3), 3);
            const auto s = smith_normal_form(m);
            CHECK(s.left * m * s.right == diag(fq, s.factors, rows, cols));
            CHECK(s.left.determinant().degree() == 0);
            CHECK(s.right.determinant().degree() == 0);
            bool seen_zero = false;
            for (std::size_t i = 0; i < s.factors.size(); ++i) {
                if (s.factors[i].is_zero()) {
                    seen_zero = true;
                    continue;
                }
                CHECK(!seen_zero);
                CHECK(s.factors[i].is_monic());
                if (i > 0) CHECK((s.factors[i] % s.factors[i - 1]).is_zero());
            }
        }
    }
}

TEST_CASE("psi_r examples and brute-force equivalence") {
    auto f3 = make_fq(3);
    auto f2 = make_fq(2);
    CHECK(psi_r(IdealA(parse_poly(f3, "T")), 2) == 4);
    CHECK(psi_r(IdealA(parse_poly(f2, "T^2")), 2) == 6);
    CHECK(count_cyclic_submodules(IdealA(parse_poly(f3, "T")), 2) == 4);
    CHECK(count_cyclic_submodules(IdealA(parse_poly(f2, "T")), 3) == 7);
    CHECK(count_cyclic_submodules(IdealA(parse_poly(f3, "T^2+1")), 1) == 1);
    CHECK_THROWS_WITH_AS(psi_r(IdealA(parse_poly(f3, "T")), 0), "rank must be ≥ 1", std::domain_error);
    CHECK_THROWS_AS(psi_r(IdealA(PolyA(f3)), 2), std::domain_error);
    for (int r : {1, 2, 3, 4}) {
        for (const auto& p : irreducibles_of_degree(f3, 2)) {
            const BigInt P = 9;
            CHECK(psi_r(IdealA(p), r) == (big_pow(P, r) - 1) / (P - 1));
        }
    }
    for (std::uint64_t q : {2, 3}) {
        auto fq = make_fq(q);
        for (int d = 1; d <= 2; ++d)
            for (std::uint64_t i = 0; i < checked_pow(q, d); ++i) {
                IdealA n(monic_from_index(fq, i, d));
                for (int r : {1, 2, 3}) CHECK(psi_r(n, r) == count_cyclic_submodules(n, r));
            }
    }
    std::mt19937_64 rng(4);
    for (int i = 0; i < 40; ++i) {
        auto a = monic_from_index(f3, rng() % 81, 4);
        auto b = monic_from_index(f3, rng() % 27, 3);
        if (gcd(a, b).degree() > 0) continue;
        for (int r : {2, 3}) CHECK(psi_r(IdealA(a * b), r) == psi_r(IdealA(a), r) * psi_r(IdealA(b), r));
    }
    setenv("DRINFELD_BUDGET", "100", 1);
    CHECK_THROWS_AS(count_cyclic_submodules(IdealA(parse_poly(f3, "T^3")), 2), BudgetExceeded);
    unsetenv("DRINFELD_BUDGET");
}

TEST_CASE("module index") {
    auto fq = make_fq(3);
    CHECK(module_index(parse_mat_a(fq, "T,0;0,T")) == 9);
    CHECK(module_index(parse_mat_a(fq, "T,1;0,T")) == 9);
    CHECK(module_index(parse_mat_a(fq, "1,0;0,1")) == 1);
    CHECK(module_index(parse_mat_a(fq, "T,1;0,T"), parse_mat_a(fq, "T,1;0,T")) == 1);
    CHECK(module_index(parse_mat_a(fq, "1,0;0,T"), parse_mat_a(fq, "T,0;0,T")) == 3);
    CHECK_THROWS_AS(module_index(parse_mat_a(fq, "T,1;T,1")), std::domain_error);
    CHECK_THROWS_AS(module_index(parse_mat_a(fq, "T,0;0,T"), parse_mat_a(fq, "1,0;0,1")), std::domain_error);
    auto m = FiniteAModule::from_relations(parse_mat_a(fq, "T,1;0,T"));
    CHECK(to_string(m) == "A/(T^2)");
    CHECK(m.cardinality() == 9);
}
