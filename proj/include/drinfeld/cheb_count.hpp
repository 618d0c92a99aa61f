#ifndef DRINFELD_CHEB_COUNT_HPP
#define DRINFELD_CHEB_COUNT_HPP

#include <optional>
#include <vector>

#include "base_ring.hpp"

namespace drinfeld {

/// Jacobi symbol (a/b) in F_q[T], q odd, b monic, by quadratic reciprocity.
int jacobi_symbol(const PolyA& a, const PolyA& b);

enum class PrimeSplitting { split, inert, ramified };

struct SplittingCounts {
    int t = 0;
    std::uint64_t split = 0;
    std::uint64_t inert = 0;
    std::uint64_t ramified = 0;
    std::uint64_t total = 0;  // number of monic irreducibles of degree t
};

/// Behaviour of a prime P of A in K(√f).
PrimeSplitting classify_prime(const PolyA& p, const PolyA& f);
SplittingCounts splitting_counts(int t, const PolyA& f);

/// Degree-t primes that split in M = K(√f).
std::uint64_t pi_M(int t, const PolyA& f);

/// Genus of y^2 = f: floor((deg f - 1) / 2).
int quadratic_genus(const PolyA& f);

struct ChebBound {
    bool holds = false;
    std::uint64_t count = 0;
    BigRat main_term;    // q^t / (2t)
    BigRat lhs_squared;  // (π_M(t) - q^t/(2t))^2
    BigRat rhs_squared;  // 16 (g_M + 2)^2 q^t
};

/// |π_M(t) - q^t/(2t)| < 4 (g_M + 2) q^(t/2), compared after squaring.
/// g_M defaults to the genus of y^2 = f.
ChebBound cheb_bound_check(int t, const PolyA& f, std::optional<int> g_m = std::nullopt);

struct ChebParams {
    std::uint64_t q = 3;
    BigRat c1 = 1, c2 = 1, c3 = 1;
    BigRat c_eps = 1;
    BigRat eps = BigRat(1, 2);
    int genus = 1;          // g'
    int rank = 2;           // r in |c|^(1/r)
    BigRat log_c = 0;       // log_q |c|
    BigRat log_m = 0;       // log_q |m_X|
    BigRat c_bez = 1;       // c
    BigRat deg_t_x = 1;     // deg_T(X)
    BigRat n_exp = 1;       // n
    BigRat f_deg = 1;       // [F:K]
    int n_c = 1;
};

void validate(const ChebParams& p);

/// (1/C_1) q^t/t - (C_2 g' + C_3) q^(t/2) > log|m_X| + log|c|.
bool first_inequality(const ChebParams& p, int t);
/// C_ε (q^g' |c|^(1/r))^(1-ε) > c [F:K] deg_T(X)^2 q^(t n).
bool second_inequality(const ChebParams& p, int t);

/// Least t in n_c·N, t <= bound_t, satisfying both inequalities.
std::optional<int> effective_degree_search(const ChebParams& p, int bound_t);

}  // namespace drinfeld

#endif  // DRINFELD_CHEB_COUNT_HPP
