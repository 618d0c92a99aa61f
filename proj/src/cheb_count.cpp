#include "drinfeld/cheb_count.hpp"

#include <stdexcept>

namespace drinfeld {

namespace {

void require_odd(const PolyA& f) {
    if (f.ctx().characteristic() == 2) throw std::domain_error("quadratic splitting needs odd q");
}

// q^e for a rational exponent e = a/b, compared as x > q^e <=> x^b > q^a.
bool greater_than_power(const BigRat& x, std::uint64_t q, const BigRat& e) {
    if (x <= 0) return false;
    const BigInt a = numerator(e), b = denominator(e);
    const auto bb = static_cast<std::uint64_t>(b);
    const BigInt Q(q);
    if (a >= 0) return rat_pow(x, bb) > BigRat(big_pow(Q, static_cast<std::uint64_t>(a)));
    return rat_pow(x, bb) * BigRat(big_pow(Q, static_cast<std::uint64_t>(-a))) > 1;
}

}  // namespace

int jacobi_symbol(const PolyA& a_in, const PolyA& b_in) {
    require_odd(b_in);
    if (!b_in.is_monic()) throw std::domain_error("Jacobi symbol needs a monic modulus");
    const GaloisField& fq = b_in.ctx();
    const std::uint64_t half = (fq.size() - 1) / 2;
    auto chi = [&](GaloisField::Elem c) { return fq.pow(c, half) == 1 ? 1 : -1; };
    PolyA a = a_in % b_in, b = b_in;
    int sign = 1;
    while (true) {
        if (b.degree() == 0) return sign;
        if (a.is_zero()) return 0;
        const GaloisField::Elem lc = a.leading();
        if (b.degree() % 2 == 1) sign *= chi(lc);
        a = a.monic();
        // reciprocity for monic a, b
        if (half % 2 == 1 && a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
        PolyA next = b % a;
        b = std::move(a);
        a = std::move(next);
    }
}

PrimeSplitting classify_prime(const PolyA& p, const PolyA& f) {
    const int j = jacobi_symbol(f, p.monic());
    if (j == 0) return PrimeSplitting::ramified;
    return j == 1 ? PrimeSplitting::split : PrimeSplitting::inert;
}

SplittingCounts splitting_counts(int t, const PolyA& f) {
    if (t < 1) throw std::domain_error("prime degree t must be at least 1");
    require_odd(f);
    if (f.degree() < 1 || gcd(f, f.derivative()).degree() > 0) throw std::domain_error("f must be squarefree and nonconstant");
    SplittingCounts out;
    out.t = t;
    for (const auto& p : irreducibles_of_degree(f.field(), t)) {
        ++out.total;
        switch (classify_prime(p, f)) {
            case PrimeSplitting::split: ++out.split; break;
            case PrimeSplitting::inert: ++out.inert; break;
            case PrimeSplitting::ramified: ++out.ramified; break;
        }
    }
    return out;
}

std::uint64_t pi_M(int t, const PolyA& f) { return splitting_counts(t, f).split; }

int quadratic_genus(const PolyA& f) { return (f.degree() - 1) / 2; }

ChebBound cheb_bound_check(int t, const PolyA& f, std::optional<int> g_m) {
    const int g = g_m.value_or(quadratic_genus(f));
    if (g < 0) throw std::domain_error("genus must be non-negative");
    ChebBound out;
    out.count = pi_M(t, f);
    const BigInt qt = big_pow(BigInt(f.ctx().size()), static_cast<std::uint64_t>(t));
    out.main_term = BigRat(qt, 2 * t);
    const BigRat diff = BigRat(BigInt(out.count)) - out.main_term;
    out.lhs_squared = diff * diff;
    out.rhs_squared = BigRat(16 * (g + 2) * (g + 2) * qt);
    out.holds = out.lhs_squared < out.rhs_squared;
    return out;
}

void validate(const ChebParams& p) {
    if (p.eps <= 0 || p.eps >= 1) throw std::domain_error("epsilon must lie strictly between 0 and 1");
    for (const BigRat* x : {&p.c1, &p.c2, &p.c3, &p.c_eps, &p.c_bez, &p.deg_t_x, &p.n_exp, &p.f_deg})
        if (*x <= 0) throw std::domain_error("Chebotarev constants must be positive");
    if (p.log_c < 0 || p.log_m < 0) throw std::domain_error("log norms must be non-negative");
    if (p.n_c < 1 || p.rank < 1 || p.genus < 0) throw std::domain_error("n_c, r must be positive and g' non-negative");
    prime_power(p.q);
}

bool first_inequality(const ChebParams& p, int t) {
    const BigRat qt(big_pow(BigInt(p.q), static_cast<std::uint64_t>(t)));
    const BigRat k = p.c2 * p.genus + p.c3;
    // lhs - logs > k q^(t/2), with q^(t/2) > 0
    const BigRat rest = qt / (p.c1 * t) - p.log_m - p.log_c;
    if (rest <= 0) return false;
    return rest * rest > k * k * qt;
}

bool second_inequality(const ChebParams& p, int t) {
    // C_ε / (c [F:K] deg^2) > q^(t n - (g' + log|c|/r)(1 - ε))
    const BigRat ratio = p.c_eps / (p.c_bez * p.f_deg * p.deg_t_x * p.deg_t_x);
    const BigRat exponent = p.n_exp * t - (BigRat(p.genus) + p.log_c / p.rank) * (1 - p.eps);
    return greater_than_power(ratio, p.q, exponent);
}

std::optional<int> effective_degree_search(const ChebParams& p, int bound_t) {
    validate(p);
    if (bound_t < p.n_c) throw std::domain_error("bound_T must be at least n_c");
    for (int t = p.n_c; t <= bound_t; t += p.n_c)
        if (first_inequality(p, t) && second_inequality(p, t)) return t;
    return std::nullopt;
}

}  // namespace drinfeld
