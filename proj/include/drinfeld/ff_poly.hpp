#ifndef DRINFELD_FF_POLY_HPP
#define DRINFELD_FF_POLY_HPP

#include <utility>
#include <vector>

#include "galois_field.hpp"
#include "poly.hpp"

namespace drinfeld {

/// Polynomials over a finite field F_Q.
using FPoly = Poly<GaloisField>;

/// X^(Q^i) mod f.
FPoly frobenius_power_mod(const FPoly& f, unsigned i);

bool is_irreducible(const FPoly& f);

/// Distinct roots in the coefficient field, sorted by encoding.
std::vector<GaloisField::Elem> roots(const FPoly& f);

/// Monic irreducible factors with multiplicities. Factors are ordered by
/// degree, then by coefficient list read from the top down. The leading
/// coefficient is not included.
std::vector<std::pair<FPoly, int>> factor(const FPoly& f);

/// Deterministic total order on polynomials over one field: degree first,
/// then coefficients from the leading term down.
bool poly_less(const FPoly& a, const FPoly& b);

}  // namespace drinfeld

#endif  // DRINFELD_FF_POLY_HPP
