#ifndef DRINFELD_CM_ORDERS_HPP
#define DRINFELD_CM_ORDERS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "base_ring.hpp"

namespace drinfeld {

/// K' = K(y), y^2 = f(T), with q odd and f squarefree of odd degree, so the
/// infinite place of K is ramified in K'.
struct ImaginaryQuadExt {
    FieldPtr fq;
    PolyA f;
    int genus() const { return (f.degree() - 1) / 2; }
};

ImaginaryQuadExt make_imaginary_quadratic(const PolyA& f);
/// "q=3; y^2 = T^3 - T + 1".
ImaginaryQuadExt parse_extension(std::string_view text, const DeskLimits& limits = {});
std::string to_string(const ImaginaryQuadExt& e);

/// R = A + c A' with c monic.
struct OrderR {
    ImaginaryQuadExt ext;
    PolyA conductor;
};

OrderR make_order(const ImaginaryQuadExt& ext, const PolyA& c);
/// "q=3; y^2 = T^3 - T + 1; c = T". Without a c clause the order is A'.
OrderR parse_order(std::string_view text, const DeskLimits& limits = {});

/// h = L(1) from point counts of y^2 = f over F_(q^i), i <= g.
BigInt class_number(const ImaginaryQuadExt& e);

/// (q-1)(q^(2g) - 2g q^g + 1) / (2g (q^(g+1) - 1)), and 1 for g = 0.
BigRat class_number_lower_bound(std::uint64_t q, int g);

/// Reduced Mumford pair: a monic, deg b < deg a <= g, a | b^2 - f.
struct MumfordDivisor {
    PolyA a;
    PolyA b;
    friend bool operator==(const MumfordDivisor& x, const MumfordDivisor& y) { return x.a == y.a && x.b == y.b; }
};

std::string to_string(const MumfordDivisor& d);

MumfordDivisor identity_divisor(const ImaginaryQuadExt& e);
/// Reduction of any pair with a | b^2 - f.
MumfordDivisor reduce(const ImaginaryQuadExt& e, MumfordDivisor d);
/// Cantor composition followed by reduction.
MumfordDivisor compose(const ImaginaryQuadExt& e, const MumfordDivisor& x, const MumfordDivisor& y);
MumfordDivisor inverse(const ImaginaryQuadExt& e, const MumfordDivisor& x);

struct PicGroup {
    ImaginaryQuadExt ext;
    /// Sorted by (deg a, a, b); the identity comes first.
    std::vector<MumfordDivisor> elements;

    std::size_t order() const { return elements.size(); }
    std::size_t index_of(const MumfordDivisor& d) const;
};

PicGroup pic_group(const ImaginaryQuadExt& e);

/// |(A'/cA')^×| by enumeration of residues u + v y.
BigInt maximal_residue_units(const ImaginaryQuadExt& e, const PolyA& c);

/// h · |(A'/cA')^×| / |(R/cA')^×|.
BigInt pic_order_of_order(const OrderR& r);

/// |Pic(R)| counted directly: invertible integral R-ideals of norm degree
/// at most g' + 2, grouped into classes by a principality search.
BigInt pic_order_bruteforce(const OrderR& r);

/// H^r = q^(r g') |c| with |c| = q^(2 deg c).
struct CmHeight {
    BigInt power;
    int r = 1;
};

CmHeight cm_height(const OrderR& r, int rank);

/// |Pic(R)| > C · H^(1-ε), compared with integer powers.
bool pic_lower_bound_check(const OrderR& r, int rank, const BigRat& eps, const BigRat& c_eps);

bool is_residual(const PolyA& p, const ImaginaryQuadExt& e);
bool is_residual(const PolyA& p, const OrderR& r);

/// Class of a prime above a residual p: (p, b) with b^2 = f mod p, b the
/// least root by index, or -b for the conjugate prime.
MumfordDivisor prime_class(const ImaginaryQuadExt& e, const PolyA& p, bool conjugate = false);

struct PicAction {
    std::vector<std::size_t> permutation;
    std::size_t order = 1;
};

/// g -> [P] g on the elements of G.
PicAction pic_action(const MumfordDivisor& prime, const PicGroup& g);

/// Index counts for R ⊂ A' with conductor ideal cA'.
struct ConductorIndex {
    BigInt maximal_mod_conductor;  // |A'/cA'|
    BigInt order_mod_conductor;    // |R/cA'|
    BigInt maximal_mod_order;      // |A'/R|
    bool identity = false;         // |A'/c| / |R/c| = |A'/R|
    bool chain = false;            // |A'/R|^2 >= |A'/c|
};

ConductorIndex conductor_index_identity(const OrderR& r);

}  // namespace drinfeld

#endif  // DRINFELD_CM_ORDERS_HPP
