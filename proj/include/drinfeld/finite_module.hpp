#ifndef DRINFELD_FINITE_MODULE_HPP
#define DRINFELD_FINITE_MODULE_HPP

#include <string>
#include <vector>

#include "base_ring.hpp"

namespace drinfeld {

/// Dense matrix over A = F_q[T].
class MatA {
  public:
    MatA(FieldPtr fq, std::size_t rows, std::size_t cols);
    MatA(FieldPtr fq, std::vector<std::vector<PolyA>> entries);
    static MatA identity(FieldPtr fq, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return fq_; }
    PolyA& at(std::size_t i, std::size_t j) { return e_[i][j]; }
    const PolyA& at(std::size_t i, std::size_t j) const { return e_[i][j]; }
    const std::vector<std::vector<PolyA>>& entries() const { return e_; }

    friend MatA operator*(const MatA& a, const MatA& b);
    friend bool operator==(const MatA& a, const MatA& b) { return a.e_ == b.e_; }

    /// Determinant by fraction-free cofactor expansion (small sizes).
    PolyA determinant() const;

  private:
    FieldPtr fq_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<PolyA>> e_;
};

/// Rows separated by ';', entries by ','.
MatA parse_mat_a(const FieldPtr& fq, const std::string& text, const DeskLimits& limits = {});
std::string to_string(const MatA& m);

struct SmithForm {
    /// min(rows, cols) diagonal entries: monic, d_i | d_(i+1), zeros last.
    std::vector<PolyA> factors;
    MatA left;   // U
    MatA right;  // V, with U M V = diag(factors)
};

SmithForm smith_normal_form(const MatA& m);

/// Finite A-module ⊕ A/(d_i) with monic nonconstant d_1 | ... | d_k.
class FiniteAModule {
  public:
    FiniteAModule(FieldPtr fq, std::vector<PolyA> invariant_factors);
    /// A^n modulo the row span of `relations`. Throws if the quotient is
    /// infinite.
    static FiniteAModule from_relations(const MatA& relations);
    /// (A/n)^r.
    static FiniteAModule free_over(const PolyA& n, int r);

    const std::vector<PolyA>& invariant_factors() const { return d_; }
    BigInt cardinality() const;
    /// Σ deg d_i.
    int log_q_cardinality() const;
    bool is_cyclic() const { return d_.size() <= 1; }
    const FieldPtr& field() const { return fq_; }

    friend bool operator==(const FiniteAModule& a, const FiniteAModule& b) { return a.d_ == b.d_; }

  private:
    FieldPtr fq_;
    std::vector<PolyA> d_;
};

std::string to_string(const FiniteAModule& m);

/// ψ_r(n) = |n|^(r-1) ∏_{p | n} (|p|^r - 1)/(|p|^r - |p|^(r-1)).
BigInt psi_r(const IdealA& n, int r);

/// Number of submodules of (A/n)^r isomorphic to A/n: elements of exact
/// order n, enumerated, divided by |(A/n)^×|.
BigInt count_cyclic_submodules(const IdealA& n, int r);

/// |(A/n)^×| by enumeration of residues.
BigInt unit_count(const IdealA& n);

/// Index |A^k / sub| of the row span of `sub`, a square or tall matrix of
/// full column rank.
BigInt module_index(const MatA& sub);
/// Index |sup / sub| for row spans sub ⊆ sup of full rank in A^k.
BigInt module_index(const MatA& sup, const MatA& sub);

/// Whether each row of `sub` lies in the A-row span of `sup`.
bool row_span_contains(const MatA& sup, const MatA& sub);

}  // namespace drinfeld

#endif  // DRINFELD_FINITE_MODULE_HPP
