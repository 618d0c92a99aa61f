#ifndef DRINFELD_ANALYTIC_MATRIX_HPP
#define DRINFELD_ANALYTIC_MATRIX_HPP

#include <string>
#include <vector>

#include "base_ring.hpp"

namespace drinfeld {

/// Invertible r×r matrix over K = F_q(T).
class MatK {
  public:
    MatK(FieldPtr fq, std::vector<std::vector<RatFunc>> entries);
    static MatK identity(FieldPtr fq, std::size_t r);
    static MatK diagonal(FieldPtr fq, const std::vector<RatFunc>& d);
    /// I + c·δ_ij (1-based indices), i ≠ j.
    static MatK elementary(FieldPtr fq, std::size_t r, std::size_t i, std::size_t j, const RatFunc& c);

    std::size_t size() const { return e_.size(); }
    const FieldPtr& field() const { return fq_; }
    const RatFunc& at(std::size_t i, std::size_t j) const { return e_[i][j]; }
    const RatFunc& determinant() const { return det_; }
    MatK inverse() const;
    MatK pow(long long n) const;

    friend MatK operator*(const MatK& a, const MatK& b);
    friend bool operator==(const MatK& a, const MatK& b) { return a.e_ == b.e_; }

  private:
    FieldPtr fq_;
    std::vector<std::vector<RatFunc>> e_;
    RatFunc det_;
};

/// Rows separated by ';', entries (rational functions) by ','.
MatK parse_mat_k(const FieldPtr& fq, const std::string& text, const DeskLimits& limits = {});
std::string to_string(const MatK& m);

/// Point (ω_1, ..., ω_(r-1)) of the affine chart ω_r = 1.
using AffinePoint = std::vector<RatFunc>;

std::string to_string(const AffinePoint& w);

/// g·(ω, 1) renormalized to the chart.
AffinePoint mobius_action(const MatK& g, const AffinePoint& w);

/// σ_1^n(a) = t^(-n) (1 + a δ_1r) t^n with t = diag(N, 1, ..., 1), and for
/// i >= 2 the commutator
/// σ_i^n(a) = (1 - a δ_(i,i-1)) σ_(i-1)^n(a)^(-1) (1 + a δ_(i,i-1)) σ_(i-1)^n(a),
/// which equals I + a^i N^(-n) δ_ir.
MatK sigma_generator(int i, long long n, const PolyA& a, const PolyA& N, int r);

/// The same family with every σ_i built from σ_1 and δ_(i1):
/// (1 - a δ_i1) σ_1^n(-a) (1 + a δ_i1) σ_1^n(a). Agrees with
/// sigma_generator for i <= 2 and equals I + a^2 N^(-n) δ_ir for i >= 2.
MatK sigma_generator_via_first(int i, long long n, const PolyA& a, const PolyA& N, int r);

/// mobius_action(σ_i^n(a), ω) = ω + a^i N^(-n) e_i.
bool verify_translation(int i, long long n, const PolyA& a, const PolyA& N, int r, const AffinePoint& w);

}  // namespace drinfeld

#endif  // DRINFELD_ANALYTIC_MATRIX_HPP
