#include "drinfeld/analytic_matrix.hpp"

#include <stdexcept>

#include "drinfeld/literal_text.hpp"

namespace drinfeld {

namespace {

// Determinant by Gaussian elimination; zero for singular input.
RatFunc determinant_of(const FieldPtr& fq, std::vector<std::vector<RatFunc>> m) {
    const std::size_t n = m.size();
    RatFunc det = RatFunc::one(fq);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return RatFunc::zero(fq);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det = det * m[c][c];
        const RatFunc inv = m[c][c].inv();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            const RatFunc factor = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - factor * m[c][j];
        }
    }
    return det;
}

RatFunc poly_pow(const PolyA& base, long long e) { return RatFunc(base).pow(e); }

void check_sigma_args(int i, const PolyA& a, const PolyA& N, int r) {
    if (r < 2) throw std::domain_error("sigma generators need r ≥ 2");
    if (i < 1 || i > r - 1)
        throw std::domain_error("sigma index i = " + std::to_string(i) + " outside 1.." + std::to_string(r - 1));
    if (a.is_zero()) throw std::domain_error("sigma generators need a ≠ 0");
    if (N.degree() < 1) throw std::domain_error("N must be nonconstant");
}

MatK sigma_first(long long n, const PolyA& a, const PolyA& N, int r) {
    const FieldPtr& fq = a.field();
    const auto rs = static_cast<std::size_t>(r);
    std::vector<RatFunc> d(rs, RatFunc::one(fq));
    d[0] = RatFunc(N);
    const MatK t = MatK::diagonal(fq, d);
    return t.pow(-n) * MatK::elementary(fq, rs, 1, rs, RatFunc(a)) * t.pow(n);
}

}  // namespace

MatK::MatK(FieldPtr fq, std::vector<std::vector<RatFunc>> entries) : fq_(std::move(fq)), e_(std::move(entries)), det_(RatFunc::zero(fq_)) {
    if (e_.empty()) throw std::domain_error("empty matrix");
    for (const auto& row : e_)
        if (row.size() != e_.size()) throw std::domain_error("matrix over K must be square");
    det_ = determinant_of(fq_, e_);
    if (det_.is_zero()) throw std::domain_error("matrix is singular");
}

MatK MatK::identity(FieldPtr fq, std::size_t r) {
    return diagonal(fq, std::vector<RatFunc>(r, RatFunc::one(fq)));
}

MatK MatK::diagonal(FieldPtr fq, const std::vector<RatFunc>& d) {
    std::vector<std::vector<RatFunc>> e(d.size(), std::vector<RatFunc>(d.size(), RatFunc::zero(fq)));
    for (std::size_t i = 0; i < d.size(); ++i) e[i][i] = d[i];
    return MatK(std::move(fq), std::move(e));
}

MatK MatK::elementary(FieldPtr fq, std::size_t r, std::size_t i, std::size_t j, const RatFunc& c) {
    if (i == j || i < 1 || j < 1 || i > r || j > r) throw std::domain_error("elementary matrix needs distinct indices in range");
    std::vector<std::vector<RatFunc>> e(r, std::vector<RatFunc>(r, RatFunc::zero(fq)));
    for (std::size_t k = 0; k < r; ++k) e[k][k] = RatFunc::one(fq);
    e[i - 1][j - 1] = c;
    return MatK(std::move(fq), std::move(e));
}

MatK operator*(const MatK& a, const MatK& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::domain_error("matrix size mismatch");
    std::vector<std::vector<RatFunc>> e(n, std::vector<RatFunc>(n, RatFunc::zero(a.fq_)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a.e_[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) e[i][j] = e[i][j] + a.e_[i][k] * b.e_[k][j];
        }
    return MatK(a.fq_, std::move(e));
}

MatK MatK::inverse() const {
    const std::size_t n = size();
    std::vector<std::vector<RatFunc>> m = e_;
    std::vector<std::vector<RatFunc>> inv = identity(fq_, n).e_;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (m[piv][c].is_zero()) ++piv;
        std::swap(m[piv], m[c]);
        std::swap(inv[piv], inv[c]);
        const RatFunc s = m[c][c].inv();
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] = m[c][j] * s;
            inv[c][j] = inv[c][j] * s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c].is_zero()) continue;
            const RatFunc f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] = m[i][j] - f * m[c][j];
                inv[i][j] = inv[i][j] - f * inv[c][j];
            }
        }
    }
    return MatK(fq_, std::move(inv));
}

MatK MatK::pow(long long n) const {
    if (n < 0) return inverse().pow(-n);
    MatK result = identity(fq_, size());
    MatK base = *this;
    for (auto e = static_cast<unsigned long long>(n); e > 0; e >>= 1) {
        if (e & 1) result = result * base;
        if (e > 1) base = base * base;
    }
    return result;
}

MatK parse_mat_k(const FieldPtr& fq, const std::string& text, const DeskLimits& limits) {
    std::vector<std::vector<RatFunc>> e;
    for (const auto& row : split(text, ';')) {
        std::vector<RatFunc> r;
        for (const auto& cell : split(row, ',')) r.push_back(parse_ratfunc(fq, cell, "T", limits));
        e.push_back(std::move(r));
    }
    return MatK(fq, std::move(e));
}

std::string to_string(const MatK& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j) out += ", ";
            out += to_string(m.at(i, j));
        }
    }
    return out;
}

std::string to_string(const AffinePoint& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ", ";
        out += to_string(w[i]);
    }
    return out + ")";
}

AffinePoint mobius_action(const MatK& g, const AffinePoint& w) {
    const std::size_t r = g.size();
    if (w.size() + 1 != r) throw std::domain_error("affine point has the wrong number of coordinates");
    const FieldPtr& fq = g.field();
    std::vector<RatFunc> v = w;
    v.push_back(RatFunc::one(fq));
    std::vector<RatFunc> img(r, RatFunc::zero(fq));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) img[i] = img[i] + g.at(i, j) * v[j];
    if (img.back().is_zero()) throw std::domain_error("image lies at infinity of the affine chart omega_r = 1");
    const RatFunc s = img.back().inv();
    AffinePoint out;
    for (std::size_t i = 0; i + 1 < r; ++i) out.push_back(img[i] * s);
    return out;
}

MatK sigma_generator(int i, long long n, const PolyA& a, const PolyA& N, int r) {
    check_sigma_args(i, a, N, r);
    MatK s = sigma_first(n, a, N, r);
    const auto rs = static_cast<std::size_t>(r);
    const FieldPtr& fq = a.field();
    for (int k = 2; k <= i; ++k) {
        const auto ks = static_cast<std::size_t>(k);
        s = MatK::elementary(fq, rs, ks, ks - 1, RatFunc(-a)) * s.inverse() * MatK::elementary(fq, rs, ks, ks - 1, RatFunc(a)) * s;
    }
    return s;
}

MatK sigma_generator_via_first(int i, long long n, const PolyA& a, const PolyA& N, int r) {
    check_sigma_args(i, a, N, r);
    if (i == 1) return sigma_first(n, a, N, r);
    const auto rs = static_cast<std::size_t>(r);
    const auto is = static_cast<std::size_t>(i);
    const FieldPtr& fq = a.field();
    return MatK::elementary(fq, rs, is, 1, RatFunc(-a)) * sigma_first(n, -a, N, r) *
           MatK::elementary(fq, rs, is, 1, RatFunc(a)) * sigma_first(n, a, N, r);
}

bool verify_translation(int i, long long n, const PolyA& a, const PolyA& N, int r, const AffinePoint& w) {
    const AffinePoint img = mobius_action(sigma_generator(i, n, a, N, r), w);
    AffinePoint expected = w;
    expected[static_cast<std::size_t>(i) - 1] = expected[static_cast<std::size_t>(i) - 1] + poly_pow(a, i) * poly_pow(N, -n);
    return img == expected;
}

}  // namespace drinfeld
