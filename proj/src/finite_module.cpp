#include "drinfeld/finite_module.hpp"

#include <sstream>
#include <stdexcept>

namespace drinfeld {

MatA::MatA(FieldPtr fq, std::size_t rows, std::size_t cols)
    : fq_(std::move(fq)), rows_(rows), cols_(cols), e_(rows, std::vector<PolyA>(cols, PolyA(fq_))) {}

MatA::MatA(FieldPtr fq, std::vector<std::vector<PolyA>> entries) : fq_(std::move(fq)), e_(std::move(entries)) {
    rows_ = e_.size();
    cols_ = rows_ ? e_[0].size() : 0;
    for (const auto& r : e_)
        if (r.size() != cols_) throw std::invalid_argument("matrix rows have different lengths");
}

MatA MatA::identity(FieldPtr fq, std::size_t n) {
    MatA m(fq, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = PolyA::one(fq);
    return m;
}

MatA operator*(const MatA& a, const MatA& b) {
    if (a.cols_ != b.rows_) throw std::domain_error("matrix dimensions do not match");
    MatA r(a.fq_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.e_[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r.e_[i][j] += a.e_[i][k] * b.e_[k][j];
        }
    return r;
}

PolyA MatA::determinant() const {
    if (rows_ != cols_) throw std::domain_error("determinant of a non-square matrix");
    if (rows_ == 0) return PolyA::one(fq_);
    if (rows_ == 1) return e_[0][0];
    PolyA det(fq_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (e_[0][j].is_zero()) continue;
        std::vector<std::vector<PolyA>> minor;
        for (std::size_t i = 1; i < rows_; ++i) {
            std::vector<PolyA> row;
            for (std::size_t k = 0; k < cols_; ++k)
                if (k != j) row.push_back(e_[i][k]);
            minor.push_back(std::move(row));
        }
        PolyA term = e_[0][j] * MatA(fq_, std::move(minor)).determinant();
        if (j % 2) det -= term;
        else det += term;
    }
    return det;
}

MatA parse_mat_a(const FieldPtr& fq, const std::string& text, const DeskLimits& limits) {
    std::vector<std::vector<PolyA>> rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
        std::vector<PolyA> r;
        std::stringstream es(row);
        std::string entry;
        while (std::getline(es, entry, ',')) r.push_back(parse_poly(fq, entry, "T", limits));
        if (r.empty()) throw std::invalid_argument("empty matrix row in \"" + text + "\"");
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    return MatA(fq, std::move(rows));
}

std::string to_string(const MatA& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += ";";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ",";
            out += to_string(m.at(i, j));
        }
    }
    return out;
}

namespace {

struct SnfWork {
    std::vector<std::vector<PolyA>> a, u, v;
    std::size_t rows, cols;

    void swap_rows(std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (auto& r : a) std::swap(r[i], r[j]);
        for (auto& r : v) std::swap(r[i], r[j]);
    }
    // row_i += c * row_t
    void add_row(std::size_t i, std::size_t t, const PolyA& c) {
        for (std::size_t k = 0; k < cols; ++k) a[i][k] += c * a[t][k];
        for (std::size_t k = 0; k < rows; ++k) u[i][k] += c * u[t][k];
    }
    // col_j += c * col_t
    void add_col(std::size_t j, std::size_t t, const PolyA& c) {
        for (std::size_t k = 0; k < rows; ++k) a[k][j] += c * a[k][t];
        for (std::size_t k = 0; k < cols; ++k) v[k][j] += c * v[k][t];
    }
};

}  // namespace

SmithForm smith_normal_form(const MatA& m) {
    const auto& fq = m.field();
    SnfWork w{m.entries(), MatA::identity(fq, m.rows()).entries(), MatA::identity(fq, m.cols()).entries(), m.rows(),
              m.cols()};
    const std::size_t n = std::min(w.rows, w.cols);
    std::vector<PolyA> factors;
    for (std::size_t t = 0; t < n; ++t) {
        bool zero_rest = false;
        while (true) {
            int best = -1;
            std::size_t bi = 0, bj = 0;
            for (std::size_t i = t; i < w.rows; ++i)
                for (std::size_t j = t; j < w.cols; ++j)
                    if (!w.a[i][j].is_zero() && (best < 0 || w.a[i][j].degree() < best)) {
                        best = w.a[i][j].degree();
                        bi = i;
                        bj = j;
                    }
            if (best < 0) {
                zero_rest = true;
                break;
            }
            w.swap_rows(t, bi);
            w.swap_cols(t, bj);
            bool clean = true;
            for (std::size_t i = t + 1; i < w.rows; ++i) {
                if (w.a[i][t].is_zero()) continue;
                w.add_row(i, t, -(w.a[i][t] / w.a[t][t]));
                if (!w.a[i][t].is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < w.cols; ++j) {
                if (w.a[t][j].is_zero()) continue;
                w.add_col(j, t, -(w.a[t][j] / w.a[t][t]));
                if (!w.a[t][j].is_zero()) clean = false;
            }
            if (!clean) continue;
            bool divides = true;
            for (std::size_t i = t + 1; i < w.rows && divides; ++i)
                for (std::size_t j = t + 1; j < w.cols; ++j)
                    if (!(w.a[i][j] % w.a[t][t]).is_zero()) {
                        w.add_row(t, i, PolyA::one(fq));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (zero_rest) {
            for (std::size_t k = t; k < n; ++k) factors.push_back(PolyA(fq));
            break;
        }
        const auto li = fq->inv(w.a[t][t].leading());
        for (auto& x : w.a[t]) x = x.scaled(li);
        for (auto& x : w.u[t]) x = x.scaled(li);
        factors.push_back(w.a[t][t]);
    }
    return SmithForm{std::move(factors), MatA(fq, std::move(w.u)), MatA(fq, std::move(w.v))};
}

FiniteAModule::FiniteAModule(FieldPtr fq, std::vector<PolyA> invariant_factors) : fq_(std::move(fq)) {
    for (auto& d : invariant_factors) {
        if (d.is_zero()) throw std::domain_error("infinite module: zero invariant factor");
        if (d.degree() > 0) d_.push_back(d.monic());
    }
    for (std::size_t i = 1; i < d_.size(); ++i)
        if (!(d_[i] % d_[i - 1]).is_zero()) throw std::domain_error("invariant factors do not form a divisibility chain");
}

FiniteAModule FiniteAModule::from_relations(const MatA& relations) {
    const auto snf = smith_normal_form(relations);
    if (relations.rows() < relations.cols())
        throw std::domain_error("sub-module is not of finite index: fewer relations than generators");
    for (const auto& d : snf.factors)
        if (d.is_zero()) throw std::domain_error("sub-module is not of finite index");
    return FiniteAModule(relations.field(), snf.factors);
}

FiniteAModule FiniteAModule::free_over(const PolyA& n, int r) {
    if (n.is_zero()) throw std::domain_error("free module over A/0 is infinite");
    return FiniteAModule(n.field(), std::vector<PolyA>(static_cast<std::size_t>(r), n.monic()));
}

int FiniteAModule::log_q_cardinality() const {
    int s = 0;
    for (const auto& d : d_) s += d.degree();
    return s;
}

BigInt FiniteAModule::cardinality() const {
    return big_pow(BigInt(fq_->size()), static_cast<std::uint64_t>(log_q_cardinality()));
}

std::string to_string(const FiniteAModule& m) {
    if (m.invariant_factors().empty()) return "0";
    std::string out;
    for (const auto& d : m.invariant_factors()) {
        if (!out.empty()) out += " + ";
        out += "A/(" + to_string(d) + ")";
    }
    return out;
}

namespace {

void check_rank(int r) {
    if (r < 1) throw std::domain_error("rank must be ≥ 1");
}

}  // namespace

BigInt psi_r(const IdealA& n, int r) {
    check_rank(r);
    const BigInt N = ideal_norm(n);
    BigRat value(big_pow(N, static_cast<std::uint64_t>(r - 1)));
    if (n.degree() > 0) {
        for (const auto& [p, mult] : factor(n.generator())) {
            (void)mult;
            const BigInt P = ideal_norm(IdealA(p));
            const BigInt Pr = big_pow(P, static_cast<std::uint64_t>(r));
            const BigInt Pr1 = big_pow(P, static_cast<std::uint64_t>(r - 1));
            value *= BigRat(Pr - 1, Pr - Pr1);
        }
    }
    if (denominator(value) != 1) throw std::logic_error("psi_r is not an integer");
    return numerator(value);
}

namespace {

// For each residue mod n (in index order), the bitmask of primes of n dividing it.
std::vector<std::uint32_t> divisibility_masks(const IdealA& n, std::uint64_t count) {
    std::vector<PolyA> primes;
    if (n.degree() > 0)
        for (const auto& [p, m] : factor(n.generator())) {
            (void)m;
            primes.push_back(p);
        }
    if (primes.size() > 31) throw std::domain_error("too many prime factors");
    std::vector<std::uint32_t> masks(count, 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const PolyA x = poly_from_index(n.field(), idx, n.degree());
        for (std::size_t k = 0; k < primes.size(); ++k)
            if ((x % primes[k]).is_zero()) masks[idx] |= 1U << k;
    }
    return masks;
}

}  // namespace

BigInt unit_count(const IdealA& n) {
    if (n.is_zero()) throw std::domain_error("unit group of A/0");
    const BigInt size = ideal_norm(n);
    check_budget(size, "enumerating residues mod " + to_string(n.generator()));
    const auto masks = divisibility_masks(n, static_cast<std::uint64_t>(size));
    BigInt units = 0;
    for (auto m : masks)
        if (m == 0) ++units;
    return units;
}

BigInt count_cyclic_submodules(const IdealA& n, int r) {
    check_rank(r);
    if (n.is_zero()) throw std::domain_error("cyclic submodules of a zero ideal quotient");
    const BigInt N = ideal_norm(n);
    const BigInt total = big_pow(N, static_cast<std::uint64_t>(r));
    check_budget(total, "enumerating (A/n)^r");
    const auto count = static_cast<std::uint64_t>(N);
    const auto masks = divisibility_masks(n, count);
    // x has exact order n iff no prime of n divides every coordinate
    std::uint64_t exact = 0;
    const auto all = static_cast<std::uint64_t>(total);
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(r), 0);
    for (std::uint64_t idx = 0; idx < all; ++idx) {
        std::uint32_t common = ~0U;
        for (int k = 0; k < r; ++k) common &= masks[digits[static_cast<std::size_t>(k)]];
        if (common == 0) ++exact;
        for (std::size_t k = 0; k < digits.size(); ++k) {
            if (++digits[k] < count) break;
            digits[k] = 0;
        }
    }
    std::uint64_t units = 0;
    for (auto m : masks)
        if (m == 0) ++units;
    if (exact % units != 0) throw std::logic_error("exact-order count is not a multiple of the unit count");
    return BigInt(exact / units);
}

BigInt module_index(const MatA& sub) {
    return FiniteAModule::from_relations(sub).cardinality();
}

bool row_span_contains(const MatA& sup, const MatA& sub) {
    if (sup.cols() != sub.cols()) throw std::domain_error("row spans in different ambient modules");
    const auto snf = smith_normal_form(sup);
    const MatA xv = sub * snf.right;
    for (std::size_t i = 0; i < xv.rows(); ++i)
        for (std::size_t j = 0; j < xv.cols(); ++j) {
            const PolyA& x = xv.at(i, j);
            if (x.is_zero()) continue;
            if (j >= snf.factors.size() || snf.factors[j].is_zero()) return false;
            if (!(x % snf.factors[j]).is_zero()) return false;
        }
    return true;
}

BigInt module_index(const MatA& sup, const MatA& sub) {
    if (!row_span_contains(sup, sub)) throw std::domain_error("sub is not contained in sup");
    const BigInt big = module_index(sub);
    const BigInt small = module_index(sup);
    return big / small;
}

}  // namespace drinfeld
