#include "drinfeld/galois_field.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

#include "drinfeld/ff_poly.hpp"

namespace drinfeld {

namespace {

constexpr std::uint64_t kTableLimit = 1U << 16U;
constexpr unsigned kMaxDigits = 64;

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::pair<unsigned, unsigned> prime_power(std::uint64_t q) {
    auto f = prime_factors(q);
    if (q < 2 || f.size() != 1) throw std::domain_error("q = " + std::to_string(q) + " is not a prime power");
    unsigned e = 0;
    while (q > 1) {
        q /= f[0];
        ++e;
    }
    return {static_cast<unsigned>(f[0]), e};
}

bool is_irreducible_mod_p(const std::vector<unsigned>& f, unsigned p) {
    auto prime = GaloisField::make(p, 1);
    std::vector<GaloisField::Elem> c(f.begin(), f.end());
    for (auto& x : c) x %= p;
    return is_irreducible(FPoly(prime, std::move(c)));
}

GaloisField::GaloisField(unsigned p, std::vector<unsigned> modulus)
    : p_(p), k_(static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {
    pow_p_.assign(k_ + 1, 1);
    for (unsigned i = 1; i <= k_; ++i) {
        if (pow_p_[i - 1] > std::numeric_limits<std::uint64_t>::max() / p_)
            throw std::domain_error("field F_" + std::to_string(p_) + "^" + std::to_string(k_) +
                                    " exceeds the 64-bit element encoding");
        pow_p_[i] = pow_p_[i - 1] * p_;
    }
    size_ = pow_p_[k_];
    if (size_ <= kTableLimit) build_tables();
}

std::shared_ptr<const GaloisField> GaloisField::make(unsigned p, unsigned k) {
    if (!is_prime(p)) throw std::domain_error("characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw std::domain_error("field degree must be at least 1");
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const GaloisField>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({p, k});
        if (it != cache.end()) return it->second;
    }
    auto made = make_uncached(p, k);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(p, k), made).first->second;
}

std::shared_ptr<const GaloisField> GaloisField::make_uncached(unsigned p, unsigned k) {
    if (k == 1) return std::shared_ptr<const GaloisField>(new GaloisField(p, {0, 1}));
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<unsigned> m(k + 1, 0);
        std::uint64_t c = code;
        for (unsigned i = 0; i < k; ++i) {
            m[i] = static_cast<unsigned>(c % p);
            c /= p;
        }
        m[k] = 1;
        if (m[0] == 0) continue;
        if (is_irreducible_mod_p(m, p)) return std::shared_ptr<const GaloisField>(new GaloisField(p, std::move(m)));
    }
    throw std::logic_error("no irreducible polynomial found");
}

std::shared_ptr<const GaloisField> GaloisField::with_modulus(unsigned p, std::vector<unsigned> modulus) {
    if (!is_prime(p)) throw std::domain_error("characteristic is not prime");
    if (modulus.size() < 2 || modulus.back() % p != 1) throw std::domain_error("modulus must be monic of degree >= 1");
    for (auto& c : modulus) c %= p;
    if (!is_irreducible_mod_p(modulus, p)) throw std::domain_error("modulus is reducible");
    return std::shared_ptr<const GaloisField>(new GaloisField(p, std::move(modulus)));
}

void GaloisField::build_tables() {
    if (size_ <= 2) {
        log_.assign(size_, 0);
        exp_.assign(1, 1);
        return;
    }
    const std::uint64_t n = size_ - 1;
    const auto pf = prime_factors(n);
    Elem g = 1;
    for (Elem cand = 2; cand < size_; ++cand) {
        bool primitive = true;
        for (auto r : pf) {
            if (pow(cand, n / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            g = cand;
            break;
        }
    }
    std::vector<std::uint32_t> ex(n), lg(size_, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        ex[i] = static_cast<std::uint32_t>(x);
        lg[x] = static_cast<std::uint32_t>(i);
        x = mul_generic(x, g);
    }
    exp_ = std::move(ex);
    log_ = std::move(lg);
}

GaloisField::Elem GaloisField::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

std::vector<unsigned> GaloisField::digits(Elem a) const {
    std::vector<unsigned> d(k_);
    for (unsigned i = 0; i < k_; ++i) {
        d[i] = static_cast<unsigned>(a % p_);
        a /= p_;
    }
    return d;
}

GaloisField::Elem GaloisField::from_digits(std::span<const unsigned> d) const {
    Elem r = 0;
    for (std::size_t i = std::min<std::size_t>(d.size(), k_); i-- > 0;) r = r * p_ + (d[i] % p_);
    return r;
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) return (a + b) % p_;
    Elem r = 0;
    for (unsigned i = 0; i < k_ && (a | b); ++i) {
        r += ((a % p_ + b % p_) % p_) * pow_p_[i];
        a /= p_;
        b /= p_;
    }
    return r;
}

GaloisField::Elem GaloisField::neg(Elem a) const {
    if (p_ == 2) return a;
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    Elem r = 0;
    for (unsigned i = 0; i < k_ && a; ++i) {
        r += ((p_ - a % p_) % p_) * pow_p_[i];
        a /= p_;
    }
    return r;
}

GaloisField::Elem GaloisField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

GaloisField::Elem GaloisField::mul_generic(Elem a, Elem b) const {
    if (k_ == 1) return (a * b) % p_;
    unsigned da[kMaxDigits], db[kMaxDigits];
    std::uint64_t prod[2 * kMaxDigits] = {};
    unsigned na = 0, nb = 0;
    while (a) {
        da[na++] = static_cast<unsigned>(a % p_);
        a /= p_;
    }
    while (b) {
        db[nb++] = static_cast<unsigned>(b % p_);
        b /= p_;
    }
    if (na == 0 || nb == 0) return 0;
    for (unsigned i = 0; i < na; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < nb; ++j) prod[i + j] += da[i] * db[j];
    }
    const unsigned top = na + nb - 1;
    for (unsigned i = 0; i < top; ++i) prod[i] %= p_;
    for (unsigned i = top; i-- > k_;) {
        const std::uint64_t c = prod[i] % p_;
        if (!c) continue;
        const std::uint64_t sub = p_ - c;  // add (p - c) * m_j to cancel c * z^i
        for (unsigned j = 0; j < k_; ++j) {
            if (modulus_[j]) prod[i - k_ + j] = (prod[i - k_ + j] + sub * modulus_[j]) % p_;
        }
        prod[i] = 0;
    }
    Elem r = 0;
    for (unsigned i = std::min(top, k_); i-- > 0;) r = r * p_ + (prod[i] % p_);
    return r;
}

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) {
        std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
        const std::uint64_t n = size_ - 1;
        if (s >= n) s -= n;
        return exp_[s];
    }
    return mul_generic(a, b);
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t n = size_ - 1;
    e %= n;
    if (e == 0) return 1;
    if (!exp_.empty()) {
        const auto s = static_cast<unsigned __int128>(log_[a]) * e % n;
        return exp_[static_cast<std::uint64_t>(s)];
    }
    Elem r = 1;
    while (e) {
        if (e & 1U) r = mul(r, a);
        e >>= 1U;
        if (e) a = mul(a, a);
    }
    return r;
}

GaloisField::Elem GaloisField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(size_));
    if (!exp_.empty()) {
        const std::uint64_t n = size_ - 1;
        return exp_[(n - log_[a]) % n];
    }
    return pow(a, size_ - 2);
}

GaloisField::Elem GaloisField::frobenius(Elem a, unsigned i) const {
    i %= k_;
    for (unsigned s = 0; s < i; ++s) a = pow(a, p_);
    return a;
}

std::uint64_t GaloisField::order(Elem a) const {
    if (a == 0) throw std::domain_error("order of zero");
    std::uint64_t n = size_ - 1;
    for (auto r : prime_factors(size_ - 1)) {
        while (n % r == 0 && pow(a, n / r) == 1) n /= r;
    }
    return n;
}

std::string GaloisField::to_string(Elem a, const std::string& symbol) const {
    if (a == 0) return "0";
    const auto d = digits(a);
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (!d[i]) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(d[i]);
            continue;
        }
        if (d[i] != 1) out += std::to_string(d[i]) + "*";
        out += symbol;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

FieldEmbedding::FieldEmbedding(FieldPtr src, FieldPtr dst, GaloisField::Elem generator_image)
    : src_(std::move(src)), dst_(std::move(dst)), gen_image_(generator_image) {
    if (src_->characteristic() != dst_->characteristic())
        throw std::domain_error("embedding between fields of different characteristic");
    const unsigned ks = src_->degree();
    const unsigned kd = dst_->degree();
    const unsigned p = src_->characteristic();
    basis_images_.resize(ks);
    GaloisField::Elem x = 1;
    for (unsigned i = 0; i < ks; ++i) {
        basis_images_[i] = x;
        x = dst_->mul(x, gen_image_);
    }
    // row reduction of the image vectors, tracking source coordinates
    std::vector<std::vector<unsigned>> rows, coords;
    for (unsigned i = 0; i < ks; ++i) {
        rows.push_back(dst_->digits(basis_images_[i]));
        std::vector<unsigned> c(ks, 0);
        c[i] = 1;
        coords.push_back(std::move(c));
    }
    auto inv_mod = [p](unsigned a) {
        for (unsigned b = 1; b < p; ++b)
            if (a * b % p == 1) return b;
        throw std::domain_error("no inverse mod p");
    };
    std::size_t r = 0;
    for (unsigned col = 0; col < kd && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        std::swap(coords[r], coords[piv]);
        const unsigned iv = inv_mod(rows[r][col]);
        for (auto& v : rows[r]) v = v * iv % p;
        for (auto& v : coords[r]) v = v * iv % p;
        for (std::size_t o = 0; o < rows.size(); ++o) {
            if (o == r || rows[o][col] == 0) continue;
            const unsigned f = rows[o][col];
            for (unsigned j = 0; j < kd; ++j) rows[o][j] = (rows[o][j] + (p - f) * rows[r][j]) % p;
            for (unsigned j = 0; j < ks; ++j) coords[o][j] = (coords[o][j] + (p - f) * coords[r][j]) % p;
        }
        pivot_cols_.push_back(static_cast<int>(col));
        ++r;
    }
    if (r != ks) throw std::domain_error("generator image does not define an embedding");
    rref_rows_ = std::move(rows);
    rref_coords_ = std::move(coords);
}

FieldEmbedding FieldEmbedding::canonical(FieldPtr src, FieldPtr dst) {
    if (dst->degree() % src->degree() != 0 || dst->characteristic() != src->characteristic())
        throw std::domain_error("F_" + std::to_string(src->size()) + " does not embed in F_" +
                                std::to_string(dst->size()));
    if (src->degree() == 1) return FieldEmbedding(src, dst, 0);
    std::vector<GaloisField::Elem> m;
    for (auto c : src->modulus()) m.push_back(dst->from_int(c));
    const auto rts = roots(FPoly(dst, std::move(m)));
    if (rts.empty()) throw std::logic_error("modulus has no root in the extension");
    return FieldEmbedding(src, dst, rts.front());
}

FieldEmbedding FieldEmbedding::identity(FieldPtr f) {
    const auto g = f->degree() == 1 ? GaloisField::Elem{0} : f->generator();
    return FieldEmbedding(f, f, g);
}

GaloisField::Elem FieldEmbedding::operator()(GaloisField::Elem a) const {
    if (src_ == dst_ && src_->degree() > 1 && gen_image_ == src_->generator()) return a;
    const unsigned p = src_->characteristic();
    GaloisField::Elem r = 0;
    for (unsigned i = 0; i < src_->degree() && a; ++i) {
        const auto d = static_cast<long long>(a % p);
        a /= p;
        if (d) r = dst_->add(r, dst_->mul(dst_->from_int(d), basis_images_[i]));
    }
    return r;
}

bool FieldEmbedding::preimage(GaloisField::Elem a, GaloisField::Elem& out) const {
    const unsigned p = src_->characteristic();
    auto v = dst_->digits(a);
    std::vector<unsigned> c(src_->degree(), 0);
    for (std::size_t r = 0; r < pivot_cols_.size(); ++r) {
        const unsigned f = v[static_cast<std::size_t>(pivot_cols_[r])];
        if (!f) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + (p - f) * rref_rows_[r][j]) % p;
        for (std::size_t j = 0; j < c.size(); ++j) c[j] = (c[j] + f * rref_coords_[r][j]) % p;
    }
    if (std::any_of(v.begin(), v.end(), [](unsigned x) { return x != 0; })) return false;
    out = src_->from_digits(c);
    return true;
}

FieldEmbedding FieldEmbedding::then(const FieldEmbedding& next) const {
    if (next.src_ != dst_) throw std::domain_error("embedding composition mismatch");
    return FieldEmbedding(src_, next.dst_, next(gen_image_));
}

}  // namespace drinfeld
