#ifndef DRINFELD_GALOIS_FIELD_HPP
#define DRINFELD_GALOIS_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace drinfeld {

/// Finite field F_{p^k} = F_p[z]/(m(z)).
///
/// Elements are encoded as unsigned integers whose base-p digits are the
/// coefficients of the reduced polynomial in z (digit i <-> z^i). The zero
/// element is 0 and the one element is 1. Every integer below size() is a
/// valid encoding, so iterating 0..size()-1 walks the whole field in a fixed
/// order.
class GaloisField {
  public:
    using Elem = std::uint64_t;

    /// Field with the canonical modulus: the monic irreducible of degree k
    /// whose non-leading coefficients, read as a base-p integer, are least.
    static std::shared_ptr<const GaloisField> make(unsigned p, unsigned k);

    /// Field with an explicit monic modulus (coefficients low to high,
    /// including the leading 1). Throws if the modulus is reducible.
    static std::shared_ptr<const GaloisField> with_modulus(unsigned p, std::vector<unsigned> modulus);

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint64_t size() const { return size_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    /// The class of z.
    Elem generator() const { return k_ == 1 ? 0 : p_; }
    Elem from_int(long long v) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    /// a^(p^i) for the absolute Frobenius.
    Elem frobenius(Elem a, unsigned i = 1) const;
    bool is_zero(Elem a) const { return a == 0; }
    bool equal(Elem a, Elem b) const { return a == b; }

    std::vector<unsigned> digits(Elem a) const;
    Elem from_digits(std::span<const unsigned> d) const;

    /// Multiplicative order of a nonzero element.
    std::uint64_t order(Elem a) const;

    /// Text form: polynomial in `symbol` with integer coefficients in [0, p).
    std::string to_string(Elem a, const std::string& symbol) const;

  private:
    GaloisField(unsigned p, std::vector<unsigned> modulus);
    static std::shared_ptr<const GaloisField> make_uncached(unsigned p, unsigned k);
    void build_tables();
    Elem mul_generic(Elem a, Elem b) const;

    unsigned p_ = 2;
    unsigned k_ = 1;
    std::uint64_t size_ = 2;
    std::vector<unsigned> modulus_;
    std::vector<std::uint64_t> pow_p_;
    // log/antilog tables for small fields
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// Monic irreducibility over F_p (Rabin's test). Coefficients low to high.
bool is_irreducible_mod_p(const std::vector<unsigned>& f, unsigned p);

/// Least prime-power factorisation helpers.
bool is_prime(std::uint64_t n);
/// Returns (p, e) with q = p^e, or throws std::domain_error.
std::pair<unsigned, unsigned> prime_power(std::uint64_t q);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// F_p-linear embedding src -> dst fixed by the image of src's generator.
class FieldEmbedding {
  public:
    FieldEmbedding() = default;
    FieldEmbedding(FieldPtr src, FieldPtr dst, GaloisField::Elem generator_image);

    /// Embedding sending the generator of src to the least root (by encoding)
    /// of src's modulus in dst.
    static FieldEmbedding canonical(FieldPtr src, FieldPtr dst);
    static FieldEmbedding identity(FieldPtr f);

    GaloisField::Elem operator()(GaloisField::Elem a) const;
    /// Preimage if a lies in the image, otherwise false.
    bool preimage(GaloisField::Elem a, GaloisField::Elem& out) const;

    const FieldPtr& source() const { return src_; }
    const FieldPtr& target() const { return dst_; }
    GaloisField::Elem generator_image() const { return gen_image_; }

    /// this followed by next.
    FieldEmbedding then(const FieldEmbedding& next) const;

  private:
    FieldPtr src_;
    FieldPtr dst_;
    GaloisField::Elem gen_image_ = 0;
    std::vector<GaloisField::Elem> basis_images_;
    // rref of the image basis, used for preimages
    std::vector<std::vector<unsigned>> rref_rows_;
    std::vector<std::vector<unsigned>> rref_coords_;
    std::vector<int> pivot_cols_;
};

}  // namespace drinfeld

#endif  // DRINFELD_GALOIS_FIELD_HPP
