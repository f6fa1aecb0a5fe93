#ifndef ICC_FIELD_HPP
#define ICC_FIELD_HPP

#include <cstdint>
#include <vector>

namespace icc {

/// Integer code of a field element: the base-p digits c_0..c_{m-1} of the
/// residue-class representative, packed as code = sum c_i * p^i.
/// Code 0 is the additive zero, code 1 the multiplicative one.
using FieldElement = std::uint32_t;

/// Default cap on field size and on codeword enumeration (2^21 elements).
inline constexpr std::uint64_t kDefaultSizeBound = std::uint64_t{1} << 21;

bool is_prime(std::uint64_t v);

/// GF(p^m) with full log/antilog tables over a fixed primitive element.
///
/// Construction is deterministic: the modulus is the lexicographically
/// smallest monic irreducible of degree m over GF(p), comparing coefficient
/// tuples (c_{m-1}, ..., c_0) as integers, and the primitive element is the
/// element of smallest code with multiplicative order p^m - 1.  For m = 1
/// the modulus is the placeholder x and arithmetic is integers mod p.
///
/// Instances are immutable after construction and safe to share across
/// threads.
class Field {
public:
    Field(std::uint32_t p, std::uint32_t m,
          std::uint64_t size_bound = kDefaultSizeBound);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint64_t size() const { return size_; }
    /// Order of the multiplicative group, p^m - 1.
    std::uint64_t group_order() const { return size_ - 1; }
    /// Modulus coefficients over GF(p), index i = coefficient of x^i.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    FieldElement primitive_element() const { return gamma_; }

    FieldElement add(FieldElement x, FieldElement y) const;
    FieldElement sub(FieldElement x, FieldElement y) const;
    FieldElement neg(FieldElement x) const;
    FieldElement mul(FieldElement x, FieldElement y) const;
    FieldElement inv(FieldElement x) const;
    /// x^e with e reduced modulo the group order; negative e allowed for
    /// nonzero x.  0^0 = 1 by convention.
    FieldElement pow(FieldElement x, std::int64_t e) const;

    /// Discrete log base the primitive element; x must be nonzero.
    std::uint64_t log(FieldElement x) const;
    /// gamma^e, e reduced modulo the group order.
    FieldElement exp(std::uint64_t e) const;
    /// Smallest d >= 1 with x^d = 1; x must be nonzero.
    std::uint64_t element_order(FieldElement x) const;

    /// True when q = p^t with t dividing m, i.e. GF(q) sits inside this field.
    bool is_subfield_size(std::uint64_t q) const;
    /// Membership of x in the subfield GF(q): x = 0 or (q^k-1)/(q-1) | log(x).
    bool in_subfield(FieldElement x, std::uint64_t q) const;
    /// Tr(x) = x + x^q + ... + x^{q^(k-1)}, landing in GF(q); requires
    /// q^k = size().
    FieldElement trace_to_subfield(FieldElement x, std::uint64_t q,
                                   std::uint32_t k) const;
    /// All elements of the subfield GF(q), sorted by code.
    std::vector<FieldElement> subfield_elements(std::uint64_t q) const;

    /// Same field, same modulus, log/antilog tables rebuilt on a
    /// caller-chosen primitive element.  gamma must have full order.
    Field rebased(FieldElement gamma) const;

    /// Same (p, m, modulus, primitive element); implies identical tables.
    bool operator==(const Field& other) const;

private:
    Field() = default;
    void build_tables();

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint64_t size_ = 0;
    std::vector<std::uint32_t> modulus_;
    FieldElement gamma_ = 0;
    std::vector<FieldElement> antilog_;   // antilog_[i] = gamma^i, i in [0, size-1)
    std::vector<std::uint32_t> log_;      // inverse of antilog_; log_[0] unused
};

}  // namespace icc

#endif
