#ifndef ICC_POLYNOMIAL_HPP
#define ICC_POLYNOMIAL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "icc/field.hpp"

namespace icc {

/// Dense polynomial over a Field.  Coefficient i is the coefficient of x^i;
/// the zero polynomial has an empty coefficient vector and degree -1.
/// Holds a pointer to the field, which must outlive the polynomial.
class Polynomial {
public:
    static Polynomial zero(const Field& f) { return Polynomial(f, {}); }
    static Polynomial one(const Field& f) { return Polynomial(f, {1}); }
    static Polynomial from_coeffs(const Field& f, std::vector<FieldElement> coeffs);
    /// x^n - 1.
    static Polynomial x_pow_minus_one(const Field& f, std::uint64_t n);

    const Field& field() const { return *field_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    FieldElement coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : 0;
    }
    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t degree() const {
        return static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    /// (quotient, remainder) with deg(remainder) < deg(rhs); rhs nonzero.
    std::pair<Polynomial, Polynomial> divrem(const Polynomial& rhs) const;
    FieldElement eval(FieldElement x) const;

    bool operator==(const Polynomial& rhs) const {
        return *field_ == *rhs.field_ && coeffs_ == rhs.coeffs_;
    }

private:
    Polynomial(const Field& f, std::vector<FieldElement> coeffs)
        : field_(&f), coeffs_(std::move(coeffs)) {}
    void check_same_field(const Polynomial& rhs) const;

    const Field* field_;
    std::vector<FieldElement> coeffs_;
};

/// Orbit of a under multiplication by q modulo N; members sorted ascending,
/// so the representative (smallest member) is members().front().
class CyclotomicCoset {
public:
    CyclotomicCoset(std::uint64_t a, std::uint64_t modulus, std::uint64_t base);

    std::uint64_t representative() const { return members_.front(); }
    const std::vector<std::uint64_t>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t base() const { return base_; }

private:
    std::uint64_t modulus_, base_;
    std::vector<std::uint64_t> members_;
};

/// Size of the coset of a mod N under multiplication by q, without
/// materializing the members.
std::uint64_t cyclotomic_coset_size(std::uint64_t a, std::uint64_t modulus,
                                    std::uint64_t base);

/// Minimal polynomial h_a of gamma^{-a} over the subfield GF(q) of f:
/// the product of (x - gamma^j) over the coset of -a mod (q^k - 1).
/// Monic, with every coefficient in GF(q); computed and returned with
/// big-field coefficient codes.
Polynomial minimal_polynomial(const Field& f, std::uint64_t a, std::uint64_t q);

}  // namespace icc

#endif
