#include "icc/polynomial.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace icc {

namespace {

void trim(std::vector<FieldElement>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

}  // namespace

Polynomial Polynomial::from_coeffs(const Field& f, std::vector<FieldElement> coeffs) {
    for (auto c : coeffs)
        if (c >= f.size())
            throw std::invalid_argument("coefficient code out of range");
    trim(coeffs);
    return Polynomial(f, std::move(coeffs));
}

Polynomial Polynomial::x_pow_minus_one(const Field& f, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("exponent must be >= 1");
    std::vector<FieldElement> coeffs(n + 1, 0);
    coeffs[0] = f.neg(1);
    coeffs[n] = 1;
    return Polynomial(f, std::move(coeffs));
}

void Polynomial::check_same_field(const Polynomial& rhs) const {
    if (!(*field_ == *rhs.field_))
        throw std::invalid_argument("polynomials over different fields");
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    check_same_field(rhs);
    std::vector<FieldElement> r(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = field_->add(coeff(i), rhs.coeff(i));
    trim(r);
    return Polynomial(*field_, std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    check_same_field(rhs);
    std::vector<FieldElement> r(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = field_->sub(coeff(i), rhs.coeff(i));
    trim(r);
    return Polynomial(*field_, std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    check_same_field(rhs);
    if (is_zero() || rhs.is_zero()) return zero(*field_);
    std::vector<FieldElement> r(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            r[i + j] = field_->add(r[i + j], field_->mul(coeffs_[i], rhs.coeffs_[j]));
    }
    trim(r);
    return Polynomial(*field_, std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& rhs) const {
    check_same_field(rhs);
    if (rhs.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (degree() < rhs.degree())
        return {zero(*field_), *this};

    const auto dv = static_cast<std::size_t>(rhs.degree());
    const FieldElement lead_inv = field_->inv(rhs.coeffs_.back());
    std::vector<FieldElement> rem = coeffs_;
    std::vector<FieldElement> quot(coeffs_.size() - dv, 0);
    for (std::size_t top = rem.size(); top-- > dv;) {
        if (rem[top] == 0) continue;
        const FieldElement c = field_->mul(rem[top], lead_inv);
        quot[top - dv] = c;
        for (std::size_t i = 0; i <= dv; ++i)
            rem[top - dv + i] =
                field_->sub(rem[top - dv + i], field_->mul(c, rhs.coeffs_[i]));
    }
    trim(rem);
    trim(quot);
    return {Polynomial(*field_, std::move(quot)), Polynomial(*field_, std::move(rem))};
}

FieldElement Polynomial::eval(FieldElement x) const {
    FieldElement acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = field_->add(field_->mul(acc, x), coeffs_[i]);
    return acc;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

void check_coset_args(std::uint64_t modulus, std::uint64_t base) {
    if (modulus < 1) throw std::invalid_argument("coset modulus must be >= 1");
    if (std::gcd(base % modulus, modulus) != 1)
        throw std::invalid_argument("coset base must be coprime to the modulus");
}

}  // namespace

CyclotomicCoset::CyclotomicCoset(std::uint64_t a, std::uint64_t modulus,
                                 std::uint64_t base)
    : modulus_(modulus), base_(base) {
    check_coset_args(modulus, base);
    a %= modulus;
    members_.push_back(a);
    for (std::uint64_t x = mul_mod(a, base, modulus); x != a;
         x = mul_mod(x, base, modulus))
        members_.push_back(x);
    std::sort(members_.begin(), members_.end());
}

std::uint64_t cyclotomic_coset_size(std::uint64_t a, std::uint64_t modulus,
                                    std::uint64_t base) {
    check_coset_args(modulus, base);
    a %= modulus;
    std::uint64_t size = 1;
    for (std::uint64_t x = mul_mod(a, base, modulus); x != a;
         x = mul_mod(x, base, modulus))
        ++size;
    return size;
}

Polynomial minimal_polynomial(const Field& f, std::uint64_t a, std::uint64_t q) {
    if (!f.is_subfield_size(q))
        throw std::invalid_argument(std::to_string(q) +
                                    " is not a subfield size of this field");
    const std::uint64_t n = f.group_order();
    const std::uint64_t e = (n - a % n) % n;  // exponent of gamma^{-a}

    CyclotomicCoset coset(e, n, q);
    auto h = Polynomial::one(f);
    for (auto j : coset.members()) {
        const FieldElement root = f.exp(j);
        auto factor = Polynomial::from_coeffs(f, {f.neg(root), 1});
        h = h * factor;
    }

    // h is the minimal polynomial over GF(q); its coefficients must land in
    // the subfield, anything else is an internal bug.
    for (auto c : h.coeffs())
        if (!f.in_subfield(c, q))
            throw std::logic_error("minimal polynomial coefficient escapes GF(q)");
    if (!h.is_monic() || h.degree() != static_cast<std::int64_t>(coset.size()))
        throw std::logic_error("malformed minimal polynomial");
    return h;
}

}  // namespace icc
