#ifndef ICC_CODE_HPP
#define ICC_CODE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "icc/field.hpp"
#include "icc/polynomial.hpp"

namespace icc {

/// Weight distribution of a linear code: sorted (weight, frequency) pairs with
/// positive frequencies, starting with the zero codeword entry (0, 1).
class WeightDistribution {
public:
    struct Entry {
        std::uint64_t weight;
        std::uint64_t frequency;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    /// Entries need not be sorted or merged; zero-frequency entries are dropped.
    explicit WeightDistribution(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }

    /// Total number of codewords, i.e. the sum of all frequencies.
    std::uint64_t total() const;

    /// Renders the weight enumerator as a polynomial in z, e.g. "1+4z+20z^3".
    std::string enumerator() const;

    friend bool operator==(const WeightDistribution&,
                           const WeightDistribution&) = default;

private:
    std::vector<Entry> entries_;
};

/// An irreducible cyclic code over GF(q), q = p^t, determined by the exponent a:
/// parity-check polynomial h = minimal polynomial over GF(q) of gamma^(-a) where
/// gamma generates GF(q^k)*, length n = (q^k - 1) / gcd(q^k - 1, a), and
/// generator g = (x^n - 1) / h.
struct CodeSpec {
    std::uint32_t p = 0;
    std::uint32_t t = 0;
    std::uint32_t k = 0;
    std::uint64_t q = 0;
    std::uint64_t a = 0;
    std::uint64_t n = 0;
    std::uint64_t u = 0;          // gcd((q^k - 1)/(q - 1), a)
    std::uint64_t dimension = 0;  // deg h
    Polynomial h;                 // parity-check polynomial, over the subfield
    Polynomial g;                 // generator polynomial, over the subfield
    std::shared_ptr<const Field> field;  // GF(q^k) the polynomials live in
};

/// Builds the code determined by (p, t, k, a), constructing GF(p^(t*k)).
CodeSpec analyze_code(std::uint32_t p, std::uint32_t t, std::uint32_t k,
                      std::uint64_t a, std::uint64_t size_bound = kDefaultSizeBound);

/// Same, reusing an already-built field of size p^(t*k).
CodeSpec analyze_code(std::shared_ptr<const Field> field, std::uint32_t t,
                      std::uint32_t k, std::uint64_t a);

/// (x^n - 1) / h; throws std::logic_error if h does not divide x^n - 1.
Polynomial generator_polynomial(const Polynomial& h, std::uint64_t n);

/// Enumerates all q^dimension codewords as subfield multiples of the generator
/// polynomial and tallies their Hamming weights. Throws std::invalid_argument
/// if q^dimension exceeds enum_bound.
WeightDistribution weight_distribution_bruteforce(
    const CodeSpec& code, std::uint64_t enum_bound = kDefaultSizeBound);

/// Independent enumeration: codewords are (Tr(y * gamma^(a*i)))_{i<n} for y in
/// GF(q^k), with the trace taken to GF(q). Each codeword arises for exactly
/// q^(k - dimension) values of y.
WeightDistribution weight_distribution_trace(
    const CodeSpec& code, std::uint64_t enum_bound = kDefaultSizeBound);

/// Invokes fn with each codeword of the generator-polynomial enumeration, in
/// message-lexicographic order. Coordinates are elements of the subfield GF(q).
void for_each_codeword(const CodeSpec& code,
                       const std::function<void(std::span<const FieldElement>)>& fn,
                       std::uint64_t enum_bound = kDefaultSizeBound);

}  // namespace icc

#endif
