#ifndef ICC_PREDICTOR_HPP
#define ICC_PREDICTOR_HPP

#include <cstdint>

#include "icc/code.hpp"

namespace icc {

/// Shape of the weight distribution of an irreducible cyclic code.
enum class CodeClass {
    kOneWeight,   // all nonzero codewords share one weight
    kTwoWeight,   // exactly two nonzero weights
    kRepetition,  // dimension 1: scalar multiples of a full-weight word
};

/// Closed-form weight distribution, computed without touching any field
/// element. n is the code length, u = gcd((q^k-1)/(q-1), a), and dimension
/// is the degree of the parity-check polynomial (1 for kRepetition, else k).
struct Prediction {
    CodeClass code_class;
    std::uint64_t q;
    std::uint32_t k;
    std::uint64_t n;
    std::uint64_t u;
    std::uint64_t dimension;
    WeightDistribution distribution;
};

/// Smallest f >= 1 with w^f = 1 (mod v); requires gcd(w, v) = 1. Returns 1
/// for v = 1.
std::uint64_t multiplicative_order(std::uint64_t w, std::uint64_t v);

/// Order data for u over GF(p^(t*k)): f is the order of p modulo u and
/// s = t*k/f. Semiprimitive means u = 2, or f even with p^(f/2) = -1 (mod u).
struct SemiprimitiveCheck {
    std::uint64_t u;
    std::uint32_t p;
    std::uint64_t f;
    std::uint64_t s;
    bool is_semiprimitive;
};

/// Requires u >= 1, gcd(p, u) = 1, and f | t*k (equivalently u | p^(t*k)-1,
/// which holds whenever u divides (p^(t*k)-1)/(p^t-1)). u = 1 reports
/// not-semiprimitive.
SemiprimitiveCheck check_semiprimitive(std::uint64_t u, std::uint32_t p,
                                       std::uint32_t k, std::uint32_t t);

/// Order parity of p modulo u when u >= 2 divides q + 1, q = p^t:
/// f is the order of p modulo u and s = 2t/f. For u > 2 this forces f even
/// with p^(f/2) = -1 (mod u), and s is even exactly when u = 2.
struct OrderParity {
    std::uint64_t f;
    std::uint64_t s;
    bool s_even;
};

OrderParity dim2_parity(std::uint64_t u, std::uint32_t p, std::uint32_t t);

/// Distribution of the one-weight code of length n over GF(q) inside
/// GF(q^k): the single nonzero weight is n*q^(k-1)*(q-1)/(q^k-1) with
/// frequency q^k - 1. Requires n | q^k - 1 and
/// gcd((q^k-1)/(q-1), (q^k-1)/n) = 1.
WeightDistribution one_weight_distribution(std::uint64_t q, std::uint32_t k,
                                           std::uint64_t n);

/// Distribution of the semiprimitive two-weight code with parameters
/// (p, t, k, n, u), q = p^t: the nonzero weights are
///   n*q^(k/2-1)*(q^(k/2) - e) / ((q^k-1)/(q-1))        freq (q^k-1)(u-1)/u
///   n*q^(k/2-1)*(q^(k/2) + e*(u-1)) / ((q^k-1)/(q-1))  freq (q^k-1)/u
/// where e = (-1)^s and q^(k/2) = p^(t*k/2). Requires a semiprimitive u >= 2
/// consistent with n, and rejects parameter sets whose code has dimension
/// below k (signalled by a zero weight).
WeightDistribution semiprimitive_distribution(std::uint32_t p, std::uint32_t t,
                                              std::uint32_t k, std::uint64_t n,
                                              std::uint64_t u);

/// Full classification of a dimension <= 2 code over GF(q) (q a prime power)
/// from its length alone: u = gcd(q+1, (q^2-1)/n) splits into u = 1 (one
/// weight nq/(q+1)), 2 <= u <= q (two weights n(q+1-u)/(q+1) and n), and
/// u = q+1 (dimension 1, weight n, frequency q-1).
Prediction classify_dim2(std::uint64_t q, std::uint64_t n);

/// Same classification driven by the exponent a over GF(p^t), with
/// u = gcd(q+1, a) and n = (q^2-1)/gcd(q^2-1, a); cross-checks that this u
/// agrees with the length-only gcd(q+1, (q^2-1)/n).
Prediction classify_from_exponent(std::uint32_t p, std::uint32_t t,
                                  std::uint64_t a);

/// Closed-form distribution for any supported (p, t, k, a). Handles k <= 2
/// completely; for k >= 3 it covers dimension-1 codes (repetition),
/// one-weight codes (u = 1), and semiprimitive two-weight codes. Throws
/// std::invalid_argument for codes of intermediate dimension (naming the
/// equivalent full-dimension parameters) and for non-semiprimitive u >= 2,
/// where no closed form is implemented.
Prediction predict_distribution(std::uint32_t p, std::uint32_t t,
                                std::uint32_t k, std::uint64_t a);

}  // namespace icc

#endif
