#include "icc/predictor.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "icc/polynomial.hpp"

namespace icc {
namespace {

using u128 = unsigned __int128;

// Largest q^k handled by the integer-only classifier.
constexpr std::uint64_t kClassifierLimit = std::uint64_t{1} << 62;

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    while (exp--) out *= base;
    return out;
}

// base^exp, or throws std::invalid_argument(what) if the result exceeds limit.
std::uint64_t pow_checked(std::uint64_t base, std::uint64_t exp,
                          std::uint64_t limit, const char* what) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && out > limit / base) throw std::invalid_argument(what);
        out *= base;
    }
    if (out > limit) throw std::invalid_argument(what);
    return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t out = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) out = static_cast<std::uint64_t>(u128{out} * base % mod);
        base = static_cast<std::uint64_t>(u128{base} * base % mod);
        exp >>= 1;
    }
    return out;
}

// num / den, throwing std::logic_error(what) unless the division is exact and
// the quotient fits in 64 bits.
std::uint64_t exact_div(u128 num, std::uint64_t den, const char* what) {
    if (den == 0 || num % den != 0) throw std::logic_error(what);
    const u128 quo = num / den;
    if (quo >> 64) throw std::logic_error(what);
    return static_cast<std::uint64_t>(quo);
}

void require_prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
}

void require_positive_degrees(std::uint32_t t, std::uint32_t k) {
    if (t == 0) throw std::invalid_argument("subfield degree t must be >= 1");
    if (k == 0) throw std::invalid_argument("extension degree k must be >= 1");
}

std::uint64_t dim2_field_size(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    if (q > (std::uint64_t{1} << 31))
        throw std::invalid_argument("q exceeds the supported range");
    return q * q - 1;
}

WeightDistribution repetition_distribution(std::uint64_t n, std::uint64_t q) {
    return WeightDistribution({{0, 1}, {n, q - 1}});
}

}  // namespace

std::uint64_t multiplicative_order(std::uint64_t w, std::uint64_t v) {
    if (v == 0) throw std::invalid_argument("modulus must be >= 1");
    if (v == 1) return 1;
    w %= v;
    if (std::gcd(w, v) != 1)
        throw std::invalid_argument("order requires gcd(w, v) = 1");
    std::uint64_t order = 1;
    for (std::uint64_t acc = w; acc != 1;
         acc = static_cast<std::uint64_t>(u128{acc} * w % v))
        ++order;
    return order;
}

SemiprimitiveCheck check_semiprimitive(std::uint64_t u, std::uint32_t p,
                                       std::uint32_t k, std::uint32_t t) {
    require_positive_degrees(t, k);
    const std::uint64_t f = multiplicative_order(p, u);
    const std::uint64_t kt = std::uint64_t{k} * t;
    if (kt % f != 0)
        throw std::invalid_argument("u does not divide p^(t*k) - 1");
    const std::uint64_t s = kt / f;
    const bool semiprimitive =
        u == 2 || (u > 2 && f % 2 == 0 && pow_mod(p, f / 2, u) == u - 1);
    return SemiprimitiveCheck{u, p, f, s, semiprimitive};
}

OrderParity dim2_parity(std::uint64_t u, std::uint32_t p, std::uint32_t t) {
    require_prime(p);
    require_positive_degrees(t, 1);
    if (u < 2) throw std::invalid_argument("u must be >= 2");
    const std::uint64_t q = pow_checked(p, t, std::uint64_t{1} << 31,
                                        "q exceeds the supported range");
    if ((q + 1) % u != 0) throw std::invalid_argument("u must divide q + 1");
    const std::uint64_t f = multiplicative_order(p, u);
    const std::uint64_t two_t = 2 * std::uint64_t{t};
    if (two_t % f != 0)
        throw std::logic_error("order of p modulo u does not divide 2t");
    const std::uint64_t s = two_t / f;
    return OrderParity{f, s, s % 2 == 0};
}

WeightDistribution one_weight_distribution(std::uint64_t q, std::uint32_t k,
                                           std::uint64_t n) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    if (k == 0) throw std::invalid_argument("extension degree k must be >= 1");
    const std::uint64_t q_k = pow_checked(q, k, kClassifierLimit,
                                          "q^k exceeds the supported range");
    const std::uint64_t N = q_k - 1;
    if (n == 0 || N % n != 0)
        throw std::invalid_argument("n must divide q^k - 1");
    const std::uint64_t delta = N / (q - 1);
    if (std::gcd(delta, N / n) != 1)
        throw std::invalid_argument("length does not belong to a one-weight code");
    const std::uint64_t w =
        exact_div(u128{n} * (q_k / q), delta,
                  "one-weight numerator is not divisible by (q^k-1)/(q-1)");
    return WeightDistribution({{0, 1}, {w, N}});
}

WeightDistribution semiprimitive_distribution(std::uint32_t p, std::uint32_t t,
                                              std::uint32_t k, std::uint64_t n,
                                              std::uint64_t u) {
    require_prime(p);
    require_positive_degrees(t, k);
    const std::uint64_t q = pow_u64(p, t);
    const std::uint64_t q_k = pow_checked(q, k, kClassifierLimit,
                                          "q^k exceeds the supported range");
    const std::uint64_t N = q_k - 1;
    if (n == 0 || N % n != 0)
        throw std::invalid_argument("n must divide q^k - 1");
    const std::uint64_t delta = N / (q - 1);
    if (u != std::gcd(delta, N / n))
        throw std::invalid_argument("u is inconsistent with the length");
    if (u < 2) throw std::invalid_argument("u must be >= 2");

    const SemiprimitiveCheck sp = check_semiprimitive(u, p, k, t);
    if (!sp.is_semiprimitive)
        throw std::invalid_argument("u is not semiprimitive for this p");
    const std::uint64_t kt = std::uint64_t{k} * t;
    if (kt % 2 != 0)
        throw std::logic_error("semiprimitive parameters with odd t*k");

    const std::uint64_t p_half = pow_u64(p, kt / 2);       // q^(k/2)
    const std::uint64_t p_shift = pow_u64(p, kt / 2 - t);  // q^(k/2 - 1)
    const bool plus = sp.s % 2 == 0;                       // e = (-1)^s
    if (!plus && p_half + 1 == u)
        throw std::invalid_argument(
            "parameters give a zero weight: the code has dimension below k");
    const std::uint64_t term_a = plus ? p_half - 1 : p_half + 1;
    const std::uint64_t term_b = plus ? p_half + (u - 1) : p_half - (u - 1);
    const std::uint64_t w_a =
        exact_div(u128{n} * p_shift * term_a, delta,
                  "two-weight numerator is not divisible by (q^k-1)/(q-1)");
    const std::uint64_t w_b =
        exact_div(u128{n} * p_shift * term_b, delta,
                  "two-weight numerator is not divisible by (q^k-1)/(q-1)");
    return WeightDistribution(
        {{0, 1}, {w_a, (N / u) * (u - 1)}, {w_b, N / u}});
}

Prediction classify_dim2(std::uint64_t q, std::uint64_t n) {
    const std::uint64_t N = dim2_field_size(q);
    if (n == 0 || N % n != 0)
        throw std::invalid_argument("n must divide q^2 - 1");
    const std::uint64_t u = std::gcd(q + 1, N / n);
    if (u == 1)
        return Prediction{CodeClass::kOneWeight, q, 2, n, u, 2,
                          one_weight_distribution(q, 2, n)};
    if (u == q + 1)
        return Prediction{CodeClass::kRepetition, q, 2, n, u, 1,
                          repetition_distribution(n, q)};
    const std::uint64_t w_small =
        exact_div(u128{n} * (q + 1 - u), q + 1,
                  "two-weight length term is not divisible by q + 1");
    WeightDistribution dist({{0, 1}, {w_small, N / u}, {n, (N / u) * (u - 1)}});
    return Prediction{CodeClass::kTwoWeight, q, 2, n, u, 2, std::move(dist)};
}

Prediction classify_from_exponent(std::uint32_t p, std::uint32_t t,
                                  std::uint64_t a) {
    require_prime(p);
    require_positive_degrees(t, 2);
    const std::uint64_t q = pow_checked(p, t, std::uint64_t{1} << 31,
                                        "q exceeds the supported range");
    const std::uint64_t N = q * q - 1;
    const std::uint64_t n = N / std::gcd(N, a);
    const std::uint64_t u = std::gcd(q + 1, a);
    Prediction pred = classify_dim2(q, n);
    if (pred.u != u)
        throw std::logic_error("gcd from exponent disagrees with gcd from length");
    return pred;
}

Prediction predict_distribution(std::uint32_t p, std::uint32_t t,
                                std::uint32_t k, std::uint64_t a) {
    require_prime(p);
    require_positive_degrees(t, k);
    if (k == 2) return classify_from_exponent(p, t, a);

    const std::uint64_t q = pow_checked(p, t, kClassifierLimit,
                                        "q exceeds the supported range");
    const std::uint64_t q_k = pow_checked(q, k, kClassifierLimit,
                                          "q^k exceeds the supported range");
    const std::uint64_t N = q_k - 1;
    const std::uint64_t n = N / std::gcd(N, a);
    const std::uint64_t delta = N / (q - 1);
    const std::uint64_t u = std::gcd(delta, a);
    const std::uint64_t dim = cyclotomic_coset_size(a, N, q);

    if (dim == 1)
        return Prediction{CodeClass::kRepetition, q, k, n, u, 1,
                          repetition_distribution(n, q)};
    if (dim < k) {
        const std::uint64_t q_d = pow_u64(q, dim);
        const std::uint64_t a_small = exact_div(
            u128{a % N} * (q_d - 1), N, "reduced exponent is not integral");
        throw std::invalid_argument(
            "degenerate parameters: the code is the k=" + std::to_string(dim) +
            ", a=" + std::to_string(a_small) + " code over the same subfield");
    }
    if (u == 1)
        return Prediction{CodeClass::kOneWeight, q, k, n, u, k,
                          one_weight_distribution(q, k, n)};
    const SemiprimitiveCheck sp = check_semiprimitive(u, p, k, t);
    if (!sp.is_semiprimitive)
        throw std::invalid_argument(
            "no closed form: u=" + std::to_string(u) +
            " is not semiprimitive for p=" + std::to_string(p));
    return Prediction{CodeClass::kTwoWeight, q, k, n, u, k,
                      semiprimitive_distribution(p, t, k, n, u)};
}

}  // namespace icc
