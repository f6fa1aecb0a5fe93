#include "icc/code.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace icc {
namespace {

// base^exp, or false if the result would exceed limit.
bool pow_within(std::uint64_t base, std::uint64_t exp, std::uint64_t limit,
                std::uint64_t& out) {
    out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && out > limit / base) return false;
        out *= base;
    }
    return out <= limit;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

WeightDistribution::WeightDistribution(std::vector<Entry> entries) {
    std::map<std::uint64_t, std::uint64_t> merged;
    for (const Entry& e : entries)
        if (e.frequency != 0) merged[e.weight] += e.frequency;
    entries_.reserve(merged.size());
    for (const auto& [weight, frequency] : merged)
        entries_.push_back({weight, frequency});
    if (entries_.empty() || entries_.front().weight != 0 ||
        entries_.front().frequency != 1)
        throw std::invalid_argument(
            "weight distribution must contain the zero codeword exactly once");
}

std::uint64_t WeightDistribution::total() const {
    std::uint64_t sum = 0;
    for (const Entry& e : entries_) sum += e.frequency;
    return sum;
}

std::string WeightDistribution::enumerator() const {
    std::string out;
    for (const Entry& e : entries_) {
        if (!out.empty()) out += '+';
        if (e.weight == 0) {
            out += std::to_string(e.frequency);
            continue;
        }
        if (e.frequency != 1) out += std::to_string(e.frequency);
        out += 'z';
        if (e.weight != 1) {
            out += '^';
            out += std::to_string(e.weight);
        }
    }
    return out;
}

CodeSpec analyze_code(std::uint32_t p, std::uint32_t t, std::uint32_t k,
                      std::uint64_t a, std::uint64_t size_bound) {
    if (t == 0) throw std::invalid_argument("subfield degree t must be >= 1");
    if (k == 0) throw std::invalid_argument("extension degree k must be >= 1");
    const std::uint64_t m = std::uint64_t{t} * k;
    if (m > 63)
        throw std::invalid_argument("field degree t*k exceeds the supported range");
    auto field = std::make_shared<const Field>(p, static_cast<std::uint32_t>(m),
                                               size_bound);
    return analyze_code(std::move(field), t, k, a);
}

CodeSpec analyze_code(std::shared_ptr<const Field> field, std::uint32_t t,
                      std::uint32_t k, std::uint64_t a) {
    if (!field) throw std::invalid_argument("field must not be null");
    if (t == 0) throw std::invalid_argument("subfield degree t must be >= 1");
    if (k == 0) throw std::invalid_argument("extension degree k must be >= 1");
    if (std::uint64_t{t} * k != field->degree())
        throw std::invalid_argument("field degree must equal t*k");

    const std::uint32_t p = field->characteristic();
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < t; ++i) q *= p;

    const std::uint64_t N = field->group_order();
    const std::uint64_t n = N / std::gcd(N, a);
    const std::uint64_t delta = N / (q - 1);
    const std::uint64_t u = std::gcd(delta, a);

    Polynomial h = minimal_polynomial(*field, a, q);
    const auto dimension = static_cast<std::uint64_t>(h.degree());
    Polynomial g = generator_polynomial(h, n);

    return CodeSpec{.p = p,
                    .t = t,
                    .k = k,
                    .q = q,
                    .a = a,
                    .n = n,
                    .u = u,
                    .dimension = dimension,
                    .h = std::move(h),
                    .g = std::move(g),
                    .field = std::move(field)};
}

Polynomial generator_polynomial(const Polynomial& h, std::uint64_t n) {
    auto [quotient, remainder] =
        Polynomial::x_pow_minus_one(h.field(), n).divrem(h);
    if (!remainder.is_zero())
        throw std::logic_error("parity-check polynomial does not divide x^n - 1");
    return quotient;
}

void for_each_codeword(const CodeSpec& code,
                       const std::function<void(std::span<const FieldElement>)>& fn,
                       std::uint64_t enum_bound) {
    const Field& f = *code.field;
    std::uint64_t total = 0;
    if (!pow_within(code.q, code.dimension, enum_bound, total))
        throw std::invalid_argument("codeword enumeration exceeds the size bound");

    const std::vector<FieldElement> alphabet = f.subfield_elements(code.q);
    const std::vector<FieldElement>& g = code.g.coeffs();
    const auto dim = static_cast<std::size_t>(code.dimension);

    std::vector<std::uint32_t> digits(dim, 0);
    std::vector<FieldElement> word(code.n, 0);
    for (std::uint64_t count = 0; count < total; ++count) {
        std::fill(word.begin(), word.end(), 0);
        for (std::size_t i = 0; i < dim; ++i) {
            const FieldElement m_i = alphabet[digits[i]];
            if (m_i == 0) continue;
            for (std::size_t j = 0; j < g.size(); ++j)
                word[i + j] = f.add(word[i + j], f.mul(m_i, g[j]));
        }
        fn(std::span<const FieldElement>(word.data(), word.size()));
        for (std::size_t pos = 0; pos < dim; ++pos) {
            if (++digits[pos] < code.q) break;
            digits[pos] = 0;
        }
    }
}

WeightDistribution weight_distribution_bruteforce(const CodeSpec& code,
                                                  std::uint64_t enum_bound) {
    std::map<std::uint64_t, std::uint64_t> tally;
    for_each_codeword(
        code,
        [&tally](std::span<const FieldElement> word) {
            std::uint64_t weight = 0;
            for (FieldElement c : word) weight += (c != 0);
            ++tally[weight];
        },
        enum_bound);
    std::vector<WeightDistribution::Entry> entries;
    entries.reserve(tally.size());
    for (const auto& [weight, frequency] : tally)
        entries.push_back({weight, frequency});
    return WeightDistribution(std::move(entries));
}

WeightDistribution weight_distribution_trace(const CodeSpec& code,
                                             std::uint64_t enum_bound) {
    const Field& f = *code.field;
    const std::uint64_t Q = f.size();
    if (Q > enum_bound)
        throw std::invalid_argument("codeword enumeration exceeds the size bound");

    std::vector<std::uint8_t> trace_nonzero(Q, 0);
    for (std::uint64_t x = 0; x < Q; ++x)
        trace_nonzero[x] =
            f.trace_to_subfield(static_cast<FieldElement>(x), code.q, code.k) != 0;

    const std::uint64_t N = f.group_order();
    std::vector<FieldElement> beta(code.n);
    for (std::uint64_t i = 0; i < code.n; ++i)
        beta[i] = f.exp(mul_mod(code.a % N, i, N));

    std::map<std::uint64_t, std::uint64_t> tally;
    for (std::uint64_t y = 0; y < Q; ++y) {
        std::uint64_t weight = 0;
        for (FieldElement b : beta)
            weight += trace_nonzero[f.mul(static_cast<FieldElement>(y), b)];
        ++tally[weight];
    }

    // Distinct y yield the same codeword exactly q^(k - dim) times over.
    std::uint64_t multiplicity = 1;
    for (std::uint64_t d = code.dimension; d < code.k; ++d) multiplicity *= code.q;
    std::vector<WeightDistribution::Entry> entries;
    entries.reserve(tally.size());
    for (const auto& [weight, frequency] : tally) {
        if (frequency % multiplicity != 0)
            throw std::logic_error(
                "trace enumeration frequency is not divisible by the multiplicity");
        entries.push_back({weight, frequency / multiplicity});
    }
    return WeightDistribution(std::move(entries));
}

}  // namespace icc
