#include "icc/code.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "icc/field.hpp"
#include "icc/polynomial.hpp"

using icc::analyze_code;
using icc::CodeSpec;
using icc::Field;
using icc::FieldElement;
using icc::Polynomial;
using icc::WeightDistribution;

namespace {

using Entries = std::vector<WeightDistribution::Entry>;

WeightDistribution dist(Entries entries) {
    return WeightDistribution(std::move(entries));
}

TEST(WeightDistributionShape, MergesSortsAndDropsEmpty) {
    const WeightDistribution d({{4, 3}, {0, 1}, {4, 2}, {2, 0}, {9, 1}});
    EXPECT_EQ(d.entries(), (Entries{{0, 1}, {4, 5}, {9, 1}}));
    EXPECT_EQ(d.total(), 7u);
}

TEST(WeightDistributionShape, RequiresExactlyOneZeroCodeword) {
    EXPECT_THROW(dist({}), std::invalid_argument);
    EXPECT_THROW(dist({{1, 5}}), std::invalid_argument);
    EXPECT_THROW(dist({{0, 2}}), std::invalid_argument);
    EXPECT_THROW(dist({{0, 1}, {0, 1}}), std::invalid_argument);  // merges to (0,2)
    EXPECT_NO_THROW(dist({{0, 1}}));
}

TEST(WeightDistributionShape, EnumeratorRendering) {
    EXPECT_EQ(dist({{0, 1}}).enumerator(), "1");
    EXPECT_EQ(dist({{0, 1}, {1, 4}}).enumerator(), "1+4z");
    EXPECT_EQ(dist({{0, 1}, {2, 1}}).enumerator(), "1+z^2");
    EXPECT_EQ(dist({{0, 1}, {8, 12}, {12, 12}}).enumerator(), "1+12z^8+12z^12");
    EXPECT_EQ(dist({{0, 1}, {78, 104}, {104, 624}}).enumerator(),
              "1+104z^78+624z^104");
}

TEST(AnalyzeCode, ParametersOverGF25) {
    const CodeSpec code = analyze_code(5, 1, 2, 2);
    EXPECT_EQ(code.q, 5u);
    EXPECT_EQ(code.n, 12u);
    EXPECT_EQ(code.u, 2u);
    EXPECT_EQ(code.dimension, 2u);
    EXPECT_EQ(code.h.degree(), 2);
    EXPECT_TRUE(code.h.is_monic());
    // g * h = x^n - 1 by construction.
    EXPECT_EQ(code.g * code.h, Polynomial::x_pow_minus_one(*code.field, code.n));
}

TEST(AnalyzeCode, DegenerateExponentGivesDimensionOne) {
    const CodeSpec code = analyze_code(5, 1, 2, 0);
    EXPECT_EQ(code.n, 1u);
    EXPECT_EQ(code.u, 6u);
    EXPECT_EQ(code.dimension, 1u);
}

TEST(AnalyzeCode, LargeFieldParameters) {
    const CodeSpec code = analyze_code(3, 3, 2, 7);
    EXPECT_EQ(code.q, 27u);
    EXPECT_EQ(code.field->size(), 729u);
    EXPECT_EQ(code.n, 104u);
    EXPECT_EQ(code.u, 7u);
    EXPECT_EQ(code.dimension, 2u);
}

TEST(AnalyzeCode, ExponentReducesModGroupOrder) {
    const CodeSpec base = analyze_code(5, 1, 2, 2);
    const CodeSpec shifted = analyze_code(5, 1, 2, 2 + 24);
    EXPECT_EQ(shifted.n, base.n);
    EXPECT_EQ(shifted.u, base.u);
    EXPECT_EQ(shifted.h, base.h);
}

TEST(AnalyzeCode, RejectsBadDegrees) {
    EXPECT_THROW(analyze_code(2, 0, 2, 1), std::invalid_argument);
    EXPECT_THROW(analyze_code(2, 1, 0, 1), std::invalid_argument);
    EXPECT_THROW(analyze_code(2, 8, 8, 1), std::invalid_argument);  // t*k = 64
    EXPECT_THROW(analyze_code(6, 1, 2, 1), std::invalid_argument);  // not prime
    auto field = std::make_shared<const Field>(5, 2);
    EXPECT_THROW(analyze_code(field, 2, 2, 1), std::invalid_argument);  // 4 != 2
    EXPECT_THROW(analyze_code(nullptr, 1, 2, 1), std::invalid_argument);
}

TEST(GeneratorPolynomial, RejectsNonDivisor) {
    Field f(5, 2);
    const auto h = icc::minimal_polynomial(f, 1, 5);  // roots of order 24
    EXPECT_THROW(icc::generator_polynomial(h, 3), std::logic_error);
}

// Frozen distributions for q = 5, k = 2, one exponent per classification row.
TEST(Oracles, FrozenDistributionsOverGF25) {
    const struct {
        std::uint64_t a;
        Entries expected;
    } cases[] = {
        {1, {{0, 1}, {20, 24}}},
        {2, {{0, 1}, {8, 12}, {12, 12}}},
        {3, {{0, 1}, {4, 8}, {8, 16}}},
        {4, {{0, 1}, {4, 12}, {6, 12}}},
        {8, {{0, 1}, {2, 12}, {3, 12}}},
        {12, {{0, 1}, {2, 4}}},
        {0, {{0, 1}, {1, 4}}},
    };
    auto field = std::make_shared<const Field>(5, 2);
    for (const auto& c : cases) {
        const CodeSpec code = analyze_code(field, 1, 2, c.a);
        const WeightDistribution expected{Entries(c.expected)};
        EXPECT_EQ(icc::weight_distribution_bruteforce(code), expected)
            << "generator oracle, a=" << c.a;
        EXPECT_EQ(icc::weight_distribution_trace(code), expected)
            << "trace oracle, a=" << c.a;
    }
}

TEST(Oracles, AgreeOnEveryDim2CodeUpToQ16) {
    const std::pair<std::uint32_t, std::uint32_t> fields[] = {
        {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
        {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}};
    for (const auto& [p, t] : fields) {
        auto field = std::make_shared<const Field>(p, 2 * t);
        const std::uint64_t N = field->group_order();
        for (std::uint64_t a = 0; a < N; ++a) {
            const CodeSpec code = analyze_code(field, t, 2, a);
            EXPECT_EQ(icc::weight_distribution_bruteforce(code),
                      icc::weight_distribution_trace(code))
                << "p=" << p << " t=" << t << " a=" << a;
        }
    }
}

TEST(Oracles, LargeTwoWeightExample) {
    const CodeSpec code = analyze_code(3, 3, 2, 7);
    const WeightDistribution expected{Entries{{0, 1}, {78, 104}, {104, 624}}};
    EXPECT_EQ(icc::weight_distribution_bruteforce(code), expected);
    EXPECT_EQ(icc::weight_distribution_trace(code), expected);
}

// Codes with k >= 3, frozen from both oracles; covers the one-weight family,
// two-weight families of either sign, and one code with three nonzero weights.
TEST(Oracles, FrozenDistributionsForHigherK) {
    const struct {
        std::uint32_t p, t, k;
        std::uint64_t a;
        Entries expected;
    } cases[] = {
        {2, 1, 3, 1, {{0, 1}, {4, 7}}},
        {2, 1, 4, 1, {{0, 1}, {8, 15}}},
        {3, 1, 3, 1, {{0, 1}, {18, 26}}},
        {2, 1, 4, 3, {{0, 1}, {2, 10}, {4, 5}}},
        {2, 1, 6, 3, {{0, 1}, {8, 21}, {12, 42}}},
        {2, 2, 3, 3, {{0, 1}, {12, 21}, {18, 42}}},
        {3, 1, 4, 2, {{0, 1}, {24, 40}, {30, 40}}},
        {3, 1, 4, 4, {{0, 1}, {12, 60}, {18, 20}}},
        {3, 1, 4, 5, {{0, 1}, {6, 16}, {12, 64}}},
        {2, 1, 6, 7, {{0, 1}, {2, 9}, {4, 27}, {6, 27}}},
        {2, 1, 8, 3, {{0, 1}, {40, 170}, {48, 85}}},
    };
    for (const auto& c : cases) {
        const CodeSpec code = analyze_code(c.p, c.t, c.k, c.a);
        const WeightDistribution expected{Entries(c.expected)};
        EXPECT_EQ(icc::weight_distribution_bruteforce(code), expected)
            << "generator oracle, p=" << c.p << " t=" << c.t << " k=" << c.k
            << " a=" << c.a;
        EXPECT_EQ(icc::weight_distribution_trace(code), expected)
            << "trace oracle, p=" << c.p << " t=" << c.t << " k=" << c.k
            << " a=" << c.a;
    }
}

TEST(Oracles, TraceHandlesLowDimensionSubcodes) {
    // a = 5 over GF(2^4) spans only a degree-2 orbit, so the trace map hits
    // each codeword 2^(4-2) times; the oracle must divide that multiplicity out.
    const CodeSpec code = analyze_code(2, 1, 4, 5);
    EXPECT_EQ(code.dimension, 2u);
    EXPECT_EQ(icc::weight_distribution_trace(code),
              icc::weight_distribution_bruteforce(code));
}

TEST(Codewords, EnumerationShape) {
    const CodeSpec code = analyze_code(5, 1, 2, 2);
    std::uint64_t count = 0;
    bool first_is_zero = true;
    icc::for_each_codeword(code, [&](std::span<const FieldElement> word) {
        EXPECT_EQ(word.size(), code.n);
        if (count == 0)
            for (auto c : word) first_is_zero = first_is_zero && c == 0;
        ++count;
    });
    EXPECT_TRUE(first_is_zero);
    EXPECT_EQ(count, 25u);  // q^dimension
}

TEST(Codewords, CoordinatesStayInSubfield) {
    const CodeSpec code = analyze_code(2, 2, 3, 3);  // GF(4) code inside GF(64)
    const Field& f = *code.field;
    icc::for_each_codeword(code, [&](std::span<const FieldElement> word) {
        for (auto c : word) EXPECT_TRUE(f.in_subfield(c, 4));
    });
}

TEST(Codewords, CyclicShiftClosure) {
    for (const auto& [p, t, k, a] :
         std::vector<std::array<std::uint64_t, 4>>{
             {5, 1, 2, 2}, {5, 1, 2, 3}, {2, 1, 4, 3}, {3, 1, 3, 1}}) {
        const CodeSpec code =
            analyze_code(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(t),
                         static_cast<std::uint32_t>(k), a);
        std::set<std::vector<FieldElement>> words;
        icc::for_each_codeword(code, [&](std::span<const FieldElement> w) {
            words.emplace(w.begin(), w.end());
        });
        for (const auto& w : words) {
            std::vector<FieldElement> rotated(w.size());
            for (std::size_t i = 0; i < w.size(); ++i)
                rotated[(i + 1) % w.size()] = w[i];
            EXPECT_TRUE(words.count(rotated))
                << "rotation left the code, a=" << a;
        }
    }
}

TEST(Codewords, EveryPositionEquallyLoaded) {
    // Each coordinate of an irreducible cyclic code is nonzero in exactly
    // (q-1) * q^(dim-1) codewords.
    for (std::uint64_t a : {1, 2, 3, 4, 6, 8, 12}) {
        const CodeSpec code = analyze_code(5, 1, 2, a);
        std::vector<std::uint64_t> nonzero(code.n, 0);
        icc::for_each_codeword(code, [&](std::span<const FieldElement> w) {
            for (std::size_t i = 0; i < w.size(); ++i)
                if (w[i] != 0) ++nonzero[i];
        });
        std::uint64_t expected = code.q - 1;
        for (std::uint64_t i = 1; i < code.dimension; ++i) expected *= code.q;
        for (std::uint64_t i = 0; i < code.n; ++i)
            EXPECT_EQ(nonzero[i], expected) << "a=" << a << " position " << i;
    }
}

TEST(Codewords, DistributionIndependentOfPrimitiveElement) {
    // Rebuilding the field on another primitive element permutes the roots
    // but must not change any weight distribution.
    for (const auto& [p, shift] :
         std::vector<std::pair<std::uint32_t, std::uint64_t>>{{5, 7}, {7, 5}}) {
        auto base = std::make_shared<const Field>(p, 2);
        ASSERT_EQ(std::gcd(shift, base->group_order()), 1u);
        auto rebased = std::make_shared<const Field>(
            base->rebased(base->exp(shift)));
        for (std::uint64_t a = 0; a < base->group_order(); ++a) {
            const CodeSpec c1 = analyze_code(base, 1, 2, a);
            const CodeSpec c2 = analyze_code(rebased, 1, 2, a);
            EXPECT_EQ(icc::weight_distribution_bruteforce(c1),
                      icc::weight_distribution_bruteforce(c2))
                << "p=" << p << " a=" << a;
        }
    }
}

TEST(Codewords, ConjugateExponentsGiveTheSameCode) {
    auto field = std::make_shared<const Field>(5, 2);
    // a and a*q lie in the same orbit, hence define the same polynomial pair.
    for (std::uint64_t a = 0; a < 24; ++a) {
        const CodeSpec c1 = analyze_code(field, 1, 2, a);
        const CodeSpec c2 = analyze_code(field, 1, 2, (a * 5) % 24);
        EXPECT_EQ(c1.h, c2.h);
        EXPECT_EQ(c1.n, c2.n);
        EXPECT_EQ(c1.u, c2.u);
        EXPECT_EQ(icc::weight_distribution_bruteforce(c1),
                  icc::weight_distribution_bruteforce(c2));
    }
}

TEST(Codewords, EnumerationBoundIsEnforced) {
    const CodeSpec code = analyze_code(5, 1, 2, 2);  // 25 codewords
    EXPECT_THROW(icc::weight_distribution_bruteforce(code, 24),
                 std::invalid_argument);
    EXPECT_THROW(icc::for_each_codeword(code, [](auto) {}, 24),
                 std::invalid_argument);
    // The trace oracle walks the big field of q^k = 25 elements.
    EXPECT_THROW(icc::weight_distribution_trace(code, 24),
                 std::invalid_argument);
    EXPECT_NO_THROW(icc::weight_distribution_trace(code, 25));
}

}  // namespace
