#ifndef ICC_REPORT_HPP
#define ICC_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "icc/code.hpp"
#include "icc/predictor.hpp"

namespace icc {

/// One analyzed code, ready for rendering. The exponent a is absent when the
/// code was classified from its length alone; the case label is absent when
/// the distribution was enumerated but matches no classified shape.
struct ReportRecord {
    std::uint64_t q;
    std::uint32_t p;
    std::uint32_t t;
    std::uint32_t k;
    std::optional<std::uint64_t> a;
    std::uint64_t n;
    std::uint64_t u;
    std::uint64_t dimension;
    std::optional<CodeClass> code_class;
    WeightDistribution distribution;
    bool oracle_checked;
};

/// "A" for one-weight, "B" for two-weight, "C" for repetition.
const char* case_label(CodeClass c);

/// Case label derived from the distribution shape: dimension 1 is kRepetition,
/// one nonzero weight is kOneWeight, two are kTwoWeight, more match nothing.
std::optional<CodeClass> classify_shape(std::uint64_t dimension,
                                        const WeightDistribution& dist);

/// Serializes with the fixed key order q, p, t, k, a, n, u, dimension, case,
/// distribution, oracle_checked; a and case serialize as null when absent.
/// Output is stable: re-serializing a parsed record is byte-identical.
std::string to_json_string(const ReportRecord& record);

/// Inverse of to_json_string; throws std::invalid_argument on malformed input.
ReportRecord record_from_json(const std::string& text);

/// Multi-line human-readable rendering; lines for absent fields are omitted.
std::string render_text(const ReportRecord& record);

}  // namespace icc

#endif
