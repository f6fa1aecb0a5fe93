#include "icc/report.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace icc {
namespace {

using ordered_json = nlohmann::ordered_json;

std::optional<CodeClass> class_from_label(const std::string& label) {
    if (label == "A") return CodeClass::kOneWeight;
    if (label == "B") return CodeClass::kTwoWeight;
    if (label == "C") return CodeClass::kRepetition;
    return std::nullopt;
}

}  // namespace

const char* case_label(CodeClass c) {
    switch (c) {
        case CodeClass::kOneWeight: return "A";
        case CodeClass::kTwoWeight: return "B";
        case CodeClass::kRepetition: return "C";
    }
    throw std::invalid_argument("unknown code class");
}

std::optional<CodeClass> classify_shape(std::uint64_t dimension,
                                        const WeightDistribution& dist) {
    if (dimension == 1) return CodeClass::kRepetition;
    switch (dist.entries().size()) {
        case 2: return CodeClass::kOneWeight;
        case 3: return CodeClass::kTwoWeight;
        default: return std::nullopt;
    }
}

std::string to_json_string(const ReportRecord& record) {
    ordered_json j;
    j["q"] = record.q;
    j["p"] = record.p;
    j["t"] = record.t;
    j["k"] = record.k;
    if (record.a)
        j["a"] = *record.a;
    else
        j["a"] = nullptr;
    j["n"] = record.n;
    j["u"] = record.u;
    j["dimension"] = record.dimension;
    if (record.code_class)
        j["case"] = case_label(*record.code_class);
    else
        j["case"] = nullptr;
    ordered_json dist = ordered_json::array();
    for (const auto& e : record.distribution.entries()) {
        ordered_json entry;
        entry["weight"] = e.weight;
        entry["frequency"] = e.frequency;
        dist.push_back(std::move(entry));
    }
    j["distribution"] = std::move(dist);
    j["oracle_checked"] = record.oracle_checked;
    return j.dump(2);
}

ReportRecord record_from_json(const std::string& text) {
    try {
        const ordered_json j = ordered_json::parse(text);
        std::optional<std::uint64_t> a;
        if (!j.at("a").is_null()) a = j.at("a").get<std::uint64_t>();
        std::optional<CodeClass> code_class;
        if (!j.at("case").is_null()) {
            code_class = class_from_label(j.at("case").get<std::string>());
            if (!code_class)
                throw std::invalid_argument("unknown case label in record");
        }
        std::vector<WeightDistribution::Entry> entries;
        for (const auto& e : j.at("distribution")) {
            entries.push_back({e.at("weight").get<std::uint64_t>(),
                               e.at("frequency").get<std::uint64_t>()});
        }
        return ReportRecord{j.at("q").get<std::uint64_t>(),
                            j.at("p").get<std::uint32_t>(),
                            j.at("t").get<std::uint32_t>(),
                            j.at("k").get<std::uint32_t>(),
                            a,
                            j.at("n").get<std::uint64_t>(),
                            j.at("u").get<std::uint64_t>(),
                            j.at("dimension").get<std::uint64_t>(),
                            code_class,
                            WeightDistribution(std::move(entries)),
                            j.at("oracle_checked").get<bool>()};
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed record: ") + e.what());
    }
}

std::string render_text(const ReportRecord& record) {
    std::string out;
    out += "q: " + std::to_string(record.q) + " (p=" + std::to_string(record.p) +
           ", t=" + std::to_string(record.t) + ")\n";
    out += "k: " + std::to_string(record.k) + "\n";
    if (record.a) out += "a: " + std::to_string(*record.a) + "\n";
    out += "n: " + std::to_string(record.n) + "\n";
    out += "u: " + std::to_string(record.u) + "\n";
    out += "dimension: " + std::to_string(record.dimension) + "\n";
    if (record.code_class)
        out += std::string("case: ") + case_label(*record.code_class) + "\n";
    out += "enumerator: " + record.distribution.enumerator() + "\n";
    out += "distribution:\n";
    for (const auto& e : record.distribution.entries())
        out += "  weight " + std::to_string(e.weight) + ": " +
               std::to_string(e.frequency) + "\n";
    out += std::string("oracle_checked: ") +
           (record.oracle_checked ? "true" : "false") + "\n";
    return out;
}

}  // namespace icc
