#include <atomic>
#include <cstdint>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "icc/code.hpp"
#include "icc/field.hpp"
#include "icc/polynomial.hpp"
#include "icc/predictor.hpp"
#include "icc/report.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

struct PredictOptions {
    std::uint32_t p = 0;
    std::uint32_t t = 1;
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> a;
    bool json = false;
};

struct EnumerateOptions {
    std::uint32_t p = 0;
    std::uint32_t t = 1;
    std::uint32_t k = 2;
    std::uint64_t a = 0;
    std::string method = "both";
    std::uint64_t bound = icc::kDefaultSizeBound;
    bool json = false;
};

struct VerifyOptions {
    std::uint64_t max_q = 0;
    std::uint32_t k = 2;
    std::uint32_t jobs = 1;
    std::uint64_t bound = icc::kDefaultSizeBound;
    bool json = false;
};

struct TableOptions {
    std::uint32_t p = 0;
    std::uint32_t t = 1;
    std::uint64_t bound = icc::kDefaultSizeBound;
    bool json = false;
};

std::uint64_t checked_q(std::uint32_t p, std::uint32_t t, std::uint64_t limit) {
    if (!icc::is_prime(p)) throw std::invalid_argument("p must be prime");
    if (t == 0) throw std::invalid_argument("subfield degree t must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < t; ++i) {
        if (q > limit / p) throw std::invalid_argument("q exceeds the supported range");
        q *= p;
    }
    return q;
}

void print_record(const icc::ReportRecord& record, bool json) {
    if (json)
        std::cout << icc::to_json_string(record) << "\n";
    else
        std::cout << icc::render_text(record);
}

int cmd_predict(const PredictOptions& opt) {
    const std::uint64_t q = checked_q(opt.p, opt.t, std::uint64_t{1} << 31);
    const icc::Prediction pred = opt.a
        ? icc::classify_from_exponent(opt.p, opt.t, *opt.a)
        : icc::classify_dim2(q, *opt.n);
    const icc::ReportRecord record{q,      opt.p, opt.t, 2,
                                   opt.a,  pred.n, pred.u, pred.dimension,
                                   pred.code_class, pred.distribution, false};
    print_record(record, opt.json);
    return 0;
}

int cmd_enumerate(const EnumerateOptions& opt) {
    const icc::CodeSpec code =
        icc::analyze_code(opt.p, opt.t, opt.k, opt.a, opt.bound);
    std::optional<icc::WeightDistribution> gen, trace;
    if (opt.method != "trace")
        gen = icc::weight_distribution_bruteforce(code, opt.bound);
    if (opt.method != "generator")
        trace = icc::weight_distribution_trace(code, opt.bound);
    if (gen && trace && *gen != *trace) {
        std::cerr << "oracle disagreement for p=" << opt.p << " t=" << opt.t
                  << " k=" << opt.k << " a=" << opt.a << "\n"
                  << "  generator: " << gen->enumerator() << "\n"
                  << "  trace:     " << trace->enumerator() << "\n";
        return 2;
    }
    icc::WeightDistribution dist = gen ? std::move(*gen) : std::move(*trace);
    const icc::ReportRecord record{code.q, opt.p, opt.t, opt.k,
                                   opt.a,  code.n, code.u, code.dimension,
                                   icc::classify_shape(code.dimension, dist),
                                   std::move(dist),
                                   opt.method == "both"};
    print_record(record, opt.json);
    return 0;
}

// Prime powers q = p^t with 2 <= q <= max_q, ascending in q.
std::vector<std::pair<std::uint32_t, std::uint32_t>> prime_powers_up_to(
    std::uint64_t max_q) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint64_t q = 2; q <= max_q; ++q) {
        std::uint64_t p = 2;
        while (p * p <= q && q % p != 0) ++p;
        if (q % p != 0) p = q;
        std::uint64_t v = q;
        std::uint32_t t = 0;
        while (v % p == 0) {
            v /= p;
            ++t;
        }
        if (v == 1)
            out.emplace_back(static_cast<std::uint32_t>(p), t);
    }
    return out;
}

struct VerifySummary {
    std::uint64_t q = 0;
    std::uint32_t p = 0;
    std::uint32_t t = 0;
    std::uint64_t codes = 0;
    std::uint64_t counts[3] = {0, 0, 0};  // indexed by CodeClass
    std::uint64_t skipped = 0;
};

int cmd_verify(const VerifyOptions& opt) {
    if (opt.max_q < 2)
        throw std::invalid_argument("--max-q must be >= 2");
    if (opt.k == 0)
        throw std::invalid_argument("extension degree k must be >= 1");
    if (opt.jobs == 0)
        throw std::invalid_argument("--jobs must be >= 1");

    std::vector<VerifySummary> summaries;
    std::atomic<bool> failed{false};
    std::mutex mismatch_mutex;
    std::vector<std::string> mismatches;

    for (const auto& [p, t] : prime_powers_up_to(opt.max_q)) {
        const std::uint64_t m = std::uint64_t{t} * opt.k;
        if (m > 63) throw std::invalid_argument("field degree t*k exceeds the supported range");
        auto field = std::make_shared<const icc::Field>(
            p, static_cast<std::uint32_t>(m), opt.bound);
        VerifySummary summary;
        summary.p = p;
        summary.t = t;
        summary.q = checked_q(p, t, opt.bound);
        const std::uint64_t total = field->group_order();

        auto worker = [&](std::uint64_t first, std::uint64_t stride,
                          VerifySummary& local) {
            for (std::uint64_t a = first; a < total; a += stride) {
                if (failed.load(std::memory_order_relaxed)) return;
                const icc::CodeSpec code = icc::analyze_code(field, t, opt.k, a);
                const auto gen = icc::weight_distribution_bruteforce(code, opt.bound);
                const auto trace = icc::weight_distribution_trace(code, opt.bound);
                std::optional<icc::Prediction> pred;
                try {
                    pred = icc::predict_distribution(p, t, opt.k, a);
                } catch (const std::invalid_argument&) {
                    // k >= 3 codes outside the classified families.
                }
                std::string fail;
                if (gen != trace)
                    fail = "generator and trace oracles disagree";
                else if (pred && pred->distribution != gen)
                    fail = "prediction disagrees with the oracles";
                else if (pred && (pred->n != code.n || pred->u != code.u ||
                                  pred->dimension != code.dimension))
                    fail = "predicted parameters disagree with the code";
                if (!fail.empty()) {
                    std::string detail =
                        fail + ": q=" + std::to_string(code.q) +
                        " p=" + std::to_string(p) + " t=" + std::to_string(t) +
                        " k=" + std::to_string(opt.k) + " a=" + std::to_string(a) +
                        " n=" + std::to_string(code.n) +
                        " u=" + std::to_string(code.u) +
                        " dim=" + std::to_string(code.dimension) +
                        "\n  generator: " + gen.enumerator() +
                        "\n  trace:     " + trace.enumerator();
                    if (pred)
                        detail += "\n  predicted: " + pred->distribution.enumerator();
                    failed.store(true, std::memory_order_relaxed);
                    std::lock_guard<std::mutex> lock(mismatch_mutex);
                    mismatches.push_back(std::move(detail));
                    return;
                }
                ++local.codes;
                if (pred)
                    ++local.counts[static_cast<int>(pred->code_class)];
                else
                    ++local.skipped;
            }
        };

        if (opt.jobs == 1) {
            worker(0, 1, summary);
        } else {
            std::vector<VerifySummary> locals(opt.jobs);
            std::vector<std::thread> threads;
            for (std::uint32_t w = 0; w < opt.jobs; ++w)
                threads.emplace_back(worker, w, opt.jobs, std::ref(locals[w]));
            for (auto& th : threads) th.join();
            for (const auto& local : locals) {
                summary.codes += local.codes;
                summary.skipped += local.skipped;
                for (int c = 0; c < 3; ++c) summary.counts[c] += local.counts[c];
            }
        }
        summaries.push_back(summary);
        if (failed.load()) break;
    }

    std::uint64_t total_codes = 0, total_skipped = 0, totals[3] = {0, 0, 0};
    for (const auto& s : summaries) {
        total_codes += s.codes;
        total_skipped += s.skipped;
        for (int c = 0; c < 3; ++c) totals[c] += s.counts[c];
    }

    if (opt.json) {
        ordered_json j;
        j["max_q"] = opt.max_q;
        j["k"] = opt.k;
        ordered_json rows = ordered_json::array();
        for (const auto& s : summaries) {
            ordered_json row;
            row["q"] = s.q;
            row["p"] = s.p;
            row["t"] = s.t;
            row["codes"] = s.codes;
            row["A"] = s.counts[0];
            row["B"] = s.counts[1];
            row["C"] = s.counts[2];
            row["skipped"] = s.skipped;
            rows.push_back(std::move(row));
        }
        j["fields"] = std::move(rows);
        j["codes"] = total_codes;
        j["A"] = totals[0];
        j["B"] = totals[1];
        j["C"] = totals[2];
        j["skipped"] = total_skipped;
        j["mismatches"] = mismatches.size();
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& s : summaries)
            std::cout << "q=" << s.q << " (p=" << s.p << ", t=" << s.t
                      << "): codes=" << s.codes << " A=" << s.counts[0]
                      << " B=" << s.counts[1] << " C=" << s.counts[2]
                      << " skipped=" << s.skipped << "\n";
        std::cout << "total: codes=" << total_codes << " A=" << totals[0]
                  << " B=" << totals[1] << " C=" << totals[2]
                  << " skipped=" << total_skipped
                  << " mismatches=" << mismatches.size() << "\n";
    }
    if (!mismatches.empty()) {
        for (const auto& m : mismatches) std::cerr << m << "\n";
        return 2;
    }
    return 0;
}

struct TableRow {
    std::vector<std::vector<std::uint64_t>> cosets;
    std::uint64_t deg = 0;
    std::uint64_t u = 0;
    std::uint64_t n = 0;
    std::string enumerator;
};

int cmd_table(const TableOptions& opt) {
    const std::uint64_t q = checked_q(opt.p, opt.t, std::uint64_t{1} << 31);
    if (q * q - 1 > opt.bound)
        throw std::invalid_argument("q^2 - 1 exceeds the size bound");
    const std::uint64_t N = q * q - 1;

    // Rows keyed by (u ascending, n descending) so related codes group together.
    std::map<std::pair<std::uint64_t, std::uint64_t>, TableRow> rows;
    std::vector<bool> visited(N, false);
    for (std::uint64_t a = 0; a < N; ++a) {
        if (visited[a]) continue;
        const icc::CyclotomicCoset coset(a, N, q);
        for (std::uint64_t x : coset.members()) visited[x] = true;
        const icc::Prediction pred = icc::classify_from_exponent(opt.p, opt.t, a);
        const auto key = std::make_pair(pred.u, N - pred.n);
        TableRow& row = rows[key];
        if (row.cosets.empty()) {
            row.deg = coset.size();
            row.u = pred.u;
            row.n = pred.n;
            row.enumerator = pred.distribution.enumerator();
        }
        row.cosets.push_back(coset.members());
    }

    if (opt.json) {
        ordered_json j;
        j["q"] = q;
        j["p"] = opt.p;
        j["t"] = opt.t;
        ordered_json out_rows = ordered_json::array();
        for (const auto& [key, row] : rows) {
            ordered_json r;
            r["cosets"] = row.cosets;
            r["deg"] = row.deg;
            r["u"] = row.u;
            r["n"] = row.n;
            r["enumerator"] = row.enumerator;
            out_rows.push_back(std::move(r));
        }
        j["rows"] = std::move(out_rows);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "cosets deg u n enumerator\n";
        for (const auto& [key, row] : rows) {
            for (const auto& coset : row.cosets) {
                std::cout << "{";
                for (std::size_t i = 0; i < coset.size(); ++i)
                    std::cout << (i ? "," : "") << coset[i];
                std::cout << "} ";
            }
            std::cout << "deg=" << row.deg << " u=" << row.u << " n=" << row.n
                      << " " << row.enumerator << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weight distributions of irreducible cyclic codes of dimension 1 and 2"};
    app.require_subcommand(1);

    PredictOptions predict_opt;
    auto* predict = app.add_subcommand(
        "predict", "Closed-form weight distribution from (p, t) and n or a");
    predict->add_option("--p", predict_opt.p, "Characteristic (prime)")->required();
    predict->add_option("--t", predict_opt.t, "Subfield degree: q = p^t");
    auto* opt_n = predict->add_option("--n", predict_opt.n, "Code length (divides q^2-1)");
    auto* opt_a = predict->add_option("--a", predict_opt.a, "Defining exponent");
    opt_n->excludes(opt_a);
    opt_a->excludes(opt_n);
    predict->add_flag("--json", predict_opt.json, "Emit a JSON record");

    EnumerateOptions enum_opt;
    auto* enumerate = app.add_subcommand(
        "enumerate", "Brute-force weight distribution of the code of exponent a");
    enumerate->add_option("--p", enum_opt.p, "Characteristic (prime)")->required();
    enumerate->add_option("--t", enum_opt.t, "Subfield degree: q = p^t");
    enumerate->add_option("--k", enum_opt.k, "Extension degree (code built in GF(q^k))");
    enumerate->add_option("--a", enum_opt.a, "Defining exponent")->required();
    enumerate->add_option("--method", enum_opt.method, "Oracle to run")
        ->check(CLI::IsMember({"generator", "trace", "both"}));
    enumerate->add_option("--bound", enum_opt.bound, "Field/enumeration size bound");
    enumerate->add_flag("--json", enum_opt.json, "Emit a JSON record");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand(
        "verify", "Check predictions against both oracles over full sweeps");
    verify->add_option("--max-q", verify_opt.max_q, "Largest prime power q to sweep")
        ->required();
    verify->add_option("--k", verify_opt.k, "Extension degree");
    verify->add_option("--jobs", verify_opt.jobs, "Worker threads per field");
    verify->add_option("--bound", verify_opt.bound, "Field/enumeration size bound");
    verify->add_flag("--json", verify_opt.json, "Emit a JSON summary");

    TableOptions table_opt;
    auto* table = app.add_subcommand(
        "table", "All distributions over GF(q), k=2, grouped by cyclotomic coset");
    table->add_option("--p", table_opt.p, "Characteristic (prime)")->required();
    table->add_option("--t", table_opt.t, "Subfield degree: q = p^t");
    table->add_option("--bound", table_opt.bound, "Coset enumeration bound");
    table->add_flag("--json", table_opt.json, "Emit JSON rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (predict->parsed()) {
            if (!predict_opt.n && !predict_opt.a)
                throw std::invalid_argument("exactly one of --n and --a is required");
            return cmd_predict(predict_opt);
        }
        if (enumerate->parsed()) return cmd_enumerate(enum_opt);
        if (verify->parsed()) return cmd_verify(verify_opt);
        if (table->parsed()) return cmd_table(table_opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
