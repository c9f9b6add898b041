// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include "support/checks.hpp"

#include "phonokey/bench.hpp"
#include "phonokey/reports.hpp"
#include "phonokey/synth.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr std::size_t oracle_tokens = 50'000;
constexpr std::size_t variant_bases = 500;
constexpr std::size_t medicine_pairs = 200;
constexpr std::size_t compression_records = 100'000;
constexpr double min_full_k_num = 90.0;
constexpr std::size_t property_cases = 10'000;
constexpr std::size_t bench_records = 100'000;
constexpr double min_bench_ratio = 10.0;
constexpr std::uint64_t seed = 20191031;

struct Verdict {
    bool pass;
    std::string detail;
};

std::string describe(const checks::Outcome& o) {
    std::ostringstream out;
    out << o.cases << " cases, " << o.failures << " failures";
    if (!o.summary.empty())
        out << " (" << o.summary << ")";
    for (const auto& e : o.examples)
        out << "; e.g. " << e;
    return out.str();
}

Verdict published_counts() {
    using phonokey::reports::format_percent;
    using phonokey::reports::optimization_report;
    const auto r = optimization_report(547'825, 434'495, 9'213'759, 8'358'969);
    const std::string k_num = format_percent(r.k_num), k_vol = format_percent(r.k_vol);
    return {k_num == "20.7" && k_vol == "9.3", "K_num=" + k_num + "% K_vol=" + k_vol + "%"};
}

Verdict medicine_coefficient() {
    const std::string k = phonokey::reports::format_percent(phonokey::reports::optimization_coefficient(16'049, 23'198));
    return {k == "30.8", "K_num=" + k + "%"};
}

Verdict oracle() {
    const auto o = checks::oracle_equivalence(oracle_tokens, seed);
    return {o.ok() && o.cases >= oracle_tokens, describe(o)};
}

Verdict recall() {
    const auto s = checks::surname_variant_recall(variant_bases, seed);
    const auto m = checks::medicine_pair_recall(medicine_pairs, seed);
    return {s.ok() && m.ok(), "surnames: " + describe(s) + " | medicines: " + describe(m)};
}

Verdict compression() {
    const auto c = checks::compression(compression_records, seed);
    std::ostringstream out;
    out << c.records << " records, structured I=" << c.structured_i << " < N=" << c.structured_n
        << " (K=" << phonokey::reports::format_percent(c.structured_k) << "%), full K_num="
        << phonokey::reports::format_percent(c.full_k) << "% (> " << min_full_k_num << "%)";
    return {c.structured_i < c.structured_n && c.full_k > min_full_k_num, out.str()};
}

Verdict invariants() {
    const std::vector<std::pair<const char*, std::function<checks::Outcome(std::size_t, std::uint64_t)>>> suites = {
        {"key-alphabet", checks::key_alphabet},
        {"clean-idempotence", checks::clean_idempotence},
        {"dedup-collapse", checks::dedup_collapse},
        {"non-expansion", checks::non_expansion},
        {"edit-distance-metric", checks::edit_distance_metric},
        {"index-partition", checks::index_partition},
        {"rebuild-determinism", checks::rebuild_determinism},
        {"trace-replay", checks::trace_replay},
    };
    bool pass = true;
    std::string detail;
    for (const auto& [name, run] : suites) {
        const auto o = run(property_cases, seed);
        const bool ok = o.ok() && o.cases >= property_cases;
        pass = pass && ok;
        detail += std::string(detail.empty() ? "" : ", ") + name + (ok ? " ok" : " FAILED: " + describe(o));
        if (ok)
            detail += "(" + std::to_string(o.cases) + ")";
    }
    return {pass, detail};
}

Verdict order() {
    const auto o = checks::order_sensitivity();
    return {o.canonical_key != o.swapped_key && o.canonical_warnings == 0 && o.swapped_flags_sk,
            "грицько: canonical " + o.canonical_key + ", swapped " + o.swapped_key + "; canonical lint " +
                std::to_string(o.canonical_warnings) + " warning(s); swapped lint flags 'ськ': " +
                (o.swapped_flags_sk ? "yes" : "no")};
}

Verdict bench() {
    std::vector<std::string> corpus;
    for (auto& r : phonokey::synth::surname_corpus({.records = bench_records, .vocabulary = 4000,
                                                    .variant_rate = 0.3, .seed = seed}))
        corpus.push_back(std::move(r.text));
    const auto report = phonokey::bench::run(corpus, phonokey::Mode::surname);
    char buf[160];
    std::snprintf(buf, sizeof buf, "bucket %.1f us vs scan %.1f us over %zu forms, ratio %.1fx (>= %.0fx)",
                  report.bucket_mean_us, report.scan_mean_us, report.distinct_forms, report.speedup,
                  min_bench_ratio);
    return {report.speedup >= min_bench_ratio, buf};
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"optimization coefficients from published counts", published_counts},
        {"medicine optimization coefficient", medicine_coefficient},
        {"oracle equivalence", oracle},
        {"variant-collapse recall", recall},
        {"compression on a frequency-seeded corpus", compression},
        {"invariant suites", invariants},
        {"rule-order sensitivity and lint", order},
        {"bench sanity", bench},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %zu %s: %s [%.2fs]\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    v.detail.c_str(), seconds);
        std::fflush(stdout);
        failed += v.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
