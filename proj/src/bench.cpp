#include "phonokey/bench.hpp"

#include "phonokey/index.hpp"
#include "phonokey/medicine.hpp"
#include "phonokey/surname.hpp"
#include "phonokey/textnorm.hpp"
#include "phonokey/utf8.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

namespace phonokey::bench {
namespace {

using clock = std::chrono::steady_clock;

std::vector<std::u32string> clean_tokens(Mode mode, std::string_view raw) {
    std::vector<std::u32string> out;
    if (mode == Mode::surname) {
        if (auto token = textnorm::try_clean_surname(raw))
            out.push_back(token->chars());
    } else {
        for (const auto& token : textnorm::clean_medicine(raw))
            out.push_back(token.chars());
    }
    return out;
}

// Top-k by distance over every form; the baseline a bucket lookup replaces.
std::size_t linear_scan(const std::vector<std::u32string>& forms, const std::vector<std::u32string>& query,
                        std::size_t top) {
    std::vector<std::pair<std::size_t, std::size_t>> scored;
    scored.reserve(forms.size());
    for (std::size_t i = 0; i < forms.size(); ++i) {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (const auto& q : query)
            best = std::min(best, index::edit_distance(q, forms[i]));
        scored.emplace_back(best, i);
    }
    const std::size_t k = std::min(top, scored.size());
    std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(k), scored.end());
    return k;
}

double mean_us(const std::vector<clock::duration>& samples, std::size_t skip) {
    if (samples.size() <= skip)
        return 0.0;
    double sum = 0.0;
    for (std::size_t i = skip; i < samples.size(); ++i)
        sum += std::chrono::duration<double, std::micro>(samples[i]).count();
    return sum / static_cast<double>(samples.size() - skip);
}

} // namespace

Report run(std::span<const std::string> corpus, Mode mode, const Options& options) {
    if (corpus.size() < min_corpus)
        throw CorpusTooSmall("bench needs at least " + std::to_string(min_corpus) + " records, got " +
                             std::to_string(corpus.size()));

    const rewrite::RuleSet& rules = mode == Mode::surname ? surname::rules() : medicine::rules();
    Report report;
    report.ruleset = std::string(to_string(mode));
    report.records = corpus.size();

    std::vector<std::chrono::nanoseconds> per_rule(rules.rules.size());
    for (const auto& record : corpus)
        for (const auto& token : clean_tokens(mode, record))
            rewrite::apply_profiled(rules, token, per_rule);
    for (std::size_t i = 0; i < rules.rules.size(); ++i)
        report.rules.push_back({i, rules.rules[i].step(), std::string(rewrite::to_string(rules.rules[i].kind())),
                                per_rule[i]});

    const auto built = index::build(corpus, mode);
    const std::string bytes = built.index.serialize();
    report.index_bytes = bytes.size();
    report.index_hash = std::hash<std::string>{}(bytes);
    report.distinct_forms = built.index.distinct_forms();
    report.distinct_keys = built.index.distinct_keys();

    std::vector<std::u32string> forms;
    forms.reserve(report.distinct_forms);
    for (const auto& [key, bucket] : built.index.buckets())
        for (const auto& [form, count] : bucket)
            forms.push_back(utf8::decode(form));

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> draw(0, corpus.size() - 1);
    std::vector<std::string> queries;
    for (std::size_t attempts = 0; queries.size() < options.queries + options.warmup && attempts < 100 * corpus.size();
         ++attempts) {
        const std::string& candidate = corpus[draw(rng)];
        if (!clean_tokens(mode, candidate).empty())
            queries.push_back(candidate);
    }

    std::vector<clock::duration> bucket_times, scan_times;
    std::size_t sink = 0;
    for (const auto& q : queries) {
        auto start = clock::now();
        sink += index::lookup(built.index, q, index::Rank::edit_distance).hits.size();
        bucket_times.push_back(clock::now() - start);

        start = clock::now();
        sink += linear_scan(forms, clean_tokens(mode, q), options.top);
        scan_times.push_back(clock::now() - start);
    }
    report.queries = queries.size() > options.warmup ? queries.size() - options.warmup : 0;
    report.bucket_mean_us = mean_us(bucket_times, options.warmup);
    report.scan_mean_us = mean_us(scan_times, options.warmup);
    report.speedup = report.bucket_mean_us > 0.0 ? report.scan_mean_us / report.bucket_mean_us : 0.0;
    if (sink == 0)
        report.queries = 0;
    return report;
}

std::string render(const Report& report, reports::Format format) {
    if (format == reports::Format::structured) {
        nlohmann::ordered_json rules = nlohmann::ordered_json::array();
        for (const auto& r : report.rules)
            rules.push_back({{"rule", r.rule}, {"step", r.step}, {"kind", r.kind},
                             {"total_ms", std::chrono::duration<double, std::milli>(r.total).count()}});
        nlohmann::ordered_json out = {
            {"ruleset", report.ruleset},
            {"records", report.records},
            {"distinct_forms", report.distinct_forms},
            {"distinct_keys", report.distinct_keys},
            {"index_bytes", report.index_bytes},
            {"index_hash", report.index_hash},
            {"rules", rules},
            {"queries", report.queries},
            {"bucket_mean_us", report.bucket_mean_us},
            {"scan_mean_us", report.scan_mean_us},
            {"speedup", report.speedup},
        };
        return out.dump(2) + "\n";
    }
    std::ostringstream out;
    out << std::fixed << std::setprecision(3);
    out << "ruleset: " << report.ruleset << "\nrecords: " << report.records
        << "\ndistinct forms: " << report.distinct_forms << "\ndistinct keys: " << report.distinct_keys
        << "\nindex: " << report.index_bytes << " bytes, hash " << std::hex << report.index_hash << std::dec
        << "\n\nrule\tstep\tkind\ttotal_ms\n";
    auto ranked = report.rules;
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.total > b.total; });
    for (const auto& r : ranked)
        out << r.rule << '\t' << r.step << '\t' << r.kind << '\t'
            << std::chrono::duration<double, std::milli>(r.total).count() << '\n';
    out << "\nqueries: " << report.queries << "\nbucket lookup mean: " << report.bucket_mean_us
        << " us\nlinear scan mean: " << report.scan_mean_us << " us\nspeedup: " << report.speedup << "x\n";
    return out.str();
}

} // namespace phonokey::bench
