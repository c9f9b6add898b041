#include "phonokey/reports.hpp"

#include "phonokey/surname.hpp"
#include "phonokey/utf8.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

namespace phonokey::reports {
namespace {

using nlohmann::ordered_json;

double round1(double value) { return std::round(value * 10.0) / 10.0; }

ordered_json to_json(const OptimizationReport& r) {
    return {{"n_num", r.n_num}, {"i_num", r.i_num}, {"k_num", round1(r.k_num)},
            {"n_vol", r.n_vol}, {"i_vol", r.i_vol}, {"k_vol", round1(r.k_vol)}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace

double optimization_coefficient(std::uint64_t index, std::uint64_t full) {
    if (full == 0)
        throw DegenerateInput("optimization coefficient needs a non-empty full sample");
    return (1.0 - static_cast<double>(index) / static_cast<double>(full)) * 100.0;
}

OptimizationReport optimization_report(std::uint64_t n_num, std::uint64_t i_num,
                                       std::uint64_t n_vol, std::uint64_t i_vol) {
    return {n_num, i_num, n_vol, i_vol, optimization_coefficient(i_num, n_num),
            optimization_coefficient(i_vol, n_vol)};
}

IndexOptimization optimization_report(const index::PhoneticIndex& index) {
    std::uint64_t forms = 0, form_chars = 0, record_chars = 0, key_chars = 0;
    for (const auto& [key, bucket] : index.buckets()) {
        key_chars += utf8::length(key);
        for (const auto& [form, count] : bucket) {
            const auto length = utf8::length(form);
            ++forms;
            form_chars += length;
            record_chars += length * count;
        }
    }
    const std::uint64_t keys = index.distinct_keys();
    IndexOptimization out;
    out.ruleset = std::string(index.ruleset());
    out.records = index.records();
    out.structured = optimization_report(forms, keys, form_chars, key_chars);
    out.full = optimization_report(index.records(), keys, record_chars, key_chars);
    return out;
}

std::string format_percent(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", value);
    return buf;
}

double power_law_model(double names) {
    return 2.0 * std::numbers::pi * std::pow(names, -std::numbers::e);
}

FrequencyReport frequency_report(const index::PhoneticIndex& index, std::size_t top) {
    FrequencyReport report;
    report.total = index.records();
    const double total = static_cast<double>(std::max<std::uint64_t>(report.total, 1));

    std::vector<FormRate> rates;
    std::map<std::uint64_t, std::uint64_t> classes;
    std::map<std::string, std::uint64_t> by_code;
    for (const auto& [key, bucket] : index.buckets()) {
        std::uint64_t bucket_total = 0;
        for (const auto& [form, count] : bucket) {
            rates.push_back({form, count, static_cast<double>(count) / total * 1000.0});
            ++classes[count];
            bucket_total += count;
        }
        if (!key.empty() && key.back() >= 'A' && key.back() <= 'U')
            by_code[std::string(1, key.back())] += bucket_total;
    }

    std::sort(rates.begin(), rates.end(), [](const FormRate& a, const FormRate& b) {
        return a.count != b.count ? a.count > b.count : a.form < b.form;
    });
    if (top != 0 && rates.size() > top)
        rates.resize(top);
    report.top = std::move(rates);

    for (const auto& [ending, code] : surname::ending_codes()) {
        if (report.endings.empty() || report.endings.back().code != code)
            report.endings.push_back({code, {}, by_code[code]});
        report.endings.back().endings.push_back(ending);
    }
    for (const auto& e : report.endings)
        report.with_ending += e.count;

    for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
        const auto [occurrences, names] = *it;
        report.power_law.push_back({occurrences, names, static_cast<double>(occurrences) / total * 1000.0,
                                    power_law_model(static_cast<double>(names))});
    }
    return report;
}

std::optional<Format> parse_format(std::string_view name) noexcept {
    if (name == "text")
        return Format::text;
    if (name == "structured")
        return Format::structured;
    return std::nullopt;
}

std::string render(const IndexOptimization& report, Format format) {
    if (format == Format::structured) {
        return dump({{"ruleset", report.ruleset},
                     {"records", report.records},
                     {"structured", to_json(report.structured)},
                     {"full", to_json(report.full)}});
    }
    std::ostringstream out;
    out << "ruleset: " << report.ruleset << "\nrecords: " << report.records << "\n\n";
    out << std::left << std::setw(22) << "sampling" << std::right << std::setw(14) << "full"
        << std::setw(14) << "index" << std::setw(8) << "K, %" << '\n';
    auto row = [&](const char* label, std::uint64_t full, std::uint64_t idx, double k) {
        out << std::left << std::setw(22) << label << std::right << std::setw(14) << full
            << std::setw(14) << idx << std::setw(8) << format_percent(k) << '\n';
    };
    row("number, structured", report.structured.n_num, report.structured.i_num, report.structured.k_num);
    row("number, full", report.full.n_num, report.full.i_num, report.full.k_num);
    row("volume, structured", report.structured.n_vol, report.structured.i_vol, report.structured.k_vol);
    row("volume, full", report.full.n_vol, report.full.i_vol, report.full.k_vol);
    return out.str();
}

std::string render(const FrequencyReport& report, Format format) {
    if (format == Format::structured) {
        ordered_json top = ordered_json::array();
        for (const auto& r : report.top)
            top.push_back({{"form", r.form}, {"count", r.count}, {"per_mille", r.per_mille}});
        ordered_json endings = ordered_json::array();
        for (const auto& e : report.endings)
            endings.push_back({{"code", e.code}, {"endings", e.endings}, {"count", e.count}});
        ordered_json power = ordered_json::array();
        for (const auto& p : report.power_law)
            power.push_back({{"occurrences", p.occurrences},
                             {"names", p.names},
                             {"observed_per_mille", p.observed_per_mille},
                             {"model_per_mille", p.model_per_mille}});
        return dump({{"total", report.total},
                     {"top", top},
                     {"endings", endings},
                     {"with_ending", report.with_ending},
                     {"power_law", power}});
    }
    std::ostringstream out;
    out << std::fixed << std::setprecision(3);
    out << "records: " << report.total << "\n\nrank\tper_mille\tcount\tform\n";
    for (std::size_t i = 0; i < report.top.size(); ++i)
        out << i + 1 << '\t' << report.top[i].per_mille << '\t' << report.top[i].count << '\t'
            << report.top[i].form << '\n';
    out << "\ncode\tcount\tendings\n";
    for (const auto& e : report.endings) {
        out << e.code << '\t' << e.count << '\t';
        for (std::size_t i = 0; i < e.endings.size(); ++i)
            out << (i ? "|" : "") << e.endings[i];
        out << '\n';
    }
    out << "\noccurrences\tnames\tobserved_per_mille\tmodel_per_mille\n";
    for (const auto& p : report.power_law)
        out << p.occurrences << '\t' << p.names << '\t' << p.observed_per_mille << '\t'
            << p.model_per_mille << '\n';
    return out.str();
}

std::string render(std::span<const index::DuplicateGroup> groups, Format format) {
    if (format == Format::structured) {
        ordered_json out = ordered_json::array();
        for (const auto& g : groups) {
            ordered_json members = ordered_json::array();
            for (const auto& m : g.members)
                members.push_back({{"form", m.form}, {"count", m.count}});
            out.push_back({{"key", g.key}, {"total", g.total}, {"members", members}});
        }
        return dump(out);
    }
    std::ostringstream out;
    for (const auto& g : groups) {
        out << g.key << '\t' << g.total;
        for (const auto& m : g.members)
            out << '\t' << m.form << ':' << m.count;
        out << '\n';
    }
    return out.str();
}

std::string render(const index::LookupResult& result, Format format) {
    auto status = [&] {
        switch (result.status) {
        case index::LookupStatus::found:
            return "found";
        case index::LookupStatus::no_bucket:
            return "no-bucket";
        case index::LookupStatus::unclean:
            return "unclean";
        }
        return "";
    }();
    if (format == Format::structured) {
        ordered_json hits = ordered_json::array();
        for (const auto& h : result.hits) {
            ordered_json hit = {{"form", h.form}, {"count", h.count}};
            if (h.distance)
                hit["distance"] = *h.distance;
            hits.push_back(hit);
        }
        return dump({{"status", status}, {"keys", result.keys}, {"hits", hits}});
    }
    std::ostringstream out;
    for (const auto& h : result.hits) {
        out << h.form << '\t' << h.count;
        if (h.distance)
            out << '\t' << *h.distance;
        out << '\n';
    }
    return out.str();
}

} // namespace phonokey::reports
