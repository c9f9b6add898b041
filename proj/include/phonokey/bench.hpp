#pragma once

#include "phonokey/reports.hpp"
#include "phonokey/types.hpp"

#include <chrono>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace phonokey::bench {

inline constexpr std::size_t min_corpus = 1000;

class CorpusTooSmall : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::size_t queries = 200;
    std::size_t warmup = 20; // leading queries timed but not counted
    std::size_t top = 10;    // hits kept by the linear scan
    std::uint64_t seed = 7;
};

struct RuleTiming {
    std::size_t rule = 0;
    std::string step;
    std::string kind;
    std::chrono::nanoseconds total{0};
};

struct Report {
    std::string ruleset;
    std::size_t records = 0;
    std::size_t distinct_forms = 0;
    std::size_t distinct_keys = 0;
    std::size_t index_bytes = 0;
    std::size_t index_hash = 0;
    std::vector<RuleTiming> rules;
    std::size_t queries = 0;
    double bucket_mean_us = 0.0;
    double scan_mean_us = 0.0;
    double speedup = 0.0;
};

// (a) cumulative time per rule over the whole corpus, (b) mean latency of a
// ranked bucket lookup against a full edit-distance scan over every distinct
// form, (c) their ratio. Throws CorpusTooSmall under min_corpus records.
Report run(std::span<const std::string> corpus, Mode mode, const Options& options = {});

std::string render(const Report& report, reports::Format format);

} // namespace phonokey::bench
