#pragma once

#include "phonokey/index.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace phonokey::reports {

class DegenerateInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// K = (1 - index/full) * 100, in percent. Throws DegenerateInput when full == 0.
double optimization_coefficient(std::uint64_t index, std::uint64_t full);

struct OptimizationReport {
    std::uint64_t n_num = 0;
    std::uint64_t i_num = 0;
    std::uint64_t n_vol = 0;
    std::uint64_t i_vol = 0;
    double k_num = 0.0;
    double k_vol = 0.0;
};

OptimizationReport optimization_report(std::uint64_t n_num, std::uint64_t i_num,
                                       std::uint64_t n_vol, std::uint64_t i_vol);

// "structured" compares the index against the distinct cleaned forms, "full"
// against every accepted record. Volumes are code-point counts; the index
// side (distinct keys) is the same for both.
struct IndexOptimization {
    std::string ruleset;
    std::uint64_t records = 0;
    OptimizationReport structured;
    OptimizationReport full;
};

IndexOptimization optimization_report(const index::PhoneticIndex& index);

// One decimal, the precision the coefficients are reported at.
std::string format_percent(double value);

struct FormRate {
    std::string form;
    std::uint64_t count = 0;
    double per_mille = 0.0;
};

struct EndingCount {
    std::string code;
    std::vector<std::string> endings;
    std::uint64_t count = 0;
};

// One occurrence class: `names` forms each seen `occurrences` times.
struct PowerLawRow {
    std::uint64_t occurrences = 0;
    std::uint64_t names = 0;
    double observed_per_mille = 0.0;
    double model_per_mille = 0.0;
};

struct FrequencyReport {
    std::uint64_t total = 0;
    std::vector<FormRate> top;
    std::vector<EndingCount> endings;
    std::uint64_t with_ending = 0;
    std::vector<PowerLawRow> power_law;
};

// F(n) = 2*pi * n^(-e), per mille; a descriptive model, nothing is fitted.
double power_law_model(double names);

// `top` == 0 lists every form.
FrequencyReport frequency_report(const index::PhoneticIndex& index, std::size_t top);

enum class Format { text, structured };

std::optional<Format> parse_format(std::string_view name) noexcept;

std::string render(const IndexOptimization& report, Format format);
std::string render(const FrequencyReport& report, Format format);
std::string render(std::span<const index::DuplicateGroup> groups, Format format);
std::string render(const index::LookupResult& result, Format format);

} // namespace phonokey::reports
