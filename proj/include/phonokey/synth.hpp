#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Deterministic synthetic corpora: surnames seeded with the published
// frequency table, labelled spelling variants, and bilingual drug titles.
namespace phonokey::synth {

struct SurnameRate {
    std::string_view name;
    double per_mille;
};

// The most common surnames with their per-mille rates, most frequent first.
std::span<const SurnameRate> common_surnames();

// `count` distinct lowercase surnames: the common ones first, then
// stem+suffix combinations in a fixed shuffled order.
std::vector<std::string> base_surnames(std::size_t count);

enum class VariantClass {
    vowel_i,      // і / и / ї
    vowel_e,      // е / є
    soft_sign,    // ь dropped
    doubling,     // one letter doubled
    g_letter,     // г / ґ
    apostrophe,   // stray apostrophe
    homoglyph,    // Latin look-alikes
    ending,       // -енко / -енка and the other paired endings
    letter_case,  // case and stray whitespace
};

std::string_view to_string(VariantClass kind) noexcept;

struct Variant {
    std::string text;
    VariantClass kind;
};

// At most one variant per class; classes with no safe edit site for this
// base are skipped. `base` is a lowercase surname.
std::vector<Variant> surname_variants(std::string_view base, std::mt19937_64& rng);

struct LabeledRecord {
    std::string text;
    std::string base; // lowercase base surname the record derives from
};

struct CorpusOptions {
    std::size_t records = 100'000;
    std::size_t vocabulary = 4'000; // synthetic names beyond the common table
    double variant_rate = 0.3;
    std::uint64_t seed = 1;
};

// Records follow the common-surname rates; the remaining mass is spread over
// the synthetic vocabulary with weights 1/(rank + 600), so no synthetic name
// outranks the table.
std::vector<LabeledRecord> surname_corpus(const CorpusOptions& options);

struct MedicinePair {
    std::string ukrainian;
    std::string russian;
};

// Real title pairs first, then generated ones; pairs differ only in
// і/и/ы, е/є/э, ё/о, ь/ъ and letter doubling.
std::vector<MedicinePair> medicine_pairs(std::size_t count, std::uint64_t seed);

// Titles drawn from medicine_pairs in either spelling.
std::vector<std::string> medicine_corpus(std::size_t titles, std::uint64_t seed);

} // namespace phonokey::synth
