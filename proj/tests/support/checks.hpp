#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

// Reusable randomized checks. Each returns how many cases ran and the first
// few failures, so both the unit suites and the acceptance runner can use
// them.
namespace checks {

struct Outcome {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> examples; // first failures, human-readable
    std::string summary;               // free-form numbers for the report line

    bool ok() const noexcept { return cases > 0 && failures == 0; }
    void fail(std::string what);
};

// Random lowercase surname-alphabet strings biased towards the clusters,
// digraphs and endings the rules care about.
std::string random_surname(std::mt19937_64& rng);
// Random medicine titles of one to three words, mixed uk/ru spelling.
std::string random_title(std::mt19937_64& rng);
// Arbitrary text: Cyrillic and Latin of both cases, digits, punctuation,
// apostrophes, hyphens, whitespace, combining marks and random BMP code points.
std::string random_unicode(std::mt19937_64& rng);

Outcome oracle_equivalence(std::size_t tokens, std::uint64_t seed);
Outcome surname_variant_recall(std::size_t bases, std::uint64_t seed);
Outcome medicine_pair_recall(std::size_t pairs, std::uint64_t seed);

struct Compression {
    std::size_t records = 0;
    std::uint64_t structured_n = 0;
    std::uint64_t structured_i = 0;
    double structured_k = 0.0;
    double full_k = 0.0;
};
Compression compression(std::size_t records, std::uint64_t seed);

Outcome key_alphabet(std::size_t cases, std::uint64_t seed);
Outcome clean_idempotence(std::size_t cases, std::uint64_t seed);
Outcome dedup_collapse(std::size_t cases, std::uint64_t seed);
Outcome non_expansion(std::size_t cases, std::uint64_t seed);
Outcome edit_distance_metric(std::size_t cases, std::uint64_t seed);
Outcome index_partition(std::size_t cases, std::uint64_t seed);
Outcome rebuild_determinism(std::size_t cases, std::uint64_t seed);
Outcome trace_replay(std::size_t cases, std::uint64_t seed);

struct OrderSensitivity {
    std::string canonical_key;
    std::string swapped_key;
    std::size_t canonical_warnings = 0;
    bool swapped_flags_sk = false; // "pattern 'ськ' unreachable" reported
};
OrderSensitivity order_sensitivity();

} // namespace checks
