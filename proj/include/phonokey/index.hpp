#pragma once

#include "phonokey/types.hpp"

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace phonokey::index {

// Cleans `raw` for the given mode and keys every resulting token. Surname
// mode yields exactly one pair or throws textnorm::CleanError.
std::vector<std::pair<CleanToken, PhoneticKey>> keys_for(Mode mode, std::string_view raw);

struct Posting {
    std::string form;
    std::uint64_t count = 0;

    friend bool operator==(const Posting&, const Posting&) = default;
};

class IndexFormatError : public std::runtime_error {
public:
    IndexFormatError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Inverted index key -> bucket of cleaned forms with occurrence counts.
// Keys and forms are kept in byte order so serialization is deterministic.
class PhoneticIndex {
public:
    using Bucket = std::map<std::string, std::uint64_t, std::less<>>;
    using Buckets = std::map<std::string, Bucket, std::less<>>;

    explicit PhoneticIndex(Mode mode = Mode::surname) : mode_(mode) {}

    Mode mode() const noexcept { return mode_; }
    std::string_view ruleset() const noexcept { return to_string(mode_); }

    void add(const PhoneticKey& key, const std::string& form, std::uint64_t count = 1);

    // Bucket-wise union with counts added; associative and commutative.
    void merge(const PhoneticIndex& other);

    const Bucket* find(std::string_view key) const;
    const Buckets& buckets() const noexcept { return buckets_; }

    std::uint64_t records() const noexcept { return records_; }
    std::size_t distinct_keys() const noexcept { return buckets_.size(); }
    std::size_t distinct_forms() const noexcept;

    // Wall-clock time of build(); not part of the serialized form.
    std::optional<std::chrono::system_clock::time_point> built_at;

    void write(std::ostream& out) const;
    std::string serialize() const;
    static PhoneticIndex read(std::istream& in);
    static PhoneticIndex parse(std::string_view text);

    friend bool operator==(const PhoneticIndex& a, const PhoneticIndex& b) {
        return a.mode_ == b.mode_ && a.records_ == b.records_ && a.buckets_ == b.buckets_;
    }

private:
    Mode mode_;
    std::uint64_t records_ = 0;
    Buckets buckets_;
};

struct Reject {
    std::size_t line = 0; // 1-based
    std::string reason;

    friend bool operator==(const Reject&, const Reject&) = default;
};

struct BuildResult {
    PhoneticIndex index;
    std::vector<Reject> rejects;
};

class BuildError : public std::runtime_error {
public:
    BuildError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// One record (surname mode) or title (medicine mode) per element. In
// medicine mode every surviving word counts as one record; titles with no
// surviving word are rejected as "no-tokens". With threads > 1 the input is
// split into contiguous chunks whose partial indexes are merged.
BuildResult build(std::span<const std::string> records, Mode mode, unsigned threads = 1);
BuildResult build(std::istream& lines, Mode mode, unsigned threads = 1);

enum class Rank { none, edit_distance };

std::optional<Rank> parse_rank(std::string_view name) noexcept;

struct Hit {
    std::string form;
    std::uint64_t count = 0;
    std::optional<std::size_t> distance;

    friend bool operator==(const Hit&, const Hit&) = default;
};

enum class LookupStatus { found, no_bucket, unclean };

struct LookupResult {
    LookupStatus status = LookupStatus::no_bucket;
    std::vector<std::string> keys;
    std::vector<Hit> hits;
};

// Bucket members for the query's key(s). With Rank::edit_distance members
// are ordered by distance to the cleaned query, ties by form.
LookupResult lookup(const PhoneticIndex& index, std::string_view query, Rank rank = Rank::none);

// Levenshtein distance over code points.
std::size_t edit_distance(std::u32string_view a, std::u32string_view b);
std::size_t edit_distance(std::string_view a, std::string_view b);

struct DuplicateGroup {
    std::string key;
    std::vector<Posting> members;
    std::uint64_t total = 0;
};

// Buckets holding two or more distinct forms, largest total count first.
std::vector<DuplicateGroup> dedup(const PhoneticIndex& index);

} // namespace phonokey::index
