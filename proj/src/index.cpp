#include "phonokey/index.hpp"

#include "phonokey/medicine.hpp"
#include "phonokey/surname.hpp"
#include "phonokey/textnorm.hpp"
#include "phonokey/utf8.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace phonokey::index {
namespace {

constexpr std::string_view ruleset_header = "#ruleset=";
constexpr std::string_view records_header = "#records=";

std::uint64_t parse_count(std::string_view text, std::size_t line) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw IndexFormatError(line, "bad count '" + std::string(text) + "'");
    return value;
}

void index_record(PhoneticIndex& index, std::vector<Reject>& rejects, std::string_view record,
                  std::size_t line) {
    try {
        const auto keyed = keys_for(index.mode(), record);
        if (keyed.empty()) {
            rejects.push_back({line, "no-tokens"});
            return;
        }
        for (const auto& [token, key] : keyed)
            index.add(key, token.text());
    } catch (const textnorm::CleanError& e) {
        rejects.push_back({line, std::string(textnorm::describe(e.reason()))});
    }
}

} // namespace

std::vector<std::pair<CleanToken, PhoneticKey>> keys_for(Mode mode, std::string_view raw) {
    std::vector<std::pair<CleanToken, PhoneticKey>> out;
    if (mode == Mode::surname) {
        CleanToken token = textnorm::clean_surname(raw);
        PhoneticKey key = surname::key(token);
        out.emplace_back(std::move(token), std::move(key));
        return out;
    }
    for (auto& token : textnorm::clean_medicine(raw)) {
        PhoneticKey key = medicine::key(token);
        out.emplace_back(std::move(token), std::move(key));
    }
    return out;
}

IndexFormatError::IndexFormatError(std::size_t line, const std::string& what)
    : std::runtime_error("index line " + std::to_string(line) + ": " + what), line_(line) {}

BuildError::BuildError(std::size_t line, const std::string& what)
    : std::runtime_error("input line " + std::to_string(line) + ": " + what), line_(line) {}

void PhoneticIndex::add(const PhoneticKey& key, const std::string& form, std::uint64_t count) {
    if (count == 0)
        return;
    auto bucket = buckets_.find(key.text());
    if (bucket == buckets_.end())
        bucket = buckets_.emplace(key.text(), Bucket{}).first;
    bucket->second[form] += count;
    records_ += count;
}

void PhoneticIndex::merge(const PhoneticIndex& other) {
    if (other.mode_ != mode_)
        throw std::invalid_argument("cannot merge indexes built with different rulesets");
    for (const auto& [key, bucket] : other.buckets_) {
        auto& mine = buckets_[key];
        for (const auto& [form, count] : bucket)
            mine[form] += count;
    }
    records_ += other.records_;
}

const PhoneticIndex::Bucket* PhoneticIndex::find(std::string_view key) const {
    auto it = buckets_.find(key);
    return it == buckets_.end() ? nullptr : &it->second;
}

std::size_t PhoneticIndex::distinct_forms() const noexcept {
    std::size_t n = 0;
    for (const auto& [key, bucket] : buckets_)
        n += bucket.size();
    return n;
}

void PhoneticIndex::write(std::ostream& out) const {
    out << ruleset_header << ruleset() << '\n' << records_header << records_ << '\n';
    for (const auto& [key, bucket] : buckets_)
        for (const auto& [form, count] : bucket)
            out << key << '\t' << form << '\t' << count << '\n';
}

std::string PhoneticIndex::serialize() const {
    std::ostringstream out;
    write(out);
    return out.str();
}

PhoneticIndex PhoneticIndex::read(std::istream& in) {
    std::optional<Mode> mode;
    std::optional<std::uint64_t> declared;
    PhoneticIndex index;
    std::set<std::string, std::less<>> seen_forms;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::string_view view = line;
        if (view.starts_with(ruleset_header)) {
            mode = parse_mode(view.substr(ruleset_header.size()));
            if (!mode)
                throw IndexFormatError(line_no, "unknown ruleset");
            index.mode_ = *mode;
            continue;
        }
        if (view.starts_with(records_header)) {
            declared = parse_count(view.substr(records_header.size()), line_no);
            continue;
        }
        if (view.starts_with('#'))
            continue;
        if (!mode || !declared)
            throw IndexFormatError(line_no, "entry before #ruleset/#records header");

        const auto tab1 = view.find('\t');
        const auto tab2 = tab1 == std::string_view::npos ? tab1 : view.find('\t', tab1 + 1);
        if (tab2 == std::string_view::npos || view.find('\t', tab2 + 1) != std::string_view::npos)
            throw IndexFormatError(line_no, "expected key<TAB>form<TAB>count");
        const std::string key(view.substr(0, tab1));
        const std::string form(view.substr(tab1 + 1, tab2 - tab1 - 1));
        const std::uint64_t count = parse_count(view.substr(tab2 + 1), line_no);
        if (key.empty() || form.empty() || count == 0)
            throw IndexFormatError(line_no, "empty key, empty form or zero count");
        if (!utf8::is_valid(key) || !utf8::is_valid(form))
            throw IndexFormatError(line_no, "invalid UTF-8");
        if (!seen_forms.insert(form).second)
            throw IndexFormatError(line_no, "form '" + form + "' appears twice");
        index.add(PhoneticKey(key), form, count);
    }
    if (in.bad())
        throw IndexFormatError(line_no + 1, "read failure");
    if (!mode || !declared)
        throw IndexFormatError(line_no, "missing #ruleset or #records header");
    if (*declared != index.records_)
        throw IndexFormatError(line_no, "#records=" + std::to_string(*declared) +
                                            " does not match the sum of counts " +
                                            std::to_string(index.records_));
    return index;
}

PhoneticIndex PhoneticIndex::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read(in);
}

BuildResult build(std::span<const std::string> records, Mode mode, unsigned threads) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(records.size() / 1024 + 1)));

    std::vector<BuildResult> partial(threads, BuildResult{PhoneticIndex(mode), {}});
    auto run = [&](unsigned part) {
        const std::size_t begin = records.size() * part / threads;
        const std::size_t end = records.size() * (part + 1) / threads;
        for (std::size_t i = begin; i < end; ++i)
            index_record(partial[part].index, partial[part].rejects, records[i], i + 1);
    };
    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned part = 0; part < threads; ++part)
            workers.emplace_back(run, part);
    }

    BuildResult result{PhoneticIndex(mode), {}};
    for (auto& part : partial) {
        result.index.merge(part.index);
        result.rejects.insert(result.rejects.end(), part.rejects.begin(), part.rejects.end());
    }
    result.index.built_at = std::chrono::system_clock::now();
    return result;
}

BuildResult build(std::istream& lines, Mode mode, unsigned threads) {
    std::vector<std::string> records;
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        records.push_back(std::move(line));
    }
    if (lines.bad())
        throw BuildError(records.size() + 1, "read failure");
    return build(records, mode, threads);
}

std::optional<Rank> parse_rank(std::string_view name) noexcept {
    if (name == "none")
        return Rank::none;
    if (name == "edit-distance")
        return Rank::edit_distance;
    return std::nullopt;
}

LookupResult lookup(const PhoneticIndex& index, std::string_view query, Rank rank) {
    LookupResult result;
    std::vector<std::pair<CleanToken, PhoneticKey>> keyed;
    try {
        keyed = keys_for(index.mode(), query);
    } catch (const textnorm::CleanError&) {
        result.status = LookupStatus::unclean;
        return result;
    }
    if (keyed.empty()) {
        result.status = LookupStatus::unclean;
        return result;
    }

    std::map<std::string, Hit, std::less<>> found;
    for (const auto& [token, key] : keyed) {
        result.keys.push_back(key.text());
        const auto* bucket = index.find(key.text());
        if (!bucket)
            continue;
        for (const auto& [form, count] : *bucket) {
            std::optional<std::size_t> distance;
            if (rank == Rank::edit_distance)
                distance = edit_distance(token.chars(), utf8::decode(form));
            auto [it, inserted] = found.try_emplace(form, Hit{form, count, distance});
            if (!inserted && distance && it->second.distance && *distance < *it->second.distance)
                it->second.distance = distance;
        }
    }
    if (found.empty()) {
        result.status = LookupStatus::no_bucket;
        return result;
    }
    result.status = LookupStatus::found;
    for (auto& [form, hit] : found)
        result.hits.push_back(std::move(hit));
    if (rank == Rank::edit_distance) {
        std::stable_sort(result.hits.begin(), result.hits.end(),
                         [](const Hit& a, const Hit& b) { return *a.distance < *b.distance; });
    }
    return result;
}

std::size_t edit_distance(std::u32string_view a, std::u32string_view b) {
    if (a.size() < b.size())
        std::swap(a, b);
    std::vector<std::size_t> row(b.size() + 1);
    std::iota(row.begin(), row.end(), std::size_t{0});
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diagonal = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t above = row[j];
            const std::size_t substitution = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
            row[j] = std::min({above + 1, row[j - 1] + 1, substitution});
            diagonal = above;
        }
    }
    return row[b.size()];
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
    return edit_distance(utf8::decode(a), utf8::decode(b));
}

std::vector<DuplicateGroup> dedup(const PhoneticIndex& index) {
    std::vector<DuplicateGroup> groups;
    for (const auto& [key, bucket] : index.buckets()) {
        if (bucket.size() < 2)
            continue;
        DuplicateGroup group{key, {}, 0};
        for (const auto& [form, count] : bucket) {
            group.members.push_back({form, count});
            group.total += count;
        }
        groups.push_back(std::move(group));
    }
    std::stable_sort(groups.begin(), groups.end(),
                     [](const DuplicateGroup& a, const DuplicateGroup& b) { return a.total > b.total; });
    return groups;
}

} // namespace phonokey::index
