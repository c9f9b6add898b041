#pragma once

#include "phonokey/types.hpp"

#include <chrono>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Ordered string-rewrite engine. Each phonetic algorithm is a RuleSet: a
// fixed list of rules applied once, in order. Within a rule the text is
// rewritten left to right, leftmost match first, longest alternative first
// at a given position, without overlaps; the pass repeats until the rule no
// longer matches.
namespace phonokey::rewrite {

enum class RuleKind { literal, class_pair, set_to_one, end_anchored, dedup };
enum class Anchor { none, word_end };

std::string_view to_string(RuleKind kind) noexcept;
std::string_view to_string(Anchor anchor) noexcept;
std::optional<RuleKind> parse_kind(std::string_view name) noexcept;
std::optional<Anchor> parse_anchor(std::string_view name) noexcept;

// One concrete source -> replacement pair after class expansion.
struct Alternative {
    std::u32string from;
    std::u32string to;
};

class RewriteRule {
public:
    static RewriteRule literal(std::string step, std::string_view from, std::string_view to);

    static RewriteRule set_to_one(std::string step, const std::vector<std::string_view>& froms,
                                  std::string_view to);

    // Every first followed by every second. `replacements` is either one
    // template or one per first; "$2" in a template stands for the matched
    // second member.
    static RewriteRule class_pair(std::string step, const std::vector<std::string_view>& firsts,
                                  const std::vector<std::string_view>& seconds,
                                  const std::vector<std::string_view>& replacements);

    // Suffix rewrites; the longest matching ending wins.
    static RewriteRule end_anchored(
        std::string step, const std::vector<std::pair<std::string_view, std::string_view>>& endings);

    // Collapses every run of an identical character to one.
    static RewriteRule dedup(std::string step);

    RuleKind kind() const noexcept { return kind_; }
    Anchor anchor() const noexcept {
        return kind_ == RuleKind::end_anchored ? Anchor::word_end : Anchor::none;
    }
    const std::string& step() const noexcept { return step_; }

    // Sorted by first character, then longest first.
    std::span<const Alternative> alternatives() const noexcept { return alternatives_; }

    std::string pattern_text() const;
    std::string replacement_text() const;

private:
    RewriteRule(std::string step, RuleKind kind);
    void finalize();

    std::string step_;
    RuleKind kind_;
    // Presentation form kept for table export.
    std::vector<std::u32string> firsts_;
    std::vector<std::u32string> seconds_;
    std::vector<std::u32string> replacements_;
    std::vector<Alternative> alternatives_;
};

struct RuleSet {
    std::string name;
    std::vector<RewriteRule> rules;
};

struct TraceStep {
    std::size_t rule = 0;
    std::string step;
    std::string before;
    std::string after;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

using RewriteTrace = std::vector<TraceStep>;

struct RewriteResult {
    std::string output;
    RewriteTrace trace;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::u32string apply_rule(const RewriteRule& rule, std::u32string text);

std::u32string apply(const RuleSet& rules, std::u32string text);
std::u32string apply(const RuleSet& rules, std::u32string text, RewriteTrace& trace);
RewriteResult apply(const RuleSet& rules, const CleanToken& token);

// Adds the time spent in each rule to `per_rule` (sized rules.rules.size()).
std::u32string apply_profiled(const RuleSet& rules, std::u32string text,
                              std::span<std::chrono::nanoseconds> per_rule);

// Re-runs every traced rule on its recorded input and checks the chain links
// up from `input`; returns the final string. Throws std::logic_error on any
// mismatch.
std::string replay(const RuleSet& rules, std::string_view input, const RewriteTrace& trace);

struct LintWarning {
    std::size_t rule = 0;
    std::string message;
};

// Static ordering checks: patterns made unreachable by an earlier
// unconditional deletion, replacements that reintroduce such characters,
// overlapping word-end patterns and self-feeding rules.
std::vector<LintWarning> lint(const RuleSet& rules);

class TableError : public std::runtime_error {
public:
    TableError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Plain-text form: "# ruleset=<name>" then one rule per line,
// step<TAB>kind<TAB>pattern<TAB>replacement<TAB>anchor. Alternatives are
// separated by '|', class-pair firsts and seconds by '+', the empty string
// is written as "∅".
std::string to_table(const RuleSet& rules);
RuleSet parse_table(std::string_view text);

} // namespace phonokey::rewrite
