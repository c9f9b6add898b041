#include "phonokey/rewrite.hpp"

#include "phonokey/utf8.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace phonokey::rewrite {
namespace {

std::vector<std::u32string> decode_all(const std::vector<std::string_view>& items) {
    std::vector<std::u32string> out;
    out.reserve(items.size());
    for (auto item : items)
        out.push_back(utf8::decode(item));
    return out;
}

std::string join(const std::vector<std::u32string>& items, char separator) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            out.push_back(separator);
        out += items[i].empty() ? std::string("∅") : utf8::encode(items[i]);
    }
    return out;
}

std::u32string substitute_second(const std::u32string& tmpl, const std::u32string& second) {
    std::u32string out;
    for (std::size_t i = 0; i < tmpl.size(); ++i) {
        if (tmpl[i] == U'$' && i + 1 < tmpl.size() && tmpl[i + 1] == U'2') {
            out += second;
            ++i;
        } else {
            out.push_back(tmpl[i]);
        }
    }
    return out;
}

std::size_t max_passes(std::size_t length) { return 4 * length + 16; }

// One left-to-right, non-overlapping pass. Alternatives are grouped by their
// first character and ordered longest first inside a group.
bool rewrite_pass(std::span<const Alternative> alternatives, const std::u32string& in,
                  std::u32string& out) {
    out.clear();
    bool changed = false;
    for (std::size_t i = 0; i < in.size();) {
        const char32_t head = in[i];
        auto lo = std::partition_point(alternatives.begin(), alternatives.end(),
                                       [head](const Alternative& a) { return a.from[0] < head; });
        const Alternative* hit = nullptr;
        for (auto it = lo; it != alternatives.end() && it->from[0] == head; ++it) {
            if (in.compare(i, it->from.size(), it->from) == 0) {
                hit = &*it;
                break;
            }
        }
        if (hit) {
            out += hit->to;
            i += hit->from.size();
            changed = true;
        } else {
            out.push_back(in[i++]);
        }
    }
    return changed;
}

bool rewrite_ending(std::span<const Alternative> alternatives, std::u32string& text) {
    const Alternative* best = nullptr;
    for (const auto& alt : alternatives) {
        if (alt.from.size() > text.size())
            continue;
        if (text.compare(text.size() - alt.from.size(), alt.from.size(), alt.from) != 0)
            continue;
        if (!best || alt.from.size() > best->from.size())
            best = &alt;
    }
    if (!best)
        return false;
    text.replace(text.size() - best->from.size(), best->from.size(), best->to);
    return true;
}

void collapse_runs(std::u32string& text) {
    text.erase(std::unique(text.begin(), text.end()), text.end());
}

} // namespace

std::string_view to_string(RuleKind kind) noexcept {
    switch (kind) {
    case RuleKind::literal:
        return "literal";
    case RuleKind::class_pair:
        return "class-pair";
    case RuleKind::set_to_one:
        return "set-to-one";
    case RuleKind::end_anchored:
        return "end-anchored";
    case RuleKind::dedup:
        return "dedup";
    }
    return "?";
}

std::string_view to_string(Anchor anchor) noexcept {
    return anchor == Anchor::word_end ? "word-end" : "none";
}

std::optional<RuleKind> parse_kind(std::string_view name) noexcept {
    for (auto kind : {RuleKind::literal, RuleKind::class_pair, RuleKind::set_to_one,
                      RuleKind::end_anchored, RuleKind::dedup})
        if (to_string(kind) == name)
            return kind;
    return std::nullopt;
}

std::optional<Anchor> parse_anchor(std::string_view name) noexcept {
    if (name == "none")
        return Anchor::none;
    if (name == "word-end")
        return Anchor::word_end;
    return std::nullopt;
}

RewriteRule::RewriteRule(std::string step, RuleKind kind) : step_(std::move(step)), kind_(kind) {}

RewriteRule RewriteRule::literal(std::string step, std::string_view from, std::string_view to) {
    RewriteRule rule(std::move(step), RuleKind::literal);
    rule.firsts_ = {utf8::decode(from)};
    rule.replacements_ = {utf8::decode(to)};
    rule.alternatives_ = {{rule.firsts_[0], rule.replacements_[0]}};
    rule.finalize();
    return rule;
}

RewriteRule RewriteRule::set_to_one(std::string step, const std::vector<std::string_view>& froms,
                                    std::string_view to) {
    RewriteRule rule(std::move(step), RuleKind::set_to_one);
    rule.firsts_ = decode_all(froms);
    rule.replacements_ = {utf8::decode(to)};
    for (const auto& from : rule.firsts_)
        rule.alternatives_.push_back({from, rule.replacements_[0]});
    rule.finalize();
    return rule;
}

RewriteRule RewriteRule::class_pair(std::string step, const std::vector<std::string_view>& firsts,
                                    const std::vector<std::string_view>& seconds,
                                    const std::vector<std::string_view>& replacements) {
    RewriteRule rule(std::move(step), RuleKind::class_pair);
    rule.firsts_ = decode_all(firsts);
    rule.seconds_ = decode_all(seconds);
    rule.replacements_ = decode_all(replacements);
    if (rule.seconds_.empty())
        throw std::invalid_argument("class-pair rule needs at least one second member");
    if (rule.replacements_.size() != 1 && rule.replacements_.size() != rule.firsts_.size())
        throw std::invalid_argument("class-pair replacements must be one template or one per first");
    for (std::size_t i = 0; i < rule.firsts_.size(); ++i) {
        const auto& tmpl = rule.replacements_.size() == 1 ? rule.replacements_[0] : rule.replacements_[i];
        for (const auto& second : rule.seconds_)
            rule.alternatives_.push_back({rule.firsts_[i] + second, substitute_second(tmpl, second)});
    }
    rule.finalize();
    return rule;
}

RewriteRule RewriteRule::end_anchored(
    std::string step, const std::vector<std::pair<std::string_view, std::string_view>>& endings) {
    RewriteRule rule(std::move(step), RuleKind::end_anchored);
    for (const auto& [from, to] : endings) {
        rule.firsts_.push_back(utf8::decode(from));
        rule.replacements_.push_back(utf8::decode(to));
        rule.alternatives_.push_back({rule.firsts_.back(), rule.replacements_.back()});
    }
    rule.finalize();
    return rule;
}

RewriteRule RewriteRule::dedup(std::string step) {
    return RewriteRule(std::move(step), RuleKind::dedup);
}

void RewriteRule::finalize() {
    if (alternatives_.empty())
        throw std::invalid_argument("rule at step " + step_ + " has no pattern");
    for (const auto& alt : alternatives_)
        if (alt.from.empty())
            throw std::invalid_argument("rule at step " + step_ + " has an empty pattern");
    std::sort(alternatives_.begin(), alternatives_.end(), [](const Alternative& a, const Alternative& b) {
        if (a.from[0] != b.from[0])
            return a.from[0] < b.from[0];
        if (a.from.size() != b.from.size())
            return a.from.size() > b.from.size();
        return a.from < b.from;
    });
    auto same = [](const Alternative& a, const Alternative& b) { return a.from == b.from; };
    if (std::adjacent_find(alternatives_.begin(), alternatives_.end(), same) != alternatives_.end())
        throw std::invalid_argument("rule at step " + step_ + " lists a pattern twice");
}

std::string RewriteRule::pattern_text() const {
    switch (kind_) {
    case RuleKind::dedup:
        return "*";
    case RuleKind::class_pair:
        return join(firsts_, '|') + "+" + join(seconds_, '|');
    default:
        return join(firsts_, '|');
    }
}

std::string RewriteRule::replacement_text() const {
    if (kind_ == RuleKind::dedup)
        return "∅";
    return join(replacements_, '|');
}

std::u32string apply_rule(const RewriteRule& rule, std::u32string text) {
    if (rule.kind() == RuleKind::dedup) {
        collapse_runs(text);
        return text;
    }
    const std::size_t limit = max_passes(text.size());
    if (rule.kind() == RuleKind::end_anchored) {
        for (std::size_t pass = 0; rewrite_ending(rule.alternatives(), text); ++pass)
            if (pass > limit)
                throw ConvergenceError("rule at step " + rule.step() + " does not converge");
        return text;
    }
    std::u32string scratch;
    for (std::size_t pass = 0; rewrite_pass(rule.alternatives(), text, scratch); ++pass) {
        text.swap(scratch);
        if (pass > limit)
            throw ConvergenceError("rule at step " + rule.step() + " does not converge");
    }
    return text;
}

std::u32string apply(const RuleSet& rules, std::u32string text) {
    for (const auto& rule : rules.rules)
        text = apply_rule(rule, std::move(text));
    return text;
}

std::u32string apply(const RuleSet& rules, std::u32string text, RewriteTrace& trace) {
    for (std::size_t i = 0; i < rules.rules.size(); ++i) {
        std::u32string next = apply_rule(rules.rules[i], text);
        if (next != text) {
            trace.push_back({i, rules.rules[i].step(), utf8::encode(text), utf8::encode(next)});
            text = std::move(next);
        }
    }
    return text;
}

RewriteResult apply(const RuleSet& rules, const CleanToken& token) {
    RewriteResult result;
    result.output = utf8::encode(apply(rules, token.chars(), result.trace));
    return result;
}

std::u32string apply_profiled(const RuleSet& rules, std::u32string text,
                              std::span<std::chrono::nanoseconds> per_rule) {
    if (per_rule.size() < rules.rules.size())
        throw std::invalid_argument("timing buffer smaller than the ruleset");
    using clock = std::chrono::steady_clock;
    for (std::size_t i = 0; i < rules.rules.size(); ++i) {
        const auto start = clock::now();
        text = apply_rule(rules.rules[i], std::move(text));
        per_rule[i] += std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start);
    }
    return text;
}

std::string replay(const RuleSet& rules, std::string_view input, const RewriteTrace& trace) {
    std::u32string current = utf8::decode(input);
    std::size_t next_step = 0;
    for (std::size_t i = 0; i < rules.rules.size(); ++i) {
        const std::u32string after = apply_rule(rules.rules[i], current);
        const bool traced = next_step < trace.size() && trace[next_step].rule == i;
        if (!traced) {
            if (after != current)
                throw std::logic_error("rule " + std::to_string(i) + " fired but is missing from the trace");
            continue;
        }
        const TraceStep& step = trace[next_step++];
        if (step.before != utf8::encode(current) || step.after != utf8::encode(after))
            throw std::logic_error("trace step for rule " + std::to_string(i) + " does not replay");
        current = after;
    }
    if (next_step != trace.size())
        throw std::logic_error("trace has steps for rules outside the ruleset or out of order");
    return utf8::encode(current);
}

std::vector<LintWarning> lint(const RuleSet& rules) {
    std::vector<LintWarning> warnings;
    std::map<char32_t, std::size_t> removed; // char -> rule that deletes it everywhere

    auto first_removed = [&](const std::u32string& s) -> std::optional<std::pair<char32_t, std::size_t>> {
        for (char32_t c : s)
            if (auto it = removed.find(c); it != removed.end())
                return *it;
        return std::nullopt;
    };
    auto describe_rule = [&](std::size_t index) {
        return "rule " + std::to_string(index) + " (step " + rules.rules[index].step() + ")";
    };

    for (std::size_t i = 0; i < rules.rules.size(); ++i) {
        const RewriteRule& rule = rules.rules[i];
        const auto alternatives = rule.alternatives();

        for (const auto& alt : alternatives) {
            if (auto hit = first_removed(alt.from))
                warnings.push_back({i, "pattern '" + utf8::encode(alt.from) + "' unreachable: '" +
                                           utf8::encode(hit->first) + "' is removed by " +
                                           describe_rule(hit->second)});
            if (auto hit = first_removed(alt.to))
                warnings.push_back({i, "replacement '" + utf8::encode(alt.to) + "' reintroduces '" +
                                           utf8::encode(hit->first) + "' removed by " +
                                           describe_rule(hit->second)});
            for (const auto& other : alternatives) {
                if (alt.to.find(other.from) != std::u32string::npos) {
                    warnings.push_back({i, "replacement '" + utf8::encode(alt.to) + "' contains pattern '" +
                                               utf8::encode(other.from) + "'; rule may not terminate"});
                    break;
                }
            }
        }

        for (const auto& alt : alternatives)
            for (char32_t c : alt.to)
                removed.erase(c);
        if (rule.kind() != RuleKind::end_anchored) {
            for (const auto& alt : alternatives)
                if (alt.from.size() == 1 && alt.to.find(alt.from[0]) == std::u32string::npos)
                    removed.emplace(alt.from[0], i);
        }
    }

    std::vector<std::pair<std::size_t, const Alternative*>> endings;
    for (std::size_t i = 0; i < rules.rules.size(); ++i)
        if (rules.rules[i].kind() == RuleKind::end_anchored)
            for (const auto& alt : rules.rules[i].alternatives())
                endings.emplace_back(i, &alt);
    for (std::size_t a = 0; a < endings.size(); ++a) {
        for (std::size_t b = 0; b < endings.size(); ++b) {
            if (a == b)
                continue;
            const auto& shorter = endings[a].second->from;
            const auto& longer = endings[b].second->from;
            if (shorter.size() <= longer.size() && (shorter.size() < longer.size() || a < b) &&
                longer.compare(longer.size() - shorter.size(), shorter.size(), shorter) == 0)
                warnings.push_back({endings[b].first, "end-anchored patterns '" + utf8::encode(shorter) +
                                                          "' and '" + utf8::encode(longer) + "' overlap"});
        }
    }
    return warnings;
}

} // namespace phonokey::rewrite
