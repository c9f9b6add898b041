#include "phonokey/rewrite.hpp"

#include <sstream>

namespace phonokey::rewrite {
namespace {

constexpr std::string_view empty_marker = "∅";

std::vector<std::string_view> split(std::string_view text, char separator) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = text.find(separator, start);
        parts.push_back(text.substr(start, end == std::string_view::npos ? end : end - start));
        if (end == std::string_view::npos)
            return parts;
        start = end + 1;
    }
}

std::vector<std::string_view> alternatives(std::string_view field) {
    auto parts = split(field, '|');
    for (auto& p : parts)
        if (p == empty_marker)
            p = {};
    return parts;
}

} // namespace

TableError::TableError(std::size_t line, const std::string& what)
    : std::runtime_error("rule table line " + std::to_string(line) + ": " + what), line_(line) {}

std::string to_table(const RuleSet& rules) {
    std::ostringstream out;
    out << "# ruleset=" << rules.name << '\n';
    out << "# step\tkind\tpattern\treplacement\tanchor\n";
    for (const auto& rule : rules.rules) {
        out << rule.step() << '\t' << to_string(rule.kind()) << '\t' << rule.pattern_text() << '\t'
            << rule.replacement_text() << '\t' << to_string(rule.anchor()) << '\n';
    }
    return out.str();
}

RuleSet parse_table(std::string_view text) {
    RuleSet rules;
    std::size_t line_no = 0;
    for (std::string_view line : split(text, '\n')) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;
        if (line.front() == '#') {
            constexpr std::string_view header = "# ruleset=";
            if (line.starts_with(header))
                rules.name = std::string(line.substr(header.size()));
            continue;
        }

        const auto fields = split(line, '\t');
        if (fields.size() != 5)
            throw TableError(line_no, "expected 5 tab-separated fields, got " + std::to_string(fields.size()));
        const std::string step(fields[0]);
        const auto kind = parse_kind(fields[1]);
        if (!kind)
            throw TableError(line_no, "unknown rule kind '" + std::string(fields[1]) + "'");
        const auto anchor = parse_anchor(fields[4]);
        if (!anchor)
            throw TableError(line_no, "unknown anchor '" + std::string(fields[4]) + "'");
        if ((*anchor == Anchor::word_end) != (*kind == RuleKind::end_anchored))
            throw TableError(line_no, "anchor word-end is reserved for end-anchored rules");

        const auto patterns = alternatives(fields[2]);
        const auto replacements = alternatives(fields[3]);
        try {
            switch (*kind) {
            case RuleKind::literal:
                if (patterns.size() != 1 || replacements.size() != 1)
                    throw TableError(line_no, "literal rule takes one pattern and one replacement");
                rules.rules.push_back(RewriteRule::literal(step, patterns[0], replacements[0]));
                break;
            case RuleKind::set_to_one:
                if (replacements.size() != 1)
                    throw TableError(line_no, "set-to-one rule takes a single replacement");
                rules.rules.push_back(RewriteRule::set_to_one(step, patterns, replacements[0]));
                break;
            case RuleKind::class_pair: {
                const auto halves = split(fields[2], '+');
                if (halves.size() != 2)
                    throw TableError(line_no, "class-pair pattern must be firsts+seconds");
                rules.rules.push_back(RewriteRule::class_pair(step, alternatives(halves[0]),
                                                              alternatives(halves[1]), replacements));
                break;
            }
            case RuleKind::end_anchored: {
                if (replacements.size() != 1 && replacements.size() != patterns.size())
                    throw TableError(line_no, "end-anchored replacements must be one or one per ending");
                std::vector<std::pair<std::string_view, std::string_view>> endings;
                for (std::size_t i = 0; i < patterns.size(); ++i)
                    endings.emplace_back(patterns[i], replacements.size() == 1 ? replacements[0] : replacements[i]);
                rules.rules.push_back(RewriteRule::end_anchored(step, endings));
                break;
            }
            case RuleKind::dedup:
                if (fields[2] != "*")
                    throw TableError(line_no, "dedup rule pattern must be '*'");
                rules.rules.push_back(RewriteRule::dedup(step));
                break;
            }
        } catch (const TableError&) {
            throw;
        } catch (const std::exception& e) {
            throw TableError(line_no, e.what());
        }
    }
    return rules;
}

} // namespace phonokey::rewrite
