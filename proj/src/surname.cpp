#include "phonokey/surname.hpp"

#include "phonokey/utf8.hpp"

#include <algorithm>

namespace phonokey::surname {
namespace {

using rewrite::RewriteRule;

rewrite::RuleSet build() {
    rewrite::RuleSet set;
    set.name = "surname";
    auto& r = set.rules;

    r.push_back(RewriteRule::literal("2", "ґ", "г"));

    // Vowels to their sound forms; the two-letter spellings go first.
    r.push_back(RewriteRule::set_to_one("3", {"іе", "йе"}, "е"));
    r.push_back(RewriteRule::set_to_one("3", {"іа", "ія"}, "а"));
    r.push_back(RewriteRule::literal("3", "йо", "о"));
    r.push_back(RewriteRule::literal("3", "є", "е"));
    r.push_back(RewriteRule::literal("3", "я", "а"));
    r.push_back(RewriteRule::set_to_one("3", {"і", "ї", "й"}, "и"));
    r.push_back(RewriteRule::literal("3", "ю", "у"));

    r.push_back(RewriteRule::end_anchored("4", {{"ў", "в"}}));

    r.push_back(RewriteRule::set_to_one("5", {"цьк", "дськ", "тськ", "кськ", "чськ", "цськ"}, "3"));
    r.push_back(RewriteRule::set_to_one("5", {"зьк", "гськ", "жськ", "зськ"}, "2"));
    // "с1" absorbs any further leading с, so с+ьк collapses to one code.
    r.push_back(RewriteRule::set_to_one("5", {"сськ", "ськ", "с1"}, "1"));

    r.push_back(RewriteRule::literal("6", "ь", ""));

    r.push_back(RewriteRule::class_pair("7", {"п", "х", "т", "ш", "с"}, {"б", "г", "д", "ж", "з"},
                                        {"б$2", "г$2", "д$2", "ж$2", "з$2"}));

    r.push_back(RewriteRule::literal("8", "хв", "ф"));

    r.push_back(RewriteRule::set_to_one("9", {"сч", "жч", "шч", "щч"}, "щ"));

    r.push_back(RewriteRule::literal("10", "стн", "сн"));
    r.push_back(RewriteRule::literal("10", "здн", "зн"));
    r.push_back(RewriteRule::literal("10", "слн", "сн"));
    r.push_back(RewriteRule::literal("10", "стл", "сл"));
    r.push_back(RewriteRule::literal("10", "шчн", "шн"));

    r.push_back(RewriteRule::literal("11", "цв", "ц"));

    r.push_back(RewriteRule::dedup("12"));

    // Endings written with й are matched as the vowel step leaves them
    // (й already reads и). -ийло arrives as -ило, which ordinary names share,
    // so code L has no pattern.
    r.push_back(RewriteRule::end_anchored("13", {
        {"авко", "A"}, {"аико", "B"}, {"аика", "B"}, {"аило", "C"}, {"анко", "D"},
        {"ашко", "E"}, {"евич", "F"}, {"евка", "G"}, {"еико", "H"}, {"еика", "H"},
        {"енко", "I"}, {"енка", "I"}, {"ечко", "J"}, {"ешко", "K"},
        {"иско", "M"}, {"ишин", "N"}, {"ишко", "O"}, {"ович", "P"}, {"онко", "Q"},
        {"очко", "R"}, {"уник", "S"}, {"унко", "T"}, {"унка", "T"}, {"ушко", "U"},
        {"ушка", "U"},
    }));
    return set;
}

} // namespace

const rewrite::RuleSet& rules() {
    static const rewrite::RuleSet set = build();
    return set;
}

std::vector<std::pair<std::string, std::string>> ending_codes() {
    std::vector<std::pair<std::string, std::string>> out;
    const auto& last = rules().rules.back();
    for (const auto& alt : last.alternatives())
        out.emplace_back(utf8::encode(alt.from), utf8::encode(alt.to));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    return out;
}

PhoneticKey key(const CleanToken& token) {
    if (token.hyphenated())
        return PhoneticKey(token.text());
    return PhoneticKey(utf8::encode(rewrite::apply(rules(), token.chars())));
}

KeyTrace key_with_trace(const CleanToken& token) {
    if (token.hyphenated())
        return {PhoneticKey(token.text()), {}};
    auto result = rewrite::apply(rules(), token);
    return {PhoneticKey(std::move(result.output)), std::move(result.trace)};
}

} // namespace phonokey::surname
