#include "phonokey/medicine.hpp"

#include "phonokey/textnorm.hpp"
#include "phonokey/utf8.hpp"

namespace phonokey::medicine {
namespace {

using rewrite::RewriteRule;

rewrite::RuleSet build() {
    rewrite::RuleSet set;
    set.name = "medicine";
    auto& r = set.rules;
    r.push_back(RewriteRule::literal("7", "ґ", "г"));
    r.push_back(RewriteRule::set_to_one("8", {"йе", "іе"}, "е"));
    r.push_back(RewriteRule::set_to_one("8", {"іа", "ія", "иа"}, "а"));
    r.push_back(RewriteRule::literal("8", "йо", "о"));
    r.push_back(RewriteRule::set_to_one("8", {"є", "э"}, "е"));
    r.push_back(RewriteRule::literal("8", "я", "а"));
    r.push_back(RewriteRule::set_to_one("8", {"і", "ї", "ы", "й"}, "и"));
    r.push_back(RewriteRule::literal("8", "ю", "у"));
    r.push_back(RewriteRule::literal("8", "ё", "о"));
    r.push_back(RewriteRule::dedup("9"));
    return set;
}

} // namespace

const rewrite::RuleSet& rules() {
    static const rewrite::RuleSet set = build();
    return set;
}

PhoneticKey key(const CleanToken& token) {
    return PhoneticKey(utf8::encode(rewrite::apply(rules(), token.chars())));
}

std::vector<PhoneticKey> keys(std::string_view title) {
    std::vector<PhoneticKey> out;
    for (const auto& token : textnorm::clean_medicine(title))
        out.push_back(key(token));
    return out;
}

} // namespace phonokey::medicine
