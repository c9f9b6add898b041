#include "phonokey/rewrite.hpp"
#include "phonokey/surname.hpp"
#include "phonokey/medicine.hpp"
#include "phonokey/utf8.hpp"

#include <doctest.h>

using namespace phonokey;
using rewrite::RewriteRule;
using rewrite::RuleSet;

namespace {

std::string run(const RuleSet& rules, std::string_view text) {
    return utf8::encode(rewrite::apply(rules, utf8::decode(text)));
}

bool any_warning_contains(const RuleSet& rules, std::string_view needle) {
    for (const auto& w : rewrite::lint(rules))
        if (w.message.find(needle) != std::string::npos)
            return true;
    return false;
}

} // namespace

TEST_CASE("single rules") {
    CHECK(run({"t", {RewriteRule::literal("8", "хв", "ф")}}, "хвостов") == "фостов");
    CHECK(run({"t", {}}, "мелник") == "мелник");
    CHECK(run({"t", {RewriteRule::dedup("12")}}, "ареев") == "арев");
    CHECK(run({"t", {RewriteRule::dedup("12")}}, "") == "");
}

TEST_CASE("within-rule fixpoint consumes pile-ups") {
    const RuleSet s{"t", {RewriteRule::set_to_one("5", {"сськ", "ськ", "с1"}, "1")}};
    CHECK(run(s, "ссськ") == "1");
    CHECK(run(s, "сссськи") == "1и");
    const RuleSet collapse{"t", {RewriteRule::literal("x", "аа", "а")}};
    CHECK(run(collapse, "аааааа") == "а");
}

TEST_CASE("leftmost non-overlapping matches, longest first") {
    const RuleSet s{"t", {RewriteRule::set_to_one("x", {"аб", "абв"}, "1")}};
    CHECK(run(s, "абвабаб") == "111");
    const RuleSet overlap{"t", {RewriteRule::literal("x", "аа", "б")}};
    CHECK(run(overlap, "ааа") == "ба");
}

TEST_CASE("class pair with a back-reference propagates leftwards") {
    const RuleSet s{"t", {RewriteRule::class_pair("7", {"п", "х", "т", "ш", "с"}, {"б", "г", "д", "ж", "з"},
                                                  {"б$2", "г$2", "д$2", "ж$2", "з$2"})}};
    CHECK(run(s, "тсд") == "дзд");
    CHECK(run(s, "просьба") == "просьба");
    CHECK(run(s, "косба") == "козба");
    CHECK(s.rules[0].alternatives().size() == 25);
}

TEST_CASE("end-anchored rules take the longest suffix once") {
    const RuleSet s{"t", {RewriteRule::end_anchored("13", {{"ко", "X"}, {"енко", "I"}})}};
    CHECK(run(s, "шевченко") == "шевчI");
    CHECK(run(s, "петко") == "петX");
    CHECK(run(s, "енкоб") == "енкоб");
    const RuleSet w{"t", {RewriteRule::end_anchored("4", {{"ў", "в"}})}};
    CHECK(run(w, "ўлаў") == "ўлав");
}

TEST_CASE("invalid rules are refused") {
    CHECK_THROWS(RewriteRule::literal("x", "", "а"));
    CHECK_THROWS(RewriteRule::set_to_one("x", {"а", "а"}, "б"));
    CHECK_THROWS(RewriteRule::class_pair("x", {"а", "б"}, {"в"}, {"1", "2", "3"}));
}

TEST_CASE("trace records fired rules and replays") {
    const auto& rules = surname::rules();
    rewrite::RewriteTrace trace;
    const auto out = utf8::encode(rewrite::apply(rules, U"грицько", trace));
    CHECK(out == "гри3о");
    REQUIRE(trace.size() == 1);
    CHECK(trace[0].step == "5");
    CHECK(trace[0].before == "грицько");
    CHECK(trace[0].after == "гри3о");

    rewrite::RewriteTrace longer;
    CHECK(utf8::encode(rewrite::apply(rules, U"кузьменко", longer)) == "кузмI");
    REQUIRE(longer.size() == 2);
    CHECK(longer[0].step == "6");
    CHECK(longer[1].step == "13");
    CHECK(longer[1].before == "кузменко");
    CHECK(rewrite::replay(rules, "грицько", trace) == out);

    auto forged = trace;
    forged[0].after = "грицко";
    CHECK_THROWS_AS(rewrite::replay(rules, "грицько", forged), std::logic_error);
    CHECK_THROWS_AS(rewrite::replay(rules, "грицько", {}), std::logic_error);

    rewrite::RewriteTrace none;
    CHECK(utf8::encode(rewrite::apply(rules, U"мелник", none)) == "мелник");
    CHECK(none.empty());
}

TEST_CASE("lint") {
    CHECK(rewrite::lint(surname::rules()).empty());
    CHECK(rewrite::lint(medicine::rules()).empty());
    CHECK(rewrite::lint({"empty", {}}).empty());

    const RuleSet misordered{"t", {RewriteRule::literal("6", "ь", ""),
                                   RewriteRule::set_to_one("5", {"сськ", "ськ"}, "1")}};
    CHECK(any_warning_contains(misordered, "pattern 'ськ' unreachable"));

    const RuleSet reintroduce{"t", {RewriteRule::literal("a", "ґ", "г"), RewriteRule::literal("b", "к", "ґ")}};
    CHECK(any_warning_contains(reintroduce, "reintroduces 'ґ'"));

    const RuleSet overlap{"t", {RewriteRule::end_anchored("13", {{"ко", "X"}, {"енко", "I"}})}};
    CHECK(any_warning_contains(overlap, "overlap"));

    const RuleSet growing{"t", {RewriteRule::literal("x", "а", "аа")}};
    CHECK(any_warning_contains(growing, "may not terminate"));
}

TEST_CASE("non-terminating rules throw instead of spinning") {
    const RuleSet growing{"t", {RewriteRule::literal("x", "а", "аа")}};
    CHECK_THROWS_AS(rewrite::apply(growing, U"ба"), rewrite::ConvergenceError);
}

TEST_CASE("rule tables round-trip") {
    for (const RuleSet* rules : {&surname::rules(), &medicine::rules()}) {
        const std::string table = rewrite::to_table(*rules);
        const RuleSet parsed = rewrite::parse_table(table);
        CHECK(parsed.name == rules->name);
        REQUIRE(parsed.rules.size() == rules->rules.size());
        CHECK(rewrite::to_table(parsed) == table);
        for (const char32_t* word : {U"кузьменко", U"грицько", U"ібупрофєн", U"ґудзь"})
            CHECK(rewrite::apply(parsed, word) == rewrite::apply(*rules, word));
    }
}

TEST_CASE("malformed tables name the line") {
    try {
        rewrite::parse_table("# ruleset=x\n1\tliteral\tа\tб\tnone\n2\tbogus\tа\tб\tnone\n");
        FAIL("accepted an unknown kind");
    } catch (const rewrite::TableError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(rewrite::parse_table("1\tliteral\tа\n"), rewrite::TableError);
    CHECK_THROWS_AS(rewrite::parse_table("1\tend-anchored\tа\tб\tnone\n"), rewrite::TableError);
}

TEST_CASE("profiled apply matches plain apply") {
    const auto& rules = surname::rules();
    std::vector<std::chrono::nanoseconds> timings(rules.rules.size());
    CHECK(rewrite::apply_profiled(rules, U"кузьменко", timings) == rewrite::apply(rules, U"кузьменко"));
    std::vector<std::chrono::nanoseconds> short_buffer(1);
    CHECK_THROWS(rewrite::apply_profiled(rules, U"а", short_buffer));
}
