#include "phonokey/medicine.hpp"
#include "phonokey/surname.hpp"
#include "phonokey/textnorm.hpp"
#include "phonokey/utf8.hpp"

#include <doctest.h>

#include "oracle/naive_keys.hpp"

using namespace phonokey;

namespace {

std::string skey(std::string_view raw) { return surname::key(textnorm::clean_surname(raw)).text(); }

std::vector<std::string> mkeys(std::string_view title) {
    std::vector<std::string> out;
    for (const auto& k : medicine::keys(title))
        out.push_back(k.text());
    return out;
}

} // namespace

TEST_CASE("surname keys") {
    CHECK(skey("шевченко") == "шевчI");
    CHECK(skey("йосипов") == "осипов");
    CHECK(skey("ареєв") == "арев");
    CHECK(skey("ковальчук") == "ковалчук");
    CHECK(skey("грицько") == "гри3о");
    CHECK(skey("хвостов") == "фостов");
    CHECK(skey("кузьменко") == "кузмI");
    CHECK(skey("кравець") == "кравец");
    CHECK(skey("кравец") == "кравец");
    CHECK(skey("шевченко-бойко") == "шевченко-бойко");
    CHECK(skey("мелник") == "мелник");
}

TEST_CASE("each step in isolation") {
    CHECK(skey("ґудзь") == "гудз");
    CHECK(skey("чорний") == "чорни");
    CHECK(skey("кияшко") == "киE");
    CHECK(skey("павлюк") == "павлук");
    CHECK(skey("баранаў") == "баранав");
    CHECK(skey("козловський") == "козлов1и");
    CHECK(skey("запорізький") == "запори2и");
    CHECK(skey("полтавцький") == "полтав3и");
    CHECK(skey("касбаров") == "казбаров");
    CHECK(skey("масчук") == "мащук");
    CHECK(skey("честний") == "чесни");
    CHECK(skey("цвях") == "цах");
    CHECK(skey("аннушка") == "анU");
    CHECK(skey("бондарчук") == "бондарчук");
}

TEST_CASE("endings with й are compressed after vowel reduction") {
    CHECK(skey("гайко") == skey("гайка"));
    CHECK(skey("гайко") == "гB");
    CHECK(skey("кирейко") == "кирH");
    CHECK(skey("рудайло") == "рудC");
    CHECK(skey("гаврийло") == "гаврило");
}

TEST_CASE("trace of a cluster name shows step 5 before 6") {
    const auto traced = surname::key_with_trace(textnorm::clean_surname("грицько"));
    CHECK(traced.key.text() == "гри3о");
    REQUIRE_FALSE(traced.trace.empty());
    CHECK(traced.trace.front().step == "5");

    const auto plain = surname::key_with_trace(textnorm::clean_surname("мелник"));
    CHECK(plain.key.text() == "мелник");
    CHECK(plain.trace.empty());

    const auto hyphen = surname::key_with_trace(textnorm::clean_surname("Шевченко-Бойко"));
    CHECK(hyphen.key.text() == "шевченко-бойко");
    CHECK(hyphen.trace.empty());
}

TEST_CASE("spelling variants share a key") {
    CHECK(skey("Івасенко") == skey("Ивасенко"));
    CHECK(skey("Лисенко") == skey("Лисенка"));
    CHECK(skey("Ґудзенко") == skey("Гудзенко"));
    CHECK(skey("Коваль") == skey("Ковал"));
    CHECK(skey("Мельнник") == skey("Мельник"));
    CHECK(skey("Мел'ьник") == skey("мельник"));
    CHECK(skey("Пєтров") == skey("Петров"));
    CHECK(skey("Kовaлeнкo") == skey("Коваленко"));
}

TEST_CASE("ending code table") {
    const auto codes = surname::ending_codes();
    CHECK(codes.size() == 25);
    CHECK(codes.front() == std::pair<std::string, std::string>{"авко", "A"});
    CHECK(codes.back() == std::pair<std::string, std::string>{"ушко", "U"});
}

TEST_CASE("medicine keys") {
    CHECK(mkeys("Анальгін") == std::vector<std::string>{"аналгин"});
    CHECK(mkeys("анальгин") == std::vector<std::string>{"аналгин"});
    CHECK(mkeys("Ібупрофен") == std::vector<std::string>{"ибупрофен"});
    CHECK(mkeys("Ибупрофен") == std::vector<std::string>{"ибупрофен"});
    CHECK(mkeys("Энтеросгель") == std::vector<std::string>{"ентеросгел"});
    CHECK(mkeys("Ентеросгель") == std::vector<std::string>{"ентеросгел"});
    CHECK(mkeys("Но-Шпа®").empty());
    CHECK(mkeys("").empty());
    CHECK(mkeys("Аспірин Аспирин") == std::vector<std::string>{"аспирин", "аспирин"});
    CHECK(mkeys("Алёра") == mkeys("Алора"));
    CHECK(mkeys("Иодомарин") == std::vector<std::string>{"иодомарин"});
}

TEST_CASE("oracle agrees on hand-picked words") {
    for (const char* word : {"шевченко", "грицько", "ссськ", "хвостов", "тсдб", "козловський", "гайко",
                             "сцськийло", "ўўў", "ьськ", "шчнстн"}) {
        const auto token = textnorm::clean_surname(word);
        CHECK(utf8::encode(naive::surname_key(token.chars())) == surname::key(token).text());
    }
    for (const char* word : {"анальгін", "энтеросгель", "ёлка", "иаия", "ыйїі"}) {
        for (const auto& token : textnorm::clean_medicine(word))
            CHECK(utf8::encode(naive::medicine_key(token.chars())) == medicine::key(token).text());
    }
}
