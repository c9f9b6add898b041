#include "phonokey/synth.hpp"

#include "phonokey/textnorm.hpp"
#include "phonokey/utf8.hpp"

#include <unicode/uchar.h>

#include <algorithm>
#include <array>
#include <set>
#include <unordered_set>

namespace phonokey::synth {
namespace {

constexpr std::array<SurnameRate, 65> common_table{{
    {"мельник", 3.3},     {"шевченко", 3.0},   {"бойко", 2.6},      {"коваленко", 2.5},
    {"бондаренко", 2.5},  {"ткаченко", 2.3},   {"ковальчук", 2.2},  {"кравченко", 2.2},
    {"іванов", 2.0},      {"олійник", 1.9},    {"коваль", 1.8},     {"шевчук", 1.8},
    {"поліщук", 1.7},     {"ткачук", 1.4},     {"бондар", 1.4},     {"марченко", 1.4},
    {"лисенко", 1.3},     {"мороз", 1.3},      {"савченко", 1.3},   {"руденко", 1.3},
    {"петренко", 1.3},    {"кравчук", 1.2},    {"клименко", 1.2},   {"попов", 1.2},
    {"павленко", 1.1},    {"савчук", 1.1},     {"кузьменко", 1.1},  {"левченко", 1.1},
    {"пономаренко", 1.0}, {"василенко", 1.0},  {"волошин", 1.0},    {"харченко", 1.0},
    {"ковальов", 1.0},    {"карпенко", 1.0},   {"сидоренко", 1.0},  {"гаврилюк", 1.0},
    {"мельничук", 1.0},   {"хоменко", 1.0},    {"павлюк", 1.0},     {"швець", 1.0},
    {"попович", 1.0},     {"романюк", 0.9},    {"чорний", 0.9},     {"панченко", 0.9},
    {"литвиненко", 0.9},  {"мазур", 0.9},      {"кушнір", 0.9},     {"юрченко", 0.9},
    {"дяченко", 0.8},     {"мартинюк", 0.8},   {"костюк", 0.8},     {"ткач", 0.8},
    {"петров", 0.8},      {"семенюк", 0.8},    {"приходько", 0.8},  {"костенко", 0.8},
    {"гончаренко", 0.8},  {"кулик", 0.8},      {"коломієць", 0.8},  {"білоус", 0.8},
    {"назаренко", 0.8},   {"волков", 0.8},     {"кравець", 0.8},    {"козак", 0.8},
    {"ковтун", 0.8},
}};

constexpr std::array<std::string_view, 130> stems{
    "бабич",  "бараб",  "бевз",   "бере",   "білик",  "блаж",   "богд",   "бород",  "бурлак", "вакул",
    "васил",  "верб",   "вовч",   "ворон",  "гайов",  "галич",  "гнат",   "голуб",  "горб",   "гордій",
    "гриц",   "грин",   "гуц",    "давид",  "дем",    "денис",  "дмитр",  "дорош",  "дубов",  "жук",
    "забол",  "зайч",   "захар",  "зінч",   "іван",   "ігнат",  "кар",    "кирил",  "клим",   "коз",
    "колес",  "корн",   "кост",   "кот",    "крав",   "кузь",   "кулин",  "кухар",  "лаз",    "лев",
    "леон",   "лис",    "литв",   "лук",    "ляш",    "мак",    "мал",    "марк",   "матв",   "мирон",
    "мих",    "мороз",  "мусі",   "назар",  "нест",   "оліш",   "онищ",   "опан",   "остап",  "павл",
    "пан",    "пасіч",  "перец",  "петр",   "пил",    "прокоп", "прох",   "рад",    "ром",    "руд",
    "рябок",  "сав",    "сем",    "сер",    "сид",    "сир",    "скр",    "слюс",   "сок",    "стах",
    "стеф",   "сто",    "суш",    "тарас",  "теслен", "тимош",  "тит",    "ткач",   "троф",   "тур",
    "федор",  "фес",    "філ",    "фом",    "харч",   "хом",    "цап",    "черн",   "чуб",    "шап",
    "шар",    "швед",   "шир",    "шум",    "щерб",   "юрк",    "юхим",   "ярем",   "ярош",   "ясин",
    "гаврил", "бойч",   "дяч",    "гонч",   "мельн",  "кушн",   "поліщ",  "кравч",  "левч",   "ковт",
};

constexpr std::array<std::string_view, 40> suffixes{
    "енко", "ук",   "юк",   "чук",  "ович", "евич", "ський", "цький", "ко",   "ан",
    "ар",   "ець",  "ишин", "ишко", "ушко", "айко", "ейко",  "унко",  "анко", "онко",
    "очко", "ечко", "авко", "иско", "уник", "ийло", "айло",  "евка",  "ашко", "ешко",
    "ів",   "ов",   "ин",   "ий",   "як",   "ак",   "ун",    "ась",   "ило",  "ота",
};

const std::u32string vowels = U"аеиоуіїєяю";
const std::u32string digraph_vowels = U"аеєяоуюіиїйёэы";

bool is_vowel(char32_t c) { return vowels.find(c) != std::u32string::npos; }
bool is_vowelish(char32_t c) { return digraph_vowels.find(c) != std::u32string::npos; }

template <class T>
const T& pick(const std::vector<T>& items, std::mt19937_64& rng) {
    return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
}

bool chance(double p, std::mt19937_64& rng) { return std::bernoulli_distribution(p)(rng); }

std::u32string capitalize(std::u32string text) {
    if (!text.empty())
        text[0] = static_cast<char32_t>(u_toupper(static_cast<UChar32>(text[0])));
    return text;
}

std::vector<std::string> synthetic_vocabulary() {
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (const auto& entry : common_table)
        seen.emplace(entry.name);
    for (auto stem : stems)
        for (auto suffix : suffixes) {
            std::string name = std::string(stem) + std::string(suffix);
            if (seen.insert(name).second)
                names.push_back(std::move(name));
        }
    std::mt19937_64 rng(20191031);
    std::shuffle(names.begin(), names.end(), rng);
    return names;
}

const std::vector<std::string>& vocabulary() {
    static const std::vector<std::string> names = synthetic_vocabulary();
    return names;
}

std::optional<std::u32string> vary(const std::u32string& base, VariantClass kind, std::mt19937_64& rng) {
    std::vector<std::size_t> sites;
    const std::size_t n = base.size();
    auto prev = [&](std::size_t i) { return i > 0 ? base[i - 1] : U'\0'; };
    auto next = [&](std::size_t i) { return i + 1 < n ? base[i + 1] : U'\0'; };

    switch (kind) {
    case VariantClass::vowel_i: {
        // Not in front of a vowel, where і/и would change a two-letter spelling.
        for (std::size_t i = 0; i < n; ++i)
            if (std::u32string_view(U"іиї").find(base[i]) != std::u32string_view::npos && !is_vowelish(next(i)))
                sites.push_back(i);
        if (sites.empty())
            return std::nullopt;
        const std::size_t at = pick(sites, rng);
        std::vector<char32_t> options;
        for (char32_t c : std::u32string_view(U"іиї"))
            if (c != base[at])
                options.push_back(c);
        std::u32string out = base;
        out[at] = pick(options, rng);
        return out;
    }
    case VariantClass::vowel_e: {
        for (std::size_t i = 0; i < n; ++i)
            if ((base[i] == U'е' || base[i] == U'є') && prev(i) != U'і' && prev(i) != U'й')
                sites.push_back(i);
        if (sites.empty())
            return std::nullopt;
        std::u32string out = base;
        const std::size_t at = pick(sites, rng);
        out[at] = out[at] == U'е' ? U'є' : U'е';
        return out;
    }
    case VariantClass::soft_sign: {
        // ь in -цьк-/-зьк-/-ськ- is part of a cluster code and stays, as does
        // one right before such a cluster.
        for (std::size_t i = 0; i < n; ++i)
            if (base[i] == U'ь' && next(i) != U'к' && base.compare(i + 1, 3, U"ськ") != 0 &&
                !(is_vowelish(prev(i)) && is_vowelish(next(i))))
                sites.push_back(i);
        if (sites.empty())
            return std::nullopt;
        std::u32string out = base;
        out.erase(pick(sites, rng), 1);
        return out;
    }
    case VariantClass::doubling: {
        for (std::size_t i = 0; i < n; ++i) {
            const bool intervocalic = i > 0 && i + 1 < n && is_vowel(prev(i)) && is_vowel(next(i)) &&
                                      base[i] != U'й' && base[i] != U'ь';
            if (is_vowel(base[i]) || intervocalic)
                sites.push_back(i);
        }
        if (sites.empty())
            return std::nullopt;
        std::u32string out = base;
        const std::size_t at = pick(sites, rng);
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(at), base[at]);
        return out;
    }
    case VariantClass::g_letter: {
        for (std::size_t i = 0; i < n; ++i)
            if (base[i] == U'г' || base[i] == U'ґ')
                sites.push_back(i);
        if (sites.empty())
            return std::nullopt;
        std::u32string out = base;
        const std::size_t at = pick(sites, rng);
        out[at] = out[at] == U'г' ? U'ґ' : U'г';
        return out;
    }
    case VariantClass::apostrophe: {
        if (n < 2)
            return std::nullopt;
        constexpr std::u32string_view marks = U"'’ʼ`";
        std::u32string out = base;
        const auto at = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(at),
                   marks[std::uniform_int_distribution<std::size_t>(0, marks.size() - 1)(rng)]);
        return out;
    }
    case VariantClass::homoglyph: {
        const auto& map = textnorm::homoglyphs();
        auto latin_for = [&](char32_t c) -> char32_t {
            for (const auto& [latin, cyrillic] : map)
                if (cyrillic == c)
                    return latin;
            return 0;
        };
        for (std::size_t i = 0; i < n; ++i)
            if (latin_for(base[i]))
                sites.push_back(i);
        if (sites.empty())
            return std::nullopt;
        std::shuffle(sites.begin(), sites.end(), rng);
        const std::size_t swaps = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, sites.size()))(rng);
        std::u32string out = base;
        for (std::size_t k = 0; k < swaps; ++k)
            out[sites[k]] = latin_for(base[sites[k]]);
        if (chance(0.5, rng))
            out[0] = static_cast<char32_t>(u_toupper(static_cast<UChar32>(out[0])));
        return out;
    }
    case VariantClass::ending: {
        static const std::array<std::pair<std::u32string_view, std::u32string_view>, 5> pairs{{
            {U"енко", U"енка"}, {U"айко", U"айка"}, {U"ейко", U"ейка"}, {U"унко", U"унка"}, {U"ушко", U"ушка"},
        }};
        for (const auto& [a, b] : pairs) {
            for (const auto& [from, to] : {std::pair{a, b}, std::pair{b, a}}) {
                if (n >= from.size() && std::u32string_view(base).substr(n - from.size()) == from)
                    return base.substr(0, n - from.size()) + std::u32string(to);
            }
        }
        return std::nullopt;
    }
    case VariantClass::letter_case: {
        std::u32string out;
        for (char32_t c : base)
            out.push_back(chance(0.5, rng) ? static_cast<char32_t>(u_toupper(static_cast<UChar32>(c))) : c);
        if (chance(0.5, rng))
            out = U" " + out;
        if (chance(0.5, rng))
            out += U"  ";
        return out;
    }
    }
    return std::nullopt;
}

struct DrugPair {
    std::string_view ukrainian;
    std::string_view russian;
};

constexpr std::array<DrugPair, 36> real_drugs{{
    {"Анальгін", "Анальгин"},         {"Ібупрофен", "Ибупрофен"},
    {"Ентеросгель", "Энтеросгель"},   {"Аспірин", "Аспирин"},
    {"Парацетамол", "Парацетамол"},   {"Валідол", "Валидол"},
    {"Вітамін", "Витамин"},           {"Інсулін", "Инсулин"},
    {"Діазолін", "Диазолин"},         {"Лоратадин", "Лоратадин"},
    {"Цитрамон", "Цитрамон"},         {"Корвалол", "Корвалол"},
    {"Диклофенак", "Диклофенак"},     {"Амоксицилін", "Амоксициллин"},
    {"Ампіцилін", "Ампициллин"},      {"Фенібут", "Фенибут"},
    {"Гліцин", "Глицин"},             {"Мільгама", "Мильгамма"},
    {"Ремантадин", "Ремантадин"},     {"Карбамазепін", "Карбамазепин"},
    {"Кардіомагніл", "Кардиомагнил"}, {"Левоміцетин", "Левомицетин"},
    {"Еналаприл", "Эналаприл"},       {"Еритроміцин", "Эритромицин"},
    {"Етамзилат", "Этамзилат"},       {"Ефедрин", "Эфедрин"},
    {"Нітрогліцерин", "Нитроглицерин"}, {"Йодомарин", "Йодомарин"},
    {"Седалгін", "Седальгин"},        {"Пірацетам", "Пирацетам"},
    {"Метронідазол", "Метронидазол"}, {"Тетрациклін", "Тетрациклин"},
    {"Гентаміцин", "Гентамицин"},     {"Еуфілін", "Эуфиллин"},
    {"Бісептол", "Бисептол"},         {"Дексаметазон", "Дексаметазон"},
}};

// Consonant-vowel syllables, so no two vowels are ever adjacent.
std::u32string neutral_drug_name(std::mt19937_64& rng) {
    static const std::u32string consonants = U"бвдзклмнпрстфхц";
    static const std::u32string plain_vowels = U"аиоуе";
    static const std::u32string finals = U"лнмрстд";
    auto any = [&](const std::u32string& set) {
        return set[std::uniform_int_distribution<std::size_t>(0, set.size() - 1)(rng)];
    };
    std::u32string word;
    const int syllables = std::uniform_int_distribution<int>(3, 5)(rng);
    for (int s = 0; s < syllables; ++s) {
        word.push_back(any(consonants));
        word.push_back(any(plain_vowels));
    }
    if (chance(0.6, rng))
        word.push_back(any(finals));
    return word;
}

// Spells a neutral name the Ukrainian or the Russian way.
std::u32string spell(const std::u32string& neutral, bool russian, std::mt19937_64& rng) {
    std::u32string out;
    for (std::size_t i = 0; i < neutral.size(); ++i) {
        const char32_t c = neutral[i];
        const bool after_consonant = i > 0 && !is_vowel(neutral[i - 1]);
        if (c == U'и' && after_consonant) {
            if (!russian && chance(0.6, rng))
                out.push_back(U'і');
            else if (russian && chance(0.2, rng))
                out.push_back(U'ы');
            else
                out.push_back(c);
        } else if (c == U'е' && after_consonant && chance(0.3, rng)) {
            out.push_back(russian ? U'э' : U'є');
        } else if (c == U'о' && russian && after_consonant && chance(0.2, rng)) {
            out.push_back(U'ё');
        } else {
            out.push_back(c);
        }
        if (!is_vowel(c) && i > 0 && i + 1 < neutral.size() && chance(0.15, rng))
            out.push_back(c);
        const bool before_consonant = i + 1 < neutral.size() && !is_vowel(neutral[i + 1]);
        if (!is_vowel(c) && (before_consonant || i + 1 == neutral.size()) && chance(0.3, rng))
            out.push_back(russian ? U'ъ' : U'ь');
    }
    return out;
}

} // namespace

std::span<const SurnameRate> common_surnames() { return common_table; }

std::vector<std::string> base_surnames(std::size_t count) {
    std::vector<std::string> out;
    for (const auto& entry : common_table) {
        if (out.size() == count)
            return out;
        out.emplace_back(entry.name);
    }
    for (const auto& name : vocabulary()) {
        if (out.size() == count)
            return out;
        out.push_back(name);
    }
    return out;
}

std::string_view to_string(VariantClass kind) noexcept {
    switch (kind) {
    case VariantClass::vowel_i:
        return "vowel-i";
    case VariantClass::vowel_e:
        return "vowel-e";
    case VariantClass::soft_sign:
        return "soft-sign";
    case VariantClass::doubling:
        return "doubling";
    case VariantClass::g_letter:
        return "g-letter";
    case VariantClass::apostrophe:
        return "apostrophe";
    case VariantClass::homoglyph:
        return "homoglyph";
    case VariantClass::ending:
        return "ending";
    case VariantClass::letter_case:
        return "letter-case";
    }
    return "?";
}

std::vector<Variant> surname_variants(std::string_view base, std::mt19937_64& rng) {
    const std::u32string chars = utf8::decode(base);
    std::vector<Variant> out;
    for (auto kind : {VariantClass::vowel_i, VariantClass::vowel_e, VariantClass::soft_sign,
                      VariantClass::doubling, VariantClass::g_letter, VariantClass::apostrophe,
                      VariantClass::homoglyph, VariantClass::ending, VariantClass::letter_case}) {
        if (auto varied = vary(chars, kind, rng))
            out.push_back({utf8::encode(*varied), kind});
    }
    return out;
}

std::vector<LabeledRecord> surname_corpus(const CorpusOptions& options) {
    std::mt19937_64 rng(options.seed);

    std::vector<double> weights;
    std::vector<std::string_view> names;
    double table_mass = 0.0;
    for (const auto& entry : common_table) {
        names.push_back(entry.name);
        weights.push_back(entry.per_mille);
        table_mass += entry.per_mille;
    }
    const auto& vocab = vocabulary();
    const std::size_t tail = std::min(options.vocabulary, vocab.size());
    double tail_norm = 0.0;
    for (std::size_t i = 0; i < tail; ++i)
        tail_norm += 1.0 / static_cast<double>(i + 600);
    const double tail_mass = 1000.0 - table_mass;
    for (std::size_t i = 0; i < tail; ++i) {
        names.push_back(vocab[i]);
        weights.push_back(tail_mass / tail_norm / static_cast<double>(i + 600));
    }

    std::discrete_distribution<std::size_t> draw(weights.begin(), weights.end());
    std::vector<LabeledRecord> records;
    records.reserve(options.records);
    for (std::size_t r = 0; r < options.records; ++r) {
        const std::string base(names[draw(rng)]);
        std::string text = utf8::encode(capitalize(utf8::decode(base)));
        if (chance(options.variant_rate, rng)) {
            auto variants = surname_variants(base, rng);
            if (!variants.empty())
                text = pick(variants, rng).text;
        }
        records.push_back({std::move(text), base});
    }
    return records;
}

std::vector<MedicinePair> medicine_pairs(std::size_t count, std::uint64_t seed) {
    std::vector<MedicinePair> out;
    for (const auto& drug : real_drugs) {
        if (out.size() == count)
            return out;
        out.push_back({std::string(drug.ukrainian), std::string(drug.russian)});
    }
    std::mt19937_64 rng(seed);
    std::unordered_set<std::u32string> seen;
    while (out.size() < count) {
        const std::u32string neutral = neutral_drug_name(rng);
        if (!seen.insert(neutral).second)
            continue;
        std::string uk = utf8::encode(capitalize(spell(neutral, false, rng)));
        std::string ru = utf8::encode(capitalize(spell(neutral, true, rng)));
        if (chance(0.3, rng)) {
            uk += " Форте 500 мг";
            ru += " Форте 500 мг";
        }
        out.push_back({std::move(uk), std::move(ru)});
    }
    return out;
}

std::vector<std::string> medicine_corpus(std::size_t titles, std::uint64_t seed) {
    const auto pairs = medicine_pairs(std::max<std::size_t>(titles / 6, 40), seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<std::string> out;
    out.reserve(titles);
    for (std::size_t i = 0; i < titles; ++i) {
        const auto& pair = pick(pairs, rng);
        out.push_back(chance(0.5, rng) ? pair.ukrainian : pair.russian);
    }
    return out;
}

} // namespace phonokey::synth
