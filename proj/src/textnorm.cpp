#include "phonokey/textnorm.hpp"

#include "phonokey/utf8.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <algorithm>

namespace phonokey {

struct TokenFactory {
    static CleanToken make(std::u32string chars, bool hyphenated) {
        return CleanToken(std::move(chars), hyphenated);
    }
};

std::string_view to_string(Mode mode) noexcept {
    return mode == Mode::surname ? "surname" : "medicine";
}

std::optional<Mode> parse_mode(std::string_view name) noexcept {
    if (name == "surname")
        return Mode::surname;
    if (name == "medicine")
        return Mode::medicine;
    return std::nullopt;
}

CleanToken::CleanToken(std::u32string chars, bool hyphenated)
    : text_(utf8::encode(chars)), chars_(std::move(chars)), hyphenated_(hyphenated) {}

CleanToken CleanToken::parse(std::string_view text, Mode mode) {
    const std::u32string chars = utf8::decode(text);
    if (mode == Mode::surname) {
        std::size_t letters = 0;
        bool hyphen = false;
        for (std::size_t i = 0; i < chars.size(); ++i) {
            const char32_t c = chars[i];
            if (c == U'-') {
                if (i == 0 || i + 1 == chars.size() || chars[i - 1] == U'-')
                    throw std::invalid_argument("misplaced hyphen in surname token");
                hyphen = true;
            } else if (textnorm::in_surname_alphabet(c)) {
                letters += textnorm::is_sign(c) ? 0 : 1;
            } else {
                throw std::invalid_argument("character outside the surname alphabet");
            }
        }
        if (letters < textnorm::min_surname_letters)
            throw std::invalid_argument("surname token shorter than two letters");
        return CleanToken(chars, hyphen);
    }
    if (chars.size() < textnorm::min_medicine_token)
        throw std::invalid_argument("medicine token shorter than four letters");
    for (char32_t c : chars) {
        if (c == U'ь' || c == U'ъ' || c == U' ' || c == U'-' || textnorm::is_apostrophe(c))
            throw std::invalid_argument("character not allowed in a medicine token");
    }
    return CleanToken(chars, false);
}

} // namespace phonokey

namespace phonokey::textnorm {
namespace {

constexpr HomoglyphMap homoglyph_table{{
    {U'a', U'а'}, {U'b', U'в'}, {U'c', U'с'}, {U'd', U'д'}, {U'e', U'е'},
    {U'h', U'н'}, {U'i', U'і'}, {U'k', U'к'}, {U'm', U'м'}, {U'o', U'о'},
    {U'p', U'р'}, {U't', U'т'}, {U'u', U'и'}, {U'x', U'х'}, {U'y', U'у'},
}};

char32_t fold(char32_t c) noexcept {
    if (c < U'a' || c > U'y')
        return c;
    for (const auto& [latin, cyrillic] : homoglyph_table)
        if (latin == c)
            return cyrillic;
    return c;
}

bool is_hyphen(char32_t c) noexcept {
    return c == U'-' || c == U'‐' || c == U'‑';
}

// NFC then simple lowercase mapping, one code point at a time.
std::u32string normalize_case(std::string_view raw) {
    if (!utf8::is_valid(raw))
        throw CleanError(RejectReason::invalid_utf8);

    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status))
        throw std::runtime_error("ICU NFC normalizer unavailable");

    const icu::UnicodeString source = icu::UnicodeString::fromUTF8(
        icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
    const icu::UnicodeString composed = nfc->normalize(source, status);
    if (U_FAILURE(status))
        throw std::runtime_error("ICU normalization failed");

    std::u32string out;
    out.reserve(static_cast<std::size_t>(composed.length()));
    for (int32_t i = 0; i < composed.length();) {
        const UChar32 c = composed.char32At(i);
        out.push_back(static_cast<char32_t>(u_tolower(c)));
        i += U16_LENGTH(c);
    }
    return out;
}

bool is_combining_mark(char32_t c) noexcept {
    const auto category = u_charType(static_cast<UChar32>(c));
    return category == U_NON_SPACING_MARK || category == U_ENCLOSING_MARK;
}

} // namespace

std::string_view describe(RejectReason reason) noexcept {
    switch (reason) {
    case RejectReason::empty_after_clean:
        return "empty-after-clean";
    case RejectReason::invalid_utf8:
        return "invalid-utf8";
    }
    return "unknown";
}

CleanError::CleanError(RejectReason reason)
    : std::runtime_error(std::string(describe(reason))), reason_(reason) {}

const HomoglyphMap& homoglyphs() noexcept { return homoglyph_table; }

std::u32string fold_homoglyphs(std::u32string_view text) {
    std::u32string out(text);
    std::transform(out.begin(), out.end(), out.begin(), fold);
    return out;
}

std::string fold_homoglyphs(std::string_view text) {
    return utf8::encode(fold_homoglyphs(utf8::decode(text)));
}

bool is_apostrophe(char32_t c) noexcept {
    return c == U'\'' || c == U'’' || c == U'ʼ' || c == U'`';
}

bool in_surname_alphabet(char32_t c) noexcept {
    // а..я covers the shared block; the rest are Ukrainian, Russian and
    // Belarusian extras. ў is kept so the word-final rule can see it.
    if (c >= U'а' && c <= U'я')
        return true;
    switch (c) {
    case U'ё': case U'є': case U'і': case U'ї': case U'ґ': case U'ў':
        return true;
    default:
        return false;
    }
}

CleanToken clean_surname(std::string_view raw) {
    const std::u32string lowered = normalize_case(raw);

    std::u32string kept;
    kept.reserve(lowered.size());
    for (char32_t c : lowered) {
        if (u_isUWhiteSpace(static_cast<UChar32>(c)) || is_apostrophe(c))
            continue;
        if (is_hyphen(c)) {
            kept.push_back(U'-');
            continue;
        }
        c = fold(c);
        if (in_surname_alphabet(c))
            kept.push_back(c);
    }

    std::u32string out;
    out.reserve(kept.size());
    std::size_t letters = 0;
    for (char32_t c : kept) {
        if (c == U'-') {
            if (out.empty() || out.back() == U'-')
                continue;
        } else if (!is_sign(c)) {
            ++letters;
        }
        out.push_back(c);
    }
    if (!out.empty() && out.back() == U'-')
        out.pop_back();

    if (letters < min_surname_letters)
        throw CleanError(RejectReason::empty_after_clean);
    const bool hyphenated = out.find(U'-') != std::u32string::npos;
    return TokenFactory::make(std::move(out), hyphenated);
}

std::optional<CleanToken> try_clean_surname(std::string_view raw, RejectReason* why) {
    try {
        return clean_surname(raw);
    } catch (const CleanError& e) {
        if (why)
            *why = e.reason();
        return std::nullopt;
    }
}

std::vector<CleanToken> clean_medicine(std::string_view raw) {
    const std::u32string folded = fold_homoglyphs(normalize_case(raw));

    std::vector<CleanToken> tokens;
    std::u32string word;
    auto flush = [&] {
        if (word.size() >= min_medicine_token)
            tokens.push_back(TokenFactory::make(word, false));
        word.clear();
    };
    for (char32_t c : folded) {
        if (is_apostrophe(c) || c == U'ь' || c == U'ъ' || is_combining_mark(c))
            continue;
        if (u_isalpha(static_cast<UChar32>(c)))
            word.push_back(c);
        else
            flush();
    }
    flush();
    return tokens;
}

} // namespace phonokey::textnorm
