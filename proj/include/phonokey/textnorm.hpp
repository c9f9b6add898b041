#pragma once

#include "phonokey/types.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace phonokey::textnorm {

enum class RejectReason { empty_after_clean, invalid_utf8 };

std::string_view describe(RejectReason reason) noexcept;

class CleanError : public std::runtime_error {
public:
    explicit CleanError(RejectReason reason);
    RejectReason reason() const noexcept { return reason_; }

private:
    RejectReason reason_;
};

inline constexpr std::size_t min_surname_letters = 2;
inline constexpr std::size_t min_medicine_token = 4;

// Latin letters that are routinely typed in place of their Cyrillic twins.
using HomoglyphMap = std::array<std::pair<char32_t, char32_t>, 15>;
const HomoglyphMap& homoglyphs() noexcept;

std::u32string fold_homoglyphs(std::u32string_view text);
std::string fold_homoglyphs(std::string_view text);

bool is_apostrophe(char32_t c) noexcept;
bool in_surname_alphabet(char32_t c) noexcept;
// ь and ъ: letters without a sound of their own; they do not count towards
// the surname minimum.
inline bool is_sign(char32_t c) noexcept { return c == U'ь' || c == U'ъ'; }

// Surname cleanup: NFC, lowercase, strip whitespace and apostrophes, fold
// homoglyphs, drop everything outside the alphabet, then normalise hyphens.
// Throws CleanError when fewer than two letters survive or on bad UTF-8.
CleanToken clean_surname(std::string_view raw);
std::optional<CleanToken> try_clean_surname(std::string_view raw,
                                            RejectReason* why = nullptr);

// Medicine-title cleanup: separators become spaces, the title is split into
// words, soft/hard signs and apostrophes are removed and words shorter than
// four letters are dropped. Only invalid UTF-8 throws.
std::vector<CleanToken> clean_medicine(std::string_view raw);

} // namespace phonokey::textnorm
