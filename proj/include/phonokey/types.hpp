#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace phonokey {

enum class Mode { surname, medicine };

std::string_view to_string(Mode mode) noexcept;
std::optional<Mode> parse_mode(std::string_view name) noexcept;

// A lowercase Cyrillic token that went through textnorm cleanup. Instances
// are only produced by the textnorm functions or by CleanToken::parse, which
// re-checks the alphabet, hyphen and length invariants for the given mode.
class CleanToken {
public:
    static CleanToken parse(std::string_view text, Mode mode);

    const std::string& text() const noexcept { return text_; }
    const std::u32string& chars() const noexcept { return chars_; }
    bool hyphenated() const noexcept { return hyphenated_; }

    friend bool operator==(const CleanToken& a, const CleanToken& b) noexcept {
        return a.text_ == b.text_ && a.hyphenated_ == b.hyphenated_;
    }

private:
    friend struct TokenFactory;
    CleanToken(std::u32string chars, bool hyphenated);

    std::string text_;
    std::u32string chars_;
    bool hyphenated_ = false;
};

// Output code of a phonetic ruleset: lowercase Cyrillic, cluster digits 1-3
// and the ending codes A..U.
class PhoneticKey {
public:
    PhoneticKey() = default;
    explicit PhoneticKey(std::string text) : text_(std::move(text)) {}

    const std::string& text() const noexcept { return text_; }
    bool empty() const noexcept { return text_.empty(); }

    friend auto operator<=>(const PhoneticKey&, const PhoneticKey&) = default;

private:
    std::string text_;
};

} // namespace phonokey
