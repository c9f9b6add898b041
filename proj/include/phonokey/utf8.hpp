#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phonokey::utf8 {

class DecodeError : public std::runtime_error {
public:
    explicit DecodeError(std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Strict decoding: ill-formed sequences, surrogates and noncharacters past
// U+10FFFF throw DecodeError with the byte offset of the bad sequence.
std::u32string decode(std::string_view bytes);
bool is_valid(std::string_view bytes) noexcept;

std::string encode(std::u32string_view text);
std::string encode(char32_t cp);
void append(std::string& out, char32_t cp);

// Number of code points; input must be valid UTF-8.
std::size_t length(std::string_view bytes);

} // namespace phonokey::utf8
