#include "phonokey/utf8.hpp"

#include <unicode/utf8.h>

#include <cstdint>

namespace phonokey::utf8 {

DecodeError::DecodeError(std::size_t offset)
    : std::runtime_error("invalid UTF-8 at byte " + std::to_string(offset)),
      offset_(offset) {}

std::u32string decode(std::string_view bytes) {
    std::u32string out;
    out.reserve(bytes.size());
    const auto* s = reinterpret_cast<const uint8_t*>(bytes.data());
    const auto length = static_cast<int32_t>(bytes.size());
    int32_t i = 0;
    while (i < length) {
        const int32_t start = i;
        UChar32 c;
        U8_NEXT(s, i, length, c);
        if (c < 0)
            throw DecodeError(static_cast<std::size_t>(start));
        out.push_back(static_cast<char32_t>(c));
    }
    return out;
}

bool is_valid(std::string_view bytes) noexcept {
    const auto* s = reinterpret_cast<const uint8_t*>(bytes.data());
    const auto length = static_cast<int32_t>(bytes.size());
    int32_t i = 0;
    while (i < length) {
        UChar32 c;
        U8_NEXT(s, i, length, c);
        if (c < 0)
            return false;
    }
    return true;
}

void append(std::string& out, char32_t cp) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
    if (error)
        throw std::invalid_argument("code point not encodable as UTF-8");
    out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
}

std::string encode(std::u32string_view text) {
    std::string out;
    out.reserve(text.size() * 2);
    for (char32_t c : text)
        append(out, c);
    return out;
}

std::string encode(char32_t cp) {
    std::string out;
    append(out, cp);
    return out;
}

std::size_t length(std::string_view bytes) {
    std::size_t n = 0;
    for (unsigned char b : bytes)
        if ((b & 0xC0) != 0x80)
            ++n;
    return n;
}

} // namespace phonokey::utf8
