#include "phonokey/utf8.hpp"

#include <doctest.h>

using namespace phonokey;

TEST_CASE("utf8 round trip over mixed scripts") {
    const std::string text = "Шевченко-abc ґ’ 𝔸";
    const auto chars = utf8::decode(text);
    CHECK(chars.size() == 17);
    CHECK(utf8::encode(chars) == text);
    CHECK(utf8::length(text) == 17);
}

TEST_CASE("invalid utf8 reports the byte offset") {
    const std::string bad = std::string("аб") + '\xC3';
    CHECK_FALSE(utf8::is_valid(bad));
    try {
        utf8::decode(bad);
        FAIL("decode accepted a truncated sequence");
    } catch (const utf8::DecodeError& e) {
        CHECK(e.offset() == 4);
    }
    CHECK_FALSE(utf8::is_valid("\xED\xA0\x80")); // encoded surrogate
    CHECK(utf8::is_valid(""));
}
