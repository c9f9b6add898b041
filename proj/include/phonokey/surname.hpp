#pragma once

#include "phonokey/rewrite.hpp"
#include "phonokey/types.hpp"

#include <string>
#include <utility>
#include <vector>

namespace phonokey::surname {

// Ukrainian surname rules, steps 2-13 (apostrophes are already gone after
// textnorm). Order is significant: the -ськ- cluster codes must run before
// the soft sign is dropped.
const rewrite::RuleSet& rules();

// Ending -> code pairs of the final compression step, in table order.
std::vector<std::pair<std::string, std::string>> ending_codes();

// Hyphenated (double/triple) surnames are keyed by their cleaned text.
PhoneticKey key(const CleanToken& token);

struct KeyTrace {
    PhoneticKey key;
    rewrite::RewriteTrace trace;
};
KeyTrace key_with_trace(const CleanToken& token);

} // namespace phonokey::surname
