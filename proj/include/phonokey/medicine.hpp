#pragma once

#include "phonokey/rewrite.hpp"
#include "phonokey/types.hpp"

#include <string_view>
#include <vector>

namespace phonokey::medicine {

// Joint Ukrainian/Russian rules for drug titles: г for ґ, vowel reduction
// across both orthographies and letter dedup. No cluster, assimilation or
// ending rules, since those differ between the two languages.
const rewrite::RuleSet& rules();

PhoneticKey key(const CleanToken& token);

// One key per surviving word of the title, in title order.
std::vector<PhoneticKey> keys(std::string_view title);

} // namespace phonokey::medicine
