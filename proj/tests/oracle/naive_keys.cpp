#include "naive_keys.hpp"

#include <utility>
#include <vector>

namespace naive {
namespace {

using Pairs = std::vector<std::pair<std::u32string, std::u32string>>;

bool matches_at(const std::u32string& s, std::size_t pos, const std::u32string& pattern) {
    return s.compare(pos, pattern.size(), pattern) == 0;
}

// One left-to-right sweep: at every position take the longest listed
// pattern that matches, emit its replacement and jump past it.
std::u32string sweep(const std::u32string& s, const Pairs& group) {
    std::u32string out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const std::pair<std::u32string, std::u32string>* best = nullptr;
        for (const auto& p : group)
            if (matches_at(s, pos, p.first) && (!best || p.first.size() > best->first.size()))
                best = &p;
        if (best) {
            out += best->second;
            pos += best->first.size();
        } else {
            out += s[pos++];
        }
    }
    return out;
}

std::u32string until_stable(std::u32string s, const Pairs& group) {
    for (;;) {
        std::u32string next = sweep(s, group);
        if (next == s)
            return s;
        s = std::move(next);
    }
}

// с+ьк -> 1: a run of one or more с followed by ьк.
std::u32string s_run_cluster(std::u32string s) {
    for (;;) {
        bool changed = false;
        std::u32string out;
        std::size_t i = 0;
        while (i < s.size()) {
            std::size_t j = i;
            while (j < s.size() && s[j] == U'с')
                ++j;
            if (j > i && j + 1 < s.size() && s[j] == U'ь' && s[j + 1] == U'к') {
                out += U'1';
                i = j + 2;
                changed = true;
            } else if (j > i) {
                out.append(s, i, j - i);
                i = j;
            } else {
                out += s[i++];
            }
        }
        if (!changed)
            return s;
        s = std::move(out);
    }
}

std::u32string voice_before_voiced(std::u32string s) {
    const std::u32string voiceless = U"пхтшс";
    const std::u32string voiced = U"бгджз";
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            const auto at = voiceless.find(s[i]);
            if (at != std::u32string::npos && voiced.find(s[i + 1]) != std::u32string::npos) {
                s[i] = voiced[at];
                changed = true;
            }
        }
    }
    return s;
}

std::u32string collapse_runs(const std::u32string& s) {
    std::u32string out;
    for (char32_t c : s)
        if (out.empty() || out.back() != c)
            out += c;
    return out;
}

bool ends_with(const std::u32string& s, const std::u32string& tail) {
    return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

std::u32string compress_ending(std::u32string s) {
    static const Pairs endings = {
        {U"авко", U"A"}, {U"аико", U"B"}, {U"аика", U"B"}, {U"аило", U"C"}, {U"анко", U"D"},
        {U"ашко", U"E"}, {U"евич", U"F"}, {U"евка", U"G"}, {U"еико", U"H"}, {U"еика", U"H"},
        {U"енко", U"I"}, {U"енка", U"I"}, {U"ечко", U"J"}, {U"ешко", U"K"},
        {U"иско", U"M"}, {U"ишин", U"N"}, {U"ишко", U"O"}, {U"ович", U"P"}, {U"онко", U"Q"},
        {U"очко", U"R"}, {U"уник", U"S"}, {U"унко", U"T"}, {U"унка", U"T"}, {U"ушко", U"U"},
        {U"ушка", U"U"},
    };
    for (const auto& [tail, code] : endings)
        if (ends_with(s, tail))
            return s.substr(0, s.size() - tail.size()) + code;
    return s;
}

} // namespace

std::u32string surname_key(std::u32string s) {
    if (s.find(U'-') != std::u32string::npos)
        return s;

    s = until_stable(s, {{U"ґ", U"г"}});
    s = until_stable(s, {{U"іе", U"е"}, {U"йе", U"е"}});
    s = until_stable(s, {{U"іа", U"а"}, {U"ія", U"а"}});
    s = until_stable(s, {{U"йо", U"о"}});
    s = until_stable(s, {{U"є", U"е"}});
    s = until_stable(s, {{U"я", U"а"}});
    s = until_stable(s, {{U"і", U"и"}, {U"ї", U"и"}, {U"й", U"и"}});
    s = until_stable(s, {{U"ю", U"у"}});
    while (ends_with(s, U"ў"))
        s.back() = U'в';

    s = until_stable(s, {{U"цьк", U"3"}, {U"дськ", U"3"}, {U"тськ", U"3"}, {U"кськ", U"3"},
                         {U"чськ", U"3"}, {U"цськ", U"3"}});
    s = until_stable(s, {{U"зьк", U"2"}, {U"гськ", U"2"}, {U"жськ", U"2"}, {U"зськ", U"2"}});
    s = s_run_cluster(s);

    std::u32string no_soft;
    for (char32_t c : s)
        if (c != U'ь')
            no_soft += c;
    s = voice_before_voiced(no_soft);

    s = until_stable(s, {{U"хв", U"ф"}});
    s = until_stable(s, {{U"сч", U"щ"}, {U"жч", U"щ"}, {U"шч", U"щ"}, {U"щч", U"щ"}});
    s = until_stable(s, {{U"стн", U"сн"}});
    s = until_stable(s, {{U"здн", U"зн"}});
    s = until_stable(s, {{U"слн", U"сн"}});
    s = until_stable(s, {{U"стл", U"сл"}});
    s = until_stable(s, {{U"шчн", U"шн"}});
    s = until_stable(s, {{U"цв", U"ц"}});
    s = collapse_runs(s);
    return compress_ending(s);
}

std::u32string medicine_key(std::u32string s) {
    s = until_stable(s, {{U"ґ", U"г"}});
    s = until_stable(s, {{U"йе", U"е"}, {U"іе", U"е"}});
    s = until_stable(s, {{U"іа", U"а"}, {U"ія", U"а"}, {U"иа", U"а"}});
    s = until_stable(s, {{U"йо", U"о"}});
    s = until_stable(s, {{U"є", U"е"}, {U"э", U"е"}});
    s = until_stable(s, {{U"я", U"а"}});
    s = until_stable(s, {{U"і", U"и"}, {U"ї", U"и"}, {U"ы", U"и"}, {U"й", U"и"}});
    s = until_stable(s, {{U"ю", U"у"}});
    s = until_stable(s, {{U"ё", U"о"}});
    return collapse_runs(s);
}

} // namespace naive
