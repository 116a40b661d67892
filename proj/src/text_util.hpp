#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace blchang::detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

// Splits on `sep` outside any (), [] or {} nesting. Pieces are trimmed.
inline std::vector<std::string> split_top_level(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(' || c == '[' || c == '{')
            ++depth;
        else if (c == ')' || c == ']' || c == '}')
            --depth;
        else if (c == sep && depth == 0) {
            out.emplace_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    if (!trim(s).empty() || !out.empty())
        out.emplace_back(trim(s.substr(start)));
    return out;
}

inline bool balanced(std::string_view s) {
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '[' || c == '{')
            ++depth;
        else if (c == ')' || c == ']' || c == '}')
            if (--depth < 0)
                return false;
    }
    return depth == 0;
}

} // namespace blchang::detail
