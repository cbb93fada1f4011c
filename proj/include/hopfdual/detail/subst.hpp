#pragma once

#include <initializer_list>
#include <string>
#include <utility>

namespace hopfdual::detail {

// "{A}"-style placeholder substitution for diagram script templates.
inline std::string subst(std::string tmpl,
                         std::initializer_list<std::pair<const char*, std::string>> repl) {
    for (const auto& [key, value] : repl) {
        std::string pat = std::string("{") + key + "}";
        size_t pos = 0;
        while ((pos = tmpl.find(pat, pos)) != std::string::npos) {
            tmpl.replace(pos, pat.size(), value);
            pos += value.size();
        }
    }
    return tmpl;
}

} // namespace hopfdual::detail
