#ifndef LEVY_PRESETS_HPP
#define LEVY_PRESETS_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace levy {

// Measured step-size exponents from the human-mobility trace sites.
inline const std::vector<std::pair<std::string, double>>& site_presets() {
    static const std::vector<std::pair<std::string, double>> presets = {
        {"kaist", 0.53},
        {"ncsu", 1.27},
        {"new-york-city", 1.62},
        {"disney-world", 1.20},
        {"state-fair", 1.81},
    };
    return presets;
}

// Case-insensitive lookup; spaces and underscores are treated as hyphens so
// "KAIST", "New York City" and "state_fair" all resolve.
inline std::optional<double> site_alpha(const std::string& name) {
    std::string key;
    key.reserve(name.size());
    for (char c : name) {
        if (c == ' ' || c == '_') c = '-';
        key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    for (const auto& [site, alpha] : site_presets())
        if (site == key) return alpha;
    return std::nullopt;
}

} // namespace levy

#endif
