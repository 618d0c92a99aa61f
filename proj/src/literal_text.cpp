#include "drinfeld/literal_text.hpp"

#include <cctype>
#include <stdexcept>

namespace drinfeld {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    return out;
}

std::string rhs_of(const std::string& clause, const std::string& lhs) {
    const auto eq = clause.find('=');
    if (eq == std::string::npos || trim(std::string_view(clause).substr(0, eq)) != lhs)
        throw std::invalid_argument("expected \"" + lhs + " = ...\", got \"" + clause + "\"");
    return trim(std::string_view(clause).substr(eq + 1));
}

}  // namespace drinfeld
