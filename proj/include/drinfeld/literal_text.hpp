#ifndef DRINFELD_LITERAL_TEXT_HPP
#define DRINFELD_LITERAL_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace drinfeld {

std::string trim(std::string_view s);

/// Trimmed pieces between separators (empty pieces kept).
std::vector<std::string> split(std::string_view s, char sep);

/// Right side of "lhs = rhs"; throws std::invalid_argument if the left side
/// differs.
std::string rhs_of(const std::string& clause, const std::string& lhs);

}  // namespace drinfeld

#endif  // DRINFELD_LITERAL_TEXT_HPP
