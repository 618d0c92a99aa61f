#include "drinfeld/budget.hpp"

#include <cstdlib>

namespace drinfeld {

std::uint64_t enumeration_budget() {
    constexpr std::uint64_t kDefault = std::uint64_t{1} << 20;
    const char* env = std::getenv("DRINFELD_BUDGET");
    if (env == nullptr || *env == '\0') return kDefault;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return kDefault;
    return v;
}

void check_budget(const BigInt& needed, const std::string& what) {
    const std::uint64_t budget = enumeration_budget();
    if (needed > budget)
        throw BudgetExceeded(what + " needs " + needed.str() + " elements, above the budget of " +
                             std::to_string(budget) + " (set DRINFELD_BUDGET to raise it)");
}

}  // namespace drinfeld
