#ifndef DRINFELD_BUDGET_HPP
#define DRINFELD_BUDGET_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "bigint.hpp"

namespace drinfeld {

/// Raised when an enumeration would exceed the element budget.
class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Element budget for brute-force enumerations: 2^20 unless the
/// DRINFELD_BUDGET environment variable holds a positive integer.
std::uint64_t enumeration_budget();

/// Throws BudgetExceeded if `needed` elements exceed the budget.
void check_budget(const BigInt& needed, const std::string& what);

/// Soft limits on the size of F_q and on polynomial degrees accepted from
/// text input.
struct DeskLimits {
    std::uint64_t max_q = 16;
    int max_degree = 12;
    bool enforce = true;

    static DeskLimits none() { return {0, 0, false}; }
};

}  // namespace drinfeld

#endif  // DRINFELD_BUDGET_HPP
