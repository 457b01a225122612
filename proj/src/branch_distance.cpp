#include "mlmonkey/branch_distance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mlmonkey {

namespace {
constexpr double kK = 1.0;
}

std::string to_string(CompareOp op) {
    switch (op) {
        case CompareOp::lt: return "<";
        case CompareOp::le: return "<=";
        case CompareOp::eq: return "=";
        case CompareOp::ne: return "!=";
        case CompareOp::ge: return ">=";
        case CompareOp::gt: return ">";
    }
    return "=";
}

double branch_distance(CompareOp op, bool wanted_outcome, double lhs, double rhs) {
    switch (op) {
        case CompareOp::eq:
            if (wanted_outcome) {
                return std::abs(lhs - rhs);
            }
            return lhs == rhs ? kK : 0.0;
        case CompareOp::ne:
            return branch_distance(CompareOp::eq, !wanted_outcome, lhs, rhs);
        case CompareOp::lt:
            if (wanted_outcome) {
                return std::max(0.0, lhs - rhs + kK);
            }
            return std::max(0.0, rhs - lhs);
        case CompareOp::le:
            if (wanted_outcome) {
                return std::max(0.0, lhs - rhs);
            }
            return std::max(0.0, rhs - lhs + kK);
        case CompareOp::gt:
            return branch_distance(CompareOp::lt, wanted_outcome, rhs, lhs);
        case CompareOp::ge:
            return branch_distance(CompareOp::le, wanted_outcome, rhs, lhs);
    }
    return 0.0;
}

double string_difference(const std::string& lhs, const std::string& rhs) {
    std::size_t common = std::min(lhs.size(), rhs.size());
    double diff = static_cast<double>(std::max(lhs.size(), rhs.size()) - common);
    for (std::size_t i = 0; i < common; ++i) {
        if (lhs[i] != rhs[i]) {
            diff += 1.0;
        }
    }
    return diff;
}

double branch_distance(CompareOp op, bool wanted_outcome, const std::string& lhs,
                       const std::string& rhs) {
    if (op != CompareOp::eq && op != CompareOp::ne) {
        throw std::logic_error("ordering comparisons are not defined for string operands");
    }
    bool equal = lhs == rhs;
    bool want_equal = (op == CompareOp::eq) == wanted_outcome;
    if (want_equal) {
        return string_difference(lhs, rhs);
    }
    return equal ? kK : 0.0;
}

}  // namespace mlmonkey
