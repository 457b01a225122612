#pragma once

#include <string>

namespace mlmonkey {

enum class CompareOp { lt, le, eq, ne, ge, gt };

std::string to_string(CompareOp op);

// Korel-style branch distances with constant K = 1. The distance to an outcome
// is 0 iff that outcome is the one actually taken:
//   a = b   true: |a-b|            false: K if a=b else 0
//   a < b   true: max(0, a-b+K)    false: max(0, b-a)
//   a <= b  true: max(0, a-b)      false: max(0, b-a+K)
// and mirrored for >, >=, !=.
double branch_distance(CompareOp op, bool wanted_outcome, double lhs, double rhs);

// For string operands only = and != are supported; the magnitude of the
// difference is the number of mismatching positions plus the length gap.
double string_difference(const std::string& lhs, const std::string& rhs);
double branch_distance(CompareOp op, bool wanted_outcome, const std::string& lhs,
                       const std::string& rhs);

}  // namespace mlmonkey
