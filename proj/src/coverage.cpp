#include "mlmonkey/coverage.hpp"

#include <algorithm>

namespace mlmonkey {

CoverageMap::CoverageMap(std::size_t guard_count, std::size_t procedure_count)
    : guard_count_(guard_count), branches_(guard_count * 2), procedures_(procedure_count, false) {}

void CoverageMap::record_outcome(std::size_t guard_index, bool taken_outcome,
                                 double distance_to_true, double distance_to_false) {
    BranchCoverage& true_branch = branches_[index_of(guard_index, true)];
    BranchCoverage& false_branch = branches_[index_of(guard_index, false)];
    true_branch.times_condition_executed++;
    false_branch.times_condition_executed++;
    true_branch.min_distance = std::min(true_branch.min_distance, distance_to_true);
    false_branch.min_distance = std::min(false_branch.min_distance, distance_to_false);
    branches_[index_of(guard_index, taken_outcome)].hit_count++;
}

void CoverageMap::record_procedure(std::size_t procedure_index) {
    procedures_[procedure_index] = true;
}

const BranchCoverage& CoverageMap::branch(std::size_t guard_index, bool outcome) const {
    return branches_[index_of(guard_index, outcome)];
}

bool CoverageMap::procedure_executed(std::size_t procedure_index) const {
    return procedures_[procedure_index];
}

std::size_t CoverageMap::covered_branches() const {
    std::size_t covered = 0;
    for (const auto& branch : branches_) {
        if (branch.hit_count > 0) {
            covered++;
        }
    }
    return covered;
}

std::size_t CoverageMap::executed_procedures() const {
    std::size_t executed = 0;
    for (bool flag : procedures_) {
        if (flag) {
            executed++;
        }
    }
    return executed;
}

double CoverageMap::coverage_percent() const {
    if (branches_.empty()) {
        return 0.0;
    }
    return 100.0 * static_cast<double>(covered_branches()) / static_cast<double>(branches_.size());
}

void CoverageMap::reset() {
    std::fill(branches_.begin(), branches_.end(), BranchCoverage{});
    std::fill(procedures_.begin(), procedures_.end(), false);
}

}  // namespace mlmonkey
