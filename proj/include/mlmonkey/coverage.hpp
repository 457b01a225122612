#pragma once

#include <cstdint>
#include <cstddef>
#include <limits>
#include <vector>

namespace mlmonkey {

// One guard outcome (a branch in the coverage sense).
struct BranchCoverage {
    std::uint64_t hit_count = 0;
    double min_distance = std::numeric_limits<double>::infinity();
    std::uint64_t times_condition_executed = 0;
};

// Per-branch hit counts and minimum branch distances, plus per-procedure
// executed flags. Guards are indexed contiguously across all procedures; each
// guard owns two branches (true/false outcome).
class CoverageMap {
public:
    CoverageMap() = default;
    CoverageMap(std::size_t guard_count, std::size_t procedure_count);

    void record_outcome(std::size_t guard_index, bool taken_outcome, double distance_to_true,
                        double distance_to_false);
    void record_procedure(std::size_t procedure_index);

    const BranchCoverage& branch(std::size_t guard_index, bool outcome) const;
    bool procedure_executed(std::size_t procedure_index) const;

    std::size_t guard_count() const { return guard_count_; }
    std::size_t branch_count() const { return branches_.size(); }
    std::size_t procedure_count() const { return procedures_.size(); }
    std::size_t covered_branches() const;
    std::size_t executed_procedures() const;
    double coverage_percent() const;

    void reset();

private:
    std::size_t index_of(std::size_t guard_index, bool outcome) const {
        return guard_index * 2 + (outcome ? 0 : 1);
    }

    std::size_t guard_count_ = 0;
    std::vector<BranchCoverage> branches_;
    std::vector<bool> procedures_;
};

}  // namespace mlmonkey
