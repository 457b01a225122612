#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlmonkey {

class EtlError : public std::runtime_error {
public:
    EtlError(const std::string& message, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// One raw CSV row. Numeric columns keep their original text so the transform
// passes them through verbatim.
struct RawRow {
    std::string component;
    bool enabled = true;
    bool preferred_type = false;
    std::string focus_distance;
    std::string path_distance;
    std::string point_distance;
    bool label = false;
};

struct BalanceReport {
    std::size_t total_before = 0;
    std::size_t false_before = 0;
    std::size_t true_before = 0;
    std::size_t total_after = 0;
    std::size_t false_after = 0;
    std::size_t true_after = 0;

    double true_ratio_before() const;
    double true_ratio_after() const;
    std::string summary() const;
};

// Parses the raw feature CSV (header required). Throws EtlError with the
// offending line number.
std::vector<RawRow> parse_raw_csv(std::istream& in);

// Keeps every label-true row; keeps each label-false row independently with
// probability keep_fraction, decided from (seed, row index) alone.
std::vector<RawRow> undersample(const std::vector<RawRow>& rows, double keep_fraction,
                                std::uint64_t seed, BalanceReport* report = nullptr);

// Raw CSV -> headerless numeric CSV: identifier dropped, booleans label-encoded
// (false -> 0, true -> 1), numeric columns untouched, majority class
// undersampled before writing.
BalanceReport transform(std::istream& raw, std::ostream& out, double keep_fraction,
                        std::uint64_t seed);

// Loads the transformed CSV: six numeric columns, the last being the 0/1 label.
std::vector<std::array<double, 6>> parse_transformed_csv(std::istream& in);

}  // namespace mlmonkey
