#include "mlmonkey/etl.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

#include "mlmonkey/features.hpp"
#include "mlmonkey/rng.hpp"

namespace mlmonkey {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

bool parse_bool(const std::string& text, std::size_t line, const char* column) {
    if (text == "true") {
        return true;
    }
    if (text == "false") {
        return false;
    }
    throw EtlError(std::string("unknown categorical value '") + text + "' in column " + column,
                   line);
}

void check_integer(const std::string& text, std::size_t line, const char* column) {
    long long value = 0;
    auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
        throw EtlError(std::string("malformed integer '") + text + "' in column " + column, line);
    }
}

double parse_double(const std::string& text, std::size_t line, const char* column) {
    double value = 0.0;
    auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
        throw EtlError(std::string("malformed number '") + text + "' in column " + column, line);
    }
    return value;
}

}  // namespace

double BalanceReport::true_ratio_before() const {
    return total_before == 0 ? 0.0
                             : static_cast<double>(true_before) / static_cast<double>(total_before);
}

double BalanceReport::true_ratio_after() const {
    return total_after == 0 ? 0.0
                            : static_cast<double>(true_after) / static_cast<double>(total_after);
}

std::string BalanceReport::summary() const {
    char buffer[256];
    std::snprintf(buffer, sizeof(buffer),
                  "Stats (raw): %zu, %zu (%.2f%%) false, %zu (%.2f%%) true.\n"
                  "Stats (sampled): %zu, %zu (%.2f%%) false, %zu (%.2f%%) true.",
                  total_before, false_before, 100.0 * (1.0 - true_ratio_before()), true_before,
                  100.0 * true_ratio_before(), total_after, false_after,
                  100.0 * (1.0 - true_ratio_after()), true_after, 100.0 * true_ratio_after());
    return buffer;
}

std::vector<RawRow> parse_raw_csv(std::istream& in) {
    std::vector<RawRow> rows;
    std::string line;
    std::size_t line_number = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        line_number++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (!saw_header) {
            if (line != kRawCsvHeader) {
                throw EtlError("unexpected header '" + line + "'", line_number);
            }
            saw_header = true;
            continue;
        }
        std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != 7) {
            throw EtlError("malformed row: expected 7 fields, got " +
                               std::to_string(fields.size()),
                           line_number);
        }
        RawRow row;
        row.component = fields[0];
        row.enabled = parse_bool(fields[1], line_number, "enabled");
        row.preferred_type = parse_bool(fields[2], line_number, "preferredType");
        check_integer(fields[3], line_number, "focusDistance");
        check_integer(fields[4], line_number, "pathDistance");
        parse_double(fields[5], line_number, "pointDistance");
        row.focus_distance = fields[3];
        row.path_distance = fields[4];
        row.point_distance = fields[5];
        row.label = parse_bool(fields[6], line_number, "label");
        rows.push_back(std::move(row));
    }
    if (!saw_header) {
        throw EtlError("empty input: missing header", 1);
    }
    return rows;
}

std::vector<RawRow> undersample(const std::vector<RawRow>& rows, double keep_fraction,
                                std::uint64_t seed, BalanceReport* report) {
    BalanceReport stats;
    stats.total_before = rows.size();
    std::vector<RawRow> kept;
    kept.reserve(rows.size());
    for (std::size_t index = 0; index < rows.size(); ++index) {
        const RawRow& row = rows[index];
        if (row.label) {
            stats.true_before++;
            kept.push_back(row);
            stats.true_after++;
            continue;
        }
        stats.false_before++;
        if (uniform01_at(seed, index) < keep_fraction) {
            kept.push_back(row);
            stats.false_after++;
        }
    }
    stats.total_after = kept.size();
    if (report != nullptr) {
        *report = stats;
    }
    return kept;
}

BalanceReport transform(std::istream& raw, std::ostream& out, double keep_fraction,
                        std::uint64_t seed) {
    std::vector<RawRow> rows = parse_raw_csv(raw);
    BalanceReport report;
    std::vector<RawRow> sampled = undersample(rows, keep_fraction, seed, &report);
    for (const RawRow& row : sampled) {
        out << (row.enabled ? '1' : '0') << ',' << (row.preferred_type ? '1' : '0') << ','
            << row.focus_distance << ',' << row.path_distance << ',' << row.point_distance << ','
            << (row.label ? '1' : '0') << '\n';
    }
    return report;
}

std::vector<std::array<double, 6>> parse_transformed_csv(std::istream& in) {
    std::vector<std::array<double, 6>> rows;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        line_number++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != 6) {
            throw EtlError("malformed row: expected 6 fields, got " +
                               std::to_string(fields.size()),
                           line_number);
        }
        std::array<double, 6> row{};
        for (std::size_t i = 0; i < 6; ++i) {
            row[i] = parse_double(fields[i], line_number, "column");
        }
        if (row[5] != 0.0 && row[5] != 1.0) {
            throw EtlError("label must be 0 or 1", line_number);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace mlmonkey
