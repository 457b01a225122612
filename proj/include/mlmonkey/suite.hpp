#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mlmonkey/action.hpp"

namespace mlmonkey {

// The GA genotype: a sequence of GUI actions.
struct TestCase {
    std::string name;
    std::vector<Action> actions;

    std::size_t size() const { return actions.size(); }
    bool empty() const { return actions.empty(); }
};

struct TestSuite {
    std::string name;
    std::vector<TestCase> cases;

    std::size_t total_actions() const;
};

class SuiteFormatError : public std::runtime_error {
public:
    explicit SuiteFormatError(const std::string& message) : std::runtime_error(message) {}
};

std::string suite_to_json(const TestSuite& suite);
TestSuite suite_from_json(const std::string& text);
TestSuite load_suite_file(const std::string& path);
void save_suite_file(const TestSuite& suite, const std::string& path);

}  // namespace mlmonkey
