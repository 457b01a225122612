#include "mlmonkey/suite.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mlmonkey {

using nlohmann::json;

std::size_t TestSuite::total_actions() const {
    std::size_t total = 0;
    for (const auto& test_case : cases) {
        total += test_case.actions.size();
    }
    return total;
}

std::string suite_to_json(const TestSuite& suite) {
    json root;
    root["name"] = suite.name;
    json tests = json::array();
    for (const TestCase& test_case : suite.cases) {
        json actions = json::array();
        for (const Action& action : test_case.actions) {
            json node;
            node["kind"] = to_string(action.kind);
            node["target"] = action.target.path_string();
            if (action.payload) {
                node["payload"] = *action.payload;
            }
            actions.push_back(std::move(node));
        }
        json test;
        test["name"] = test_case.name.empty() ? "generated" : test_case.name;
        test["actions"] = std::move(actions);
        tests.push_back(std::move(test));
    }
    root["tests"] = std::move(tests);
    return root.dump(2) + "\n";
}

TestSuite suite_from_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SuiteFormatError(std::string("suite parse error: ") + e.what());
    }
    if (!root.is_object() || !root.contains("tests") || !root.at("tests").is_array()) {
        throw SuiteFormatError("suite file needs a 'tests' array");
    }
    TestSuite suite;
    suite.name = root.value("name", "suite");
    for (const json& test : root.at("tests")) {
        TestCase test_case;
        test_case.name = test.value("name", "generated");
        if (!test.contains("actions") || !test.at("actions").is_array()) {
            throw SuiteFormatError("test '" + test_case.name + "' needs an 'actions' array");
        }
        for (const json& node : test.at("actions")) {
            Action action;
            std::string kind_text = node.value("kind", "");
            auto kind = action_kind_from_string(kind_text);
            if (!kind) {
                throw SuiteFormatError("test '" + test_case.name + "': unknown action kind '" +
                                       kind_text + "'");
            }
            action.kind = *kind;
            if (!node.contains("target") || !node.at("target").is_string()) {
                throw SuiteFormatError("test '" + test_case.name + "': action needs a 'target'");
            }
            action.target.path = split_path(node.at("target").get<std::string>());
            if (action.target.path.empty()) {
                throw SuiteFormatError("test '" + test_case.name + "': empty target path");
            }
            if (node.contains("payload")) {
                action.payload = node.at("payload").get<std::string>();
            }
            if (action.kind != ActionKind::click && !action.payload) {
                throw SuiteFormatError("test '" + test_case.name + "': " + kind_text +
                                       " needs a payload");
            }
            if (action.kind == ActionKind::click && action.payload) {
                throw SuiteFormatError("test '" + test_case.name +
                                       "': click must not carry a payload");
            }
            test_case.actions.push_back(std::move(action));
        }
        suite.cases.push_back(std::move(test_case));
    }
    return suite;
}

TestSuite load_suite_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw SuiteFormatError("cannot open suite file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return suite_from_json(buffer.str());
}

void save_suite_file(const TestSuite& suite, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw SuiteFormatError("cannot write suite file '" + path + "'");
    }
    out << suite_to_json(suite);
}

}  // namespace mlmonkey
