#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mlmonkey/branch_distance.hpp"

namespace mlmonkey {

enum class ValueType { integer, text };

struct Value {
    ValueType type = ValueType::integer;
    long long i = 0;
    std::string s;

    static Value of_int(long long v) { return Value{ValueType::integer, v, {}}; }
    static Value of_text(std::string v) { return Value{ValueType::text, 0, std::move(v)}; }
};

struct VariableDecl {
    std::string name;
    Value init;
};

// An operand of a guard or effect: a declared variable, a literal, the action
// payload as text, or the action payload parsed as an integer.
struct Operand {
    enum class Kind { variable, literal, payload, payload_as_int };
    Kind kind = Kind::literal;
    std::size_t var_index = 0;  // resolved at load time
    std::string var_name;
    Value literal;
};

struct Guard {
    Operand lhs;
    CompareOp op = CompareOp::eq;
    Operand rhs;
    ValueType operand_type = ValueType::integer;
};

struct Effect {
    enum class Kind {
        set_var,
        add_var,
        open_window,
        close_window,
        enable_component,
        disable_component,
        exit_sut,
    };
    Kind kind = Kind::exit_sut;
    std::size_t var_index = 0;
    Operand value;              // set_var
    long long amount = 0;       // add_var
    std::size_t window_index = 0;
    std::string component_path;  // enable/disable, joined form
};

struct GuardedBranch {
    Guard guard;
    std::vector<Effect> on_true;
    std::vector<Effect> on_false;
    std::size_t guard_index = 0;  // flat index into the CoverageMap
};

struct Procedure {
    std::string name;
    std::vector<GuardedBranch> branches;
    std::size_t index = 0;
};

}  // namespace mlmonkey
