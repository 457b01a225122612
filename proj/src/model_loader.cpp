#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "mlmonkey/sut.hpp"

#include "json.hpp"

namespace mlmonkey {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
    throw ModelError("model error: " + message);
}

std::string location_of(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            line++;
            column = 1;
        } else {
            column++;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const json& member(const json& object, const char* key, const std::string& context) {
    auto it = object.find(key);
    if (it == object.end()) {
        fail(context + ": missing key '" + key + "'");
    }
    return *it;
}

std::string string_member(const json& object, const char* key, const std::string& context) {
    const json& value = member(object, key, context);
    if (!value.is_string()) {
        fail(context + ": '" + std::string(key) + "' must be a string");
    }
    return value.get<std::string>();
}

CompareOp parse_op(const std::string& text, const std::string& context) {
    if (text == "<") return CompareOp::lt;
    if (text == "<=") return CompareOp::le;
    if (text == "=" || text == "==") return CompareOp::eq;
    if (text == "!=") return CompareOp::ne;
    if (text == ">=") return CompareOp::ge;
    if (text == ">") return CompareOp::gt;
    fail(context + ": unknown comparison operator '" + text + "'");
}

struct LoaderContext {
    SutModel model;

    Operand parse_operand(const json& node, const std::string& context) {
        Operand operand;
        if (!node.is_object()) {
            fail(context + ": operand must be an object");
        }
        if (node.contains("var")) {
            operand.kind = Operand::Kind::variable;
            operand.var_name = node.at("var").get<std::string>();
            auto it = model.variable_index.find(operand.var_name);
            if (it == model.variable_index.end()) {
                fail(context + ": undeclared variable '" + operand.var_name + "'");
            }
            operand.var_index = it->second;
        } else if (node.contains("lit")) {
            operand.kind = Operand::Kind::literal;
            const json& lit = node.at("lit");
            if (lit.is_number_integer()) {
                operand.literal = Value::of_int(lit.get<long long>());
            } else if (lit.is_string()) {
                operand.literal = Value::of_text(lit.get<std::string>());
            } else {
                fail(context + ": literal must be an integer or a string");
            }
        } else if (node.contains("payload")) {
            operand.kind = Operand::Kind::payload;
        } else if (node.contains("payload-int")) {
            operand.kind = Operand::Kind::payload_as_int;
        } else {
            fail(context + ": operand needs one of 'var', 'lit', 'payload', 'payload-int'");
        }
        return operand;
    }

    ValueType operand_type(const Operand& operand) const {
        switch (operand.kind) {
            case Operand::Kind::variable:
                return model.variables[operand.var_index].init.type;
            case Operand::Kind::literal:
                return operand.literal.type;
            case Operand::Kind::payload:
                return ValueType::text;
            case Operand::Kind::payload_as_int:
                return ValueType::integer;
        }
        return ValueType::integer;
    }

    Effect parse_effect(const json& node, const std::string& context) {
        Effect effect;
        if (!node.is_object()) {
            fail(context + ": effect must be an object");
        }
        if (node.contains("set")) {
            effect.kind = Effect::Kind::set_var;
            std::string name = node.at("set").get<std::string>();
            auto it = model.variable_index.find(name);
            if (it == model.variable_index.end()) {
                fail(context + ": undeclared variable '" + name + "'");
            }
            effect.var_index = it->second;
            effect.value = parse_operand(member(node, "to", context), context);
            if (operand_type(effect.value) != model.variables[effect.var_index].init.type) {
                fail(context + ": type mismatch assigning to '" + name + "'");
            }
        } else if (node.contains("add")) {
            effect.kind = Effect::Kind::add_var;
            std::string name = node.at("add").get<std::string>();
            auto it = model.variable_index.find(name);
            if (it == model.variable_index.end()) {
                fail(context + ": undeclared variable '" + name + "'");
            }
            if (model.variables[it->second].init.type != ValueType::integer) {
                fail(context + ": 'add' needs an integer variable, got '" + name + "'");
            }
            effect.var_index = it->second;
            const json& by = member(node, "by", context);
            if (!by.is_number_integer()) {
                fail(context + ": 'by' must be an integer");
            }
            effect.amount = by.get<long long>();
        } else if (node.contains("open") || node.contains("close")) {
            bool open = node.contains("open");
            effect.kind = open ? Effect::Kind::open_window : Effect::Kind::close_window;
            std::string name = node.at(open ? "open" : "close").get<std::string>();
            auto it = model.window_index.find(name);
            if (it == model.window_index.end()) {
                fail(context + ": unknown window '" + name + "'");
            }
            effect.window_index = it->second;
        } else if (node.contains("enable") || node.contains("disable")) {
            bool enable = node.contains("enable");
            effect.kind = enable ? Effect::Kind::enable_component : Effect::Kind::disable_component;
            effect.component_path = node.at(enable ? "enable" : "disable").get<std::string>();
            if (model.component_location.find(effect.component_path) ==
                model.component_location.end()) {
                fail(context + ": unknown component path '" + effect.component_path + "'");
            }
        } else if (node.contains("exit")) {
            effect.kind = Effect::Kind::exit_sut;
        } else {
            fail(context + ": unknown effect");
        }
        return effect;
    }
};

void parse_variables(LoaderContext& ctx, const json& root) {
    if (!root.contains("variables")) {
        return;
    }
    const json& variables = root.at("variables");
    if (!variables.is_array()) {
        fail("'variables' must be an array");
    }
    for (const json& node : variables) {
        VariableDecl decl;
        decl.name = string_member(node, "name", "variable");
        const std::string context = "variable '" + decl.name + "'";
        if (ctx.model.variable_index.count(decl.name) != 0) {
            fail(context + ": duplicate declaration");
        }
        std::string type = string_member(node, "type", context);
        const json& init = member(node, "init", context);
        if (type == "int") {
            if (!init.is_number_integer()) {
                fail(context + ": integer variable needs an integer 'init'");
            }
            decl.init = Value::of_int(init.get<long long>());
        } else if (type == "string") {
            if (!init.is_string()) {
                fail(context + ": string variable needs a string 'init'");
            }
            decl.init = Value::of_text(init.get<std::string>());
        } else {
            fail(context + ": unknown type '" + type + "'");
        }
        ctx.model.variable_index[decl.name] = ctx.model.variables.size();
        ctx.model.variables.push_back(std::move(decl));
    }
}

void parse_lexicon(LoaderContext& ctx, const json& root) {
    if (!root.contains("lexicon")) {
        return;
    }
    const json& lexicon = root.at("lexicon");
    if (!lexicon.is_object()) {
        fail("'lexicon' must be an object of string arrays");
    }
    for (auto it = lexicon.begin(); it != lexicon.end(); ++it) {
        std::vector<std::string> entries;
        if (!it.value().is_array() || it.value().empty()) {
            fail("lexicon section '" + it.key() + "' must be a non-empty array");
        }
        for (const json& entry : it.value()) {
            if (!entry.is_string()) {
                fail("lexicon section '" + it.key() + "' must contain strings only");
            }
            entries.push_back(entry.get<std::string>());
        }
        ctx.model.lexicon[it.key()] = std::move(entries);
    }
}

struct PendingBinding {
    std::size_t window;
    std::size_t component;
    ActionKind kind;
    std::string procedure;
    std::string context;
};

void parse_window(LoaderContext& ctx, const json& node, std::vector<PendingBinding>& pending) {
    ModelWindow window;
    window.name = string_member(node, "name", "window");
    const std::string wctx = "window '" + window.name + "'";
    if (ctx.model.window_index.count(window.name) != 0) {
        fail(wctx + ": duplicate window name");
    }
    const json& components = member(node, "components", wctx);
    if (!components.is_array() || components.empty()) {
        fail(wctx + ": needs a non-empty 'components' array");
    }

    std::set<std::string> seen_paths;
    std::vector<int> focus_indices;
    std::string root_token;
    std::size_t window_idx = ctx.model.windows.size();

    for (const json& cnode : components) {
        ModelComponent component;
        ComponentDescriptor& d = component.descriptor;
        const json& path_node = member(cnode, "path", wctx);
        if (!path_node.is_array() || path_node.empty()) {
            fail(wctx + ": component 'path' must be a non-empty array");
        }
        for (const json& element : path_node) {
            d.path.push_back(element.get<std::string>());
        }
        const std::string cctx = wctx + " component '" + d.path_string() + "'";

        if (root_token.empty()) {
            if (d.path.size() != 1) {
                fail(wctx + ": first component must be the window root (path of length 1)");
            }
            root_token = d.path.front();
        } else {
            if (d.path.front() != root_token) {
                fail(cctx + ": path must start at the window root '" + root_token + "'");
            }
            std::vector<std::string> parent(d.path.begin(), d.path.end() - 1);
            if (seen_paths.count(join_path(parent)) == 0) {
                fail(cctx + ": parent component not declared before it");
            }
        }
        if (!seen_paths.insert(d.path_string()).second) {
            fail(wctx + ": duplicate component path '" + d.path_string() + "'");
        }

        if (cnode.contains("category")) {
            auto category = category_from_string(cnode.at("category").get<std::string>());
            if (!category) {
                fail(cctx + ": unknown category");
            }
            d.category = *category;
        }
        d.enabled = cnode.value("enabled", true);
        d.focusable = cnode.value("focusable", false);
        if (cnode.contains("focus_index")) {
            d.focus_index = cnode.at("focus_index").get<int>();
        }
        if (d.focusable != d.focus_index.has_value()) {
            fail(cctx + ": 'focus_index' must be present iff 'focusable' is true");
        }
        if (d.focus_index) {
            focus_indices.push_back(*d.focus_index);
        }
        if (cnode.contains("bounds")) {
            const json& bounds = cnode.at("bounds");
            d.bounds.x = bounds.value("x", 0.0);
            d.bounds.y = bounds.value("y", 0.0);
            d.bounds.w = bounds.value("w", 0.0);
            d.bounds.h = bounds.value("h", 0.0);
            if (d.bounds.w < 0.0 || d.bounds.h < 0.0) {
                fail(cctx + ": bounds width/height must be non-negative");
            }
        }

        if (cnode.contains("actions")) {
            for (const json& anode : cnode.at("actions")) {
                std::string kind_text = string_member(anode, "kind", cctx);
                auto kind = action_kind_from_string(kind_text);
                if (!kind) {
                    fail(cctx + ": unknown action kind '" + kind_text + "'");
                }
                if (d.offers(*kind)) {
                    fail(cctx + ": duplicate action kind '" + kind_text + "'");
                }
                d.action_kinds.push_back(*kind);
                if (*kind == ActionKind::select) {
                    const json& choices = member(anode, "choices", cctx);
                    if (!choices.is_array() || choices.empty()) {
                        fail(cctx + ": select needs a non-empty 'choices' array");
                    }
                    for (const json& choice : choices) {
                        d.choices.push_back(choice.get<std::string>());
                    }
                }
                if (*kind == ActionKind::enter_text) {
                    d.payload_class = anode.value("payload_class", "free_text");
                }
                pending.push_back(PendingBinding{window_idx, window.components.size(), *kind,
                                                 string_member(anode, "procedure", cctx), cctx});
            }
            std::sort(d.action_kinds.begin(), d.action_kinds.end());
        }

        ctx.model.component_location[d.path_string()] = {window_idx, window.components.size()};
        window.components.push_back(std::move(component));
    }

    std::sort(focus_indices.begin(), focus_indices.end());
    for (std::size_t i = 0; i < focus_indices.size(); ++i) {
        if (focus_indices[i] != static_cast<int>(i)) {
            fail(wctx + ": focus indices must form a contiguous cycle 0.." +
                 std::to_string(focus_indices.size() - 1));
        }
    }

    ctx.model.window_index[window.name] = window_idx;
    ctx.model.windows.push_back(std::move(window));
}

void parse_procedures(LoaderContext& ctx, const json& root) {
    if (!root.contains("procedures")) {
        return;
    }
    const json& procedures = root.at("procedures");
    if (!procedures.is_array()) {
        fail("'procedures' must be an array");
    }
    for (const json& node : procedures) {
        Procedure procedure;
        procedure.name = string_member(node, "name", "procedure");
        const std::string pctx = "procedure '" + procedure.name + "'";
        if (ctx.model.procedure_index.count(procedure.name) != 0) {
            fail(pctx + ": duplicate procedure name");
        }
        const json& branches = member(node, "branches", pctx);
        if (!branches.is_array() || branches.empty()) {
            fail(pctx + ": needs a non-empty 'branches' array");
        }
        for (const json& bnode : branches) {
            GuardedBranch branch;
            const json& guard = member(bnode, "guard", pctx);
            branch.guard.lhs = ctx.parse_operand(member(guard, "left", pctx), pctx);
            branch.guard.rhs = ctx.parse_operand(member(guard, "right", pctx), pctx);
            branch.guard.op = parse_op(string_member(guard, "op", pctx), pctx);
            ValueType lt = ctx.operand_type(branch.guard.lhs);
            ValueType rt = ctx.operand_type(branch.guard.rhs);
            if (lt != rt) {
                fail(pctx + ": guard operands must have the same type");
            }
            branch.guard.operand_type = lt;
            if (lt == ValueType::text && branch.guard.op != CompareOp::eq &&
                branch.guard.op != CompareOp::ne) {
                fail(pctx + ": ordering comparisons need integer operands");
            }
            if (bnode.contains("then")) {
                for (const json& effect : bnode.at("then")) {
                    branch.on_true.push_back(ctx.parse_effect(effect, pctx));
                }
            }
            if (bnode.contains("else")) {
                for (const json& effect : bnode.at("else")) {
                    branch.on_false.push_back(ctx.parse_effect(effect, pctx));
                }
            }
            branch.guard_index = ctx.model.guard_count++;
            procedure.branches.push_back(std::move(branch));
        }
        procedure.index = ctx.model.procedures.size();
        ctx.model.procedure_index[procedure.name] = procedure.index;
        ctx.model.procedures.push_back(std::move(procedure));
    }
}

}  // namespace

SutModel SutModel::parse(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ModelError("model parse error at " + location_of(json_text, e.byte) + ": " +
                         e.what());
    }
    if (!root.is_object()) {
        fail("top level must be an object");
    }

    LoaderContext ctx;
    parse_variables(ctx, root);
    parse_lexicon(ctx, root);

    if (!root.contains("windows") || !root.at("windows").is_array() ||
        root.at("windows").empty()) {
        fail("no initial window (model declares zero windows)");
    }
    std::vector<PendingBinding> pending;
    std::set<std::string> root_tokens;
    for (const json& node : root.at("windows")) {
        parse_window(ctx, node, pending);
        const std::string& token = ctx.model.windows.back().components.front().descriptor.path[0];
        if (!root_tokens.insert(token).second) {
            fail("window root '" + token + "' is used by more than one window");
        }
    }

    std::string initial = string_member(root, "initial_window", "model");
    auto initial_it = ctx.model.window_index.find(initial);
    if (initial_it == ctx.model.window_index.end()) {
        fail("no initial window (unknown window '" + initial + "')");
    }
    ctx.model.initial_window = initial_it->second;

    parse_procedures(ctx, root);

    for (const auto& binding : pending) {
        auto it = ctx.model.procedure_index.find(binding.procedure);
        if (it == ctx.model.procedure_index.end()) {
            fail(binding.context + ": unknown procedure '" + binding.procedure + "'");
        }
        ctx.model.windows[binding.window].components[binding.component].bindings.push_back(
            ActionBinding{binding.kind, it->second});
    }

    // Payload classes must resolve once any enter-text action exists.
    for (const auto& window : ctx.model.windows) {
        for (const auto& component : window.components) {
            const auto& d = component.descriptor;
            if (d.offers(ActionKind::enter_text) && ctx.model.lexicon.count(d.payload_class) == 0) {
                fail("component '" + d.path_string() + "': unknown payload class '" +
                     d.payload_class + "'");
            }
        }
    }

    return std::move(ctx.model);
}

SutModel SutModel::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ModelError("cannot open model file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

}  // namespace mlmonkey
