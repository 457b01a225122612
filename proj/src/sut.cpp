#include "mlmonkey/sut.hpp"

#include <cstdlib>

#include "mlmonkey/branch_distance.hpp"

namespace mlmonkey {

namespace {

long long parse_leading_int(const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    long long value = std::strtoll(begin, &end, 10);
    if (end == begin) {
        return 0;
    }
    return value;
}

}  // namespace

Sut::Sut(std::shared_ptr<const SutModel> model) : model_(std::move(model)) {
    coverage_ = CoverageMap(model_->guard_count, model_->procedures.size());
    reset(false);
}

void Sut::reset(bool keep_coverage) {
    variables_.clear();
    for (const auto& decl : model_->variables) {
        variables_.push_back(decl.init);
    }
    window_open_.assign(model_->windows.size(), false);
    window_open_[model_->initial_window] = true;
    enabled_override_.clear();
    exited_ = false;
    if (!keep_coverage) {
        coverage_.reset();
    }
    rebuild_state();
}

Value Sut::eval_operand(const Operand& operand, const std::optional<std::string>& payload) const {
    switch (operand.kind) {
        case Operand::Kind::variable:
            return variables_[operand.var_index];
        case Operand::Kind::literal:
            return operand.literal;
        case Operand::Kind::payload:
            return Value::of_text(payload.value_or(""));
        case Operand::Kind::payload_as_int:
            return Value::of_int(parse_leading_int(payload.value_or("")));
    }
    return Value{};
}

void Sut::apply_effects(const std::vector<Effect>& effects,
                        const std::optional<std::string>& payload) {
    for (const auto& effect : effects) {
        switch (effect.kind) {
            case Effect::Kind::set_var:
                variables_[effect.var_index] = eval_operand(effect.value, payload);
                break;
            case Effect::Kind::add_var:
                variables_[effect.var_index].i += effect.amount;
                break;
            case Effect::Kind::open_window:
                window_open_[effect.window_index] = true;
                break;
            case Effect::Kind::close_window:
                window_open_[effect.window_index] = false;
                break;
            case Effect::Kind::enable_component:
                enabled_override_[effect.component_path] = true;
                break;
            case Effect::Kind::disable_component:
                enabled_override_[effect.component_path] = false;
                break;
            case Effect::Kind::exit_sut:
                exited_ = true;
                return;  // nothing after exit runs
        }
    }
}

const SutState& Sut::execute(const Action& action) {
    const std::string path = action.target.path_string();
    const ComponentDescriptor* live = state_.find(path);
    if (live == nullptr) {
        throw InfeasibleActionError("no component at path '" + path + "' in current state");
    }
    if (!live->enabled) {
        throw InfeasibleActionError("component '" + path + "' is disabled");
    }
    if (!live->offers(action.kind)) {
        throw InfeasibleActionError("component '" + path + "' does not offer " +
                                    to_string(action.kind));
    }
    if (action.kind != ActionKind::click && !action.payload.has_value()) {
        throw std::logic_error(to_string(action.kind) + " on '" + path + "' requires a payload");
    }
    if (action.kind == ActionKind::click && action.payload.has_value()) {
        throw std::logic_error("click on '" + path + "' must not carry a payload");
    }

    auto location = model_->component_location.at(path);
    const ModelComponent& component = model_->windows[location.first].components[location.second];
    const Procedure* procedure = nullptr;
    for (const auto& binding : component.bindings) {
        if (binding.kind == action.kind) {
            procedure = &model_->procedures[binding.procedure_index];
            break;
        }
    }
    if (procedure == nullptr) {
        throw InfeasibleActionError("component '" + path + "' has no behavior for " +
                                    to_string(action.kind));
    }

    coverage_.record_procedure(procedure->index);
    for (const auto& branch : procedure->branches) {
        Value lhs = eval_operand(branch.guard.lhs, action.payload);
        Value rhs = eval_operand(branch.guard.rhs, action.payload);
        bool outcome;
        double to_true;
        double to_false;
        if (branch.guard.operand_type == ValueType::integer) {
            auto l = static_cast<double>(lhs.i);
            auto r = static_cast<double>(rhs.i);
            to_true = branch_distance(branch.guard.op, true, l, r);
            to_false = branch_distance(branch.guard.op, false, l, r);
        } else {
            to_true = branch_distance(branch.guard.op, true, lhs.s, rhs.s);
            to_false = branch_distance(branch.guard.op, false, lhs.s, rhs.s);
        }
        outcome = to_true == 0.0;
        coverage_.record_outcome(branch.guard_index, outcome, to_true, to_false);
        apply_effects(outcome ? branch.on_true : branch.on_false, action.payload);
        if (exited_) {
            break;
        }
    }

    rebuild_state();
    return state_;
}

void Sut::rebuild_state() {
    state_ = SutState{};
    if (exited_) {
        state_.is_exit = true;
        state_.id = "EXIT";
        return;
    }
    for (std::size_t w = 0; w < model_->windows.size(); ++w) {
        if (!window_open_[w]) {
            continue;
        }
        WindowSnapshot snapshot;
        snapshot.name = model_->windows[w].name;
        for (const auto& component : model_->windows[w].components) {
            ComponentDescriptor descriptor = component.descriptor;
            auto it = enabled_override_.find(descriptor.path_string());
            if (it != enabled_override_.end()) {
                descriptor.enabled = it->second;
            }
            snapshot.components.push_back(std::move(descriptor));
        }
        state_.windows.push_back(std::move(snapshot));
    }
    state_.id = state_fingerprint(state_);
}

}  // namespace mlmonkey
