#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlmonkey/action.hpp"
#include "mlmonkey/behavior.hpp"
#include "mlmonkey/component.hpp"
#include "mlmonkey/coverage.hpp"
#include "mlmonkey/sut_state.hpp"

namespace mlmonkey {

// Raised for syntactically or semantically invalid model documents.
class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& message) : std::runtime_error(message) {}
};

// Raised when an action targets a component that is absent or disabled in the
// current state. Signals the GA repair path.
class InfeasibleActionError : public std::runtime_error {
public:
    explicit InfeasibleActionError(const std::string& message) : std::runtime_error(message) {}
};

struct ActionBinding {
    ActionKind kind = ActionKind::click;
    std::size_t procedure_index = 0;
};

struct ModelComponent {
    ComponentDescriptor descriptor;
    std::vector<ActionBinding> bindings;
};

struct ModelWindow {
    std::string name;
    std::vector<ModelComponent> components;
};

// Immutable, validated SUT model. Shared between Sut instances; safe to use
// from several threads once loaded.
struct SutModel {
    std::vector<ModelWindow> windows;
    std::vector<VariableDecl> variables;
    std::vector<Procedure> procedures;
    std::map<std::string, std::vector<std::string>> lexicon;
    std::size_t initial_window = 0;
    std::size_t guard_count = 0;

    std::map<std::string, std::size_t> window_index;
    std::map<std::string, std::size_t> variable_index;
    std::map<std::string, std::size_t> procedure_index;
    // (window, component path, kind) resolution for execution.
    std::map<std::string, std::pair<std::size_t, std::size_t>> component_location;

    static SutModel parse(const std::string& json_text);
    static SutModel load_file(const std::string& path);
};

// Deterministic instrumented GUI simulator. Single-threaded; run independent
// instances in parallel instead of sharing one.
class Sut {
public:
    explicit Sut(std::shared_ptr<const SutModel> model);

    const SutState& current_state() const { return state_; }
    std::vector<Action> available_actions() const { return actions_of(state_); }

    // Runs the guarded procedure bound to the action, updates coverage, and
    // returns the new state. Throws InfeasibleActionError if the target is
    // absent or disabled; std::logic_error if a required payload is missing.
    const SutState& execute(const Action& action);

    // Restores s0 and variable initial values. Coverage persists only in
    // cumulative mode.
    void reset(bool keep_coverage = false);

    const CoverageMap& coverage() const { return coverage_; }
    const SutModel& model() const { return *model_; }

private:
    Value eval_operand(const Operand& operand, const std::optional<std::string>& payload) const;
    void apply_effects(const std::vector<Effect>& effects, const std::optional<std::string>& payload);
    void rebuild_state();

    std::shared_ptr<const SutModel> model_;
    std::vector<Value> variables_;
    std::vector<bool> window_open_;
    std::map<std::string, bool> enabled_override_;
    bool exited_ = false;
    CoverageMap coverage_;
    SutState state_;
};

}  // namespace mlmonkey
