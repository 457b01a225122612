#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mlmonkey/action.hpp"
#include "mlmonkey/sut_state.hpp"

namespace mlmonkey {

using StateId = int;
inline constexpr StateId kUnknownState = -1;

struct TestCase;

// The NFA (S, Sigma, Delta, s0, T) learned from executed actions. Transitions
// key on action signatures; each concrete target remembers the action that
// produced it so road maps stay replayable. The distinguished unknown state s?
// is the implicit target of every unexecuted action and has no outgoing
// transitions. Single writer; read-only queries are safe between mutations.
class StateGraph {
public:
    // Invoked on every add_transition with the origin state and the executed
    // action; carries the feature-extraction hook.
    using ExtractionObserver = std::function<void(const SutState&, const Action&)>;

    // Idempotent by component-tree identity; the first state added becomes s0.
    StateId add_state(const SutState& state);

    // to == nullptr records the transition as pointing at s?; a later concrete
    // target replaces that entry. Multiple concrete targets are all retained.
    void add_transition(const SutState& from, const Action& action, const SutState* to);

    std::optional<StateId> find_state(const SutState& state) const;
    const SutState& state(StateId id) const { return states_.at(id); }
    StateId initial_state() const { return states_.empty() ? kUnknownState : 0; }
    std::size_t state_count() const { return states_.size(); }
    const std::set<StateId>& terminals() const { return terminals_; }

    // True iff the action's signature is offered by the state. Everything is
    // potentially feasible at s?.
    static bool feas(const Action& action, const SutState& state);
    bool feas_at(const Action& action, StateId id) const;

    // Actions of the state with no recorded concrete transition, in
    // available-action order. A state the graph has never seen has every
    // action unexplored.
    std::vector<Action> unexplored_actions(const SutState& state) const;

    bool has_unexplored(StateId id) const;

    // Shortest action path (BFS over known concrete transitions only) to the
    // nearest state with at least one unexplored action. Ties break on the
    // smallest state id, then action order. Empty path if `from` itself
    // qualifies; nullopt if nothing qualifying is reachable.
    std::optional<std::vector<Action>> road_map(const SutState& from) const;

    // Walks the case through the graph from s0 and drops every action that is
    // infeasible at its position. Never executes the SUT. Idempotent.
    TestCase repair(const TestCase& test_case) const;

    void set_extraction_observer(ExtractionObserver observer) {
        observer_ = std::move(observer);
    }

    // DOT-compatible dump for debugging.
    std::string to_dot() const;

private:
    struct TransitionEntry {
        bool points_to_unknown = false;
        // target state -> first action that reached it (payload preserved)
        std::map<StateId, Action> targets;
    };

    const TransitionEntry* entry_for(StateId from, const ActionSignature& sig) const;

    std::vector<SutState> states_;
    std::map<std::uint64_t, std::vector<StateId>> by_hash_;
    std::map<StateId, std::map<ActionSignature, TransitionEntry>> transitions_;
    std::set<StateId> terminals_;
    std::set<ActionSignature> alphabet_;
    ExtractionObserver observer_;
};

}  // namespace mlmonkey
