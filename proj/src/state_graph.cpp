#include "mlmonkey/state_graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "mlmonkey/suite.hpp"

namespace mlmonkey {

StateId StateGraph::add_state(const SutState& state) {
    std::uint64_t hash = state_tree_hash(state);
    auto it = by_hash_.find(hash);
    if (it != by_hash_.end()) {
        for (StateId id : it->second) {
            if (states_[id].same_tree(state)) {
                return id;
            }
        }
    }
    StateId id = static_cast<StateId>(states_.size());
    states_.push_back(state);
    by_hash_[hash].push_back(id);
    if (state.is_exit) {
        terminals_.insert(id);
    }
    return id;
}

void StateGraph::add_transition(const SutState& from, const Action& action, const SutState* to) {
    StateId from_id = add_state(from);
    if (observer_) {
        observer_(from, action);
    }
    ActionSignature sig = signature_of(action);
    alphabet_.insert(sig);
    TransitionEntry& entry = transitions_[from_id][sig];
    if (to == nullptr) {
        if (entry.targets.empty()) {
            entry.points_to_unknown = true;
        }
        return;
    }
    StateId to_id = add_state(*to);
    entry.points_to_unknown = false;
    entry.targets.emplace(to_id, action);
    if (to->is_exit) {
        terminals_.insert(to_id);
    }
}

std::optional<StateId> StateGraph::find_state(const SutState& state) const {
    auto it = by_hash_.find(state_tree_hash(state));
    if (it == by_hash_.end()) {
        return std::nullopt;
    }
    for (StateId id : it->second) {
        if (states_[id].same_tree(state)) {
            return id;
        }
    }
    return std::nullopt;
}

bool StateGraph::feas(const Action& action, const SutState& state) {
    ActionSignature wanted = signature_of(action);
    for (const Action& offered : actions_of(state)) {
        if (signature_of(offered) == wanted) {
            return true;
        }
    }
    return false;
}

bool StateGraph::feas_at(const Action& action, StateId id) const {
    if (id == kUnknownState) {
        return true;
    }
    return feas(action, states_.at(id));
}

const StateGraph::TransitionEntry* StateGraph::entry_for(StateId from,
                                                         const ActionSignature& sig) const {
    auto state_it = transitions_.find(from);
    if (state_it == transitions_.end()) {
        return nullptr;
    }
    auto entry_it = state_it->second.find(sig);
    if (entry_it == state_it->second.end()) {
        return nullptr;
    }
    return &entry_it->second;
}

std::vector<Action> StateGraph::unexplored_actions(const SutState& state) const {
    std::vector<Action> unexplored;
    auto id = find_state(state);
    for (const Action& action : actions_of(state)) {
        if (!id) {
            unexplored.push_back(action);
            continue;
        }
        const TransitionEntry* entry = entry_for(*id, signature_of(action));
        if (entry == nullptr || entry->targets.empty()) {
            unexplored.push_back(action);
        }
    }
    return unexplored;
}

bool StateGraph::has_unexplored(StateId id) const {
    return !unexplored_actions(states_.at(id)).empty();
}

std::optional<std::vector<Action>> StateGraph::road_map(const SutState& from) const {
    if (!unexplored_actions(from).empty()) {
        return std::vector<Action>{};
    }
    auto start = find_state(from);
    if (!start) {
        return std::nullopt;
    }

    struct Arrival {
        StateId parent;
        Action action;
    };
    std::map<StateId, Arrival> parent;
    std::vector<StateId> frontier{*start};
    std::set<StateId> seen{*start};

    while (!frontier.empty()) {
        // Expand a full BFS level, states in ascending id, edges in action
        // order, targets in ascending id; first assignment wins.
        std::vector<StateId> next;
        for (StateId current : frontier) {
            for (const Action& action : actions_of(states_[current])) {
                const TransitionEntry* entry = entry_for(current, signature_of(action));
                if (entry == nullptr) {
                    continue;
                }
                for (const auto& [target, via] : entry->targets) {
                    if (seen.insert(target).second) {
                        parent.emplace(target, Arrival{current, via});
                        next.push_back(target);
                    }
                }
            }
        }
        std::sort(next.begin(), next.end());
        for (StateId candidate : next) {
            if (has_unexplored(candidate)) {
                std::vector<Action> path;
                StateId walk = candidate;
                while (walk != *start) {
                    const Arrival& arrival = parent.at(walk);
                    path.push_back(arrival.action);
                    walk = arrival.parent;
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

TestCase StateGraph::repair(const TestCase& test_case) const {
    TestCase repaired;
    repaired.name = test_case.name;
    StateId current = initial_state();
    for (const Action& action : test_case.actions) {
        if (!feas_at(action, current)) {
            continue;
        }
        repaired.actions.push_back(action);
        if (current == kUnknownState) {
            continue;
        }
        const TransitionEntry* entry = entry_for(current, signature_of(action));
        if (entry == nullptr || entry->targets.empty()) {
            current = kUnknownState;
        } else {
            current = entry->targets.begin()->first;  // smallest id, deterministic
        }
    }
    return repaired;
}

std::string StateGraph::to_dot() const {
    std::ostringstream out;
    out << "digraph state_graph {\n";
    for (std::size_t id = 0; id < states_.size(); ++id) {
        const SutState& state = states_[id];
        out << "  s" << id << " [label=\"s" << id;
        if (state.is_exit) {
            out << " (exit)";
        } else {
            for (const auto& window : state.windows) {
                out << "\\n" << window.name;
            }
        }
        out << "\"";
        if (terminals_.count(static_cast<StateId>(id)) != 0) {
            out << ", shape=doublecircle";
        }
        out << "];\n";
    }
    bool any_unknown = false;
    for (const auto& [from, edges] : transitions_) {
        for (const auto& [sig, entry] : edges) {
            std::string label = to_string(sig.kind) + " " + sig.target_path;
            if (!sig.select_option.empty()) {
                label += " '" + sig.select_option + "'";
            }
            for (const auto& [target, via] : entry.targets) {
                (void)via;
                out << "  s" << from << " -> s" << target << " [label=\"" << label << "\"];\n";
            }
            if (entry.points_to_unknown && entry.targets.empty()) {
                any_unknown = true;
                out << "  s" << from << " -> unknown [label=\"" << label << "\"];\n";
            }
        }
    }
    if (any_unknown) {
        out << "  unknown [label=\"s?\", shape=diamond];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace mlmonkey
