#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mlmonkey/action.hpp"
#include "mlmonkey/component.hpp"

namespace mlmonkey {

struct WindowSnapshot {
    std::string name;
    // Document order equals depth-first order of the component tree.
    std::vector<ComponentDescriptor> components;
};

// Immutable snapshot of the visible GUI. Two states are equal iff their
// component trees match on paths and enabled flags.
struct SutState {
    std::string id;
    std::vector<WindowSnapshot> windows;
    bool is_exit = false;

    bool same_tree(const SutState& other) const;

    // All components of all windows, document order; each visited exactly once.
    std::vector<const ComponentDescriptor*> flatten() const;
    const ComponentDescriptor* find(const std::string& path_string) const;
    const WindowSnapshot* window_of(const ComponentDescriptor& component) const;
};

std::uint64_t state_tree_hash(const SutState& state);
std::string state_fingerprint(const SutState& state);

// The actions a state offers: enabled components only, document order, kinds in
// canonical order; one select action per option. Template payloads: "" for
// enter-text, the option string for select.
std::vector<Action> actions_of(const SutState& state);

}  // namespace mlmonkey
