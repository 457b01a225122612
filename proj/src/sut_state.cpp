#include "mlmonkey/sut_state.hpp"

#include <cstdio>

namespace mlmonkey {

namespace {

void fnv_mix(std::uint64_t& h, const std::string& text) {
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
}

void fnv_mix(std::uint64_t& h, bool flag) {
    h ^= flag ? 0x01u : 0x02u;
    h *= 0x100000001b3ULL;
}

}  // namespace

bool SutState::same_tree(const SutState& other) const {
    if (is_exit != other.is_exit || windows.size() != other.windows.size()) {
        return false;
    }
    for (std::size_t w = 0; w < windows.size(); ++w) {
        const auto& a = windows[w];
        const auto& b = other.windows[w];
        if (a.name != b.name || a.components.size() != b.components.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.components.size(); ++i) {
            if (a.components[i].path != b.components[i].path ||
                a.components[i].enabled != b.components[i].enabled) {
                return false;
            }
        }
    }
    return true;
}

std::vector<const ComponentDescriptor*> SutState::flatten() const {
    std::vector<const ComponentDescriptor*> all;
    for (const auto& window : windows) {
        for (const auto& component : window.components) {
            all.push_back(&component);
        }
    }
    return all;
}

const ComponentDescriptor* SutState::find(const std::string& path_string) const {
    for (const auto& window : windows) {
        for (const auto& component : window.components) {
            if (component.path_string() == path_string) {
                return &component;
            }
        }
    }
    return nullptr;
}

const WindowSnapshot* SutState::window_of(const ComponentDescriptor& component) const {
    if (component.path.empty()) {
        return nullptr;
    }
    for (const auto& window : windows) {
        if (!window.components.empty() &&
            window.components.front().path.front() == component.path.front()) {
            return &window;
        }
    }
    return nullptr;
}

std::uint64_t state_tree_hash(const SutState& state) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    fnv_mix(h, state.is_exit);
    for (const auto& window : state.windows) {
        fnv_mix(h, window.name);
        for (const auto& component : window.components) {
            for (const auto& element : component.path) {
                fnv_mix(h, element);
            }
            fnv_mix(h, component.enabled);
        }
    }
    return h;
}

std::string state_fingerprint(const SutState& state) {
    if (state.is_exit) {
        return "EXIT";
    }
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx",
                  static_cast<unsigned long long>(state_tree_hash(state)));
    return buffer;
}

std::vector<Action> actions_of(const SutState& state) {
    std::vector<Action> actions;
    if (state.is_exit) {
        return actions;
    }
    for (const auto& window : state.windows) {
        for (const auto& component : window.components) {
            if (!component.enabled) {
                continue;
            }
            for (ActionKind kind : {ActionKind::click, ActionKind::enter_text, ActionKind::select}) {
                if (!component.offers(kind)) {
                    continue;
                }
                if (kind == ActionKind::select) {
                    for (const auto& option : component.choices) {
                        actions.push_back(Action{kind, component, option});
                    }
                } else if (kind == ActionKind::enter_text) {
                    actions.push_back(Action{kind, component, std::string{}});
                } else {
                    actions.push_back(Action{kind, component, std::nullopt});
                }
            }
        }
    }
    return actions;
}

}  // namespace mlmonkey
