#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mlmonkey {

enum class ComponentCategory {
    button_like,
    text_input,
    label,
    container,
    tab,
    table_cell,
    other,
};

std::string to_string(ComponentCategory category);
std::optional<ComponentCategory> category_from_string(const std::string& text);

// Canonical kind order: click < enter-text < select.
enum class ActionKind {
    click,
    enter_text,
    select,
};

std::string to_string(ActionKind kind);
std::optional<ActionKind> action_kind_from_string(const std::string& text);

struct Rect {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;
};

// Toolkit-independent description of one GUI component. This is the unit the
// prediction model ranks, and what the feature extractor compares.
struct ComponentDescriptor {
    // Typed path from the window root to the component; never empty, unique
    // within a state.
    std::vector<std::string> path;
    ComponentCategory category = ComponentCategory::other;
    bool enabled = true;
    bool focusable = false;
    // Position within the window's focus cycle; present iff focusable.
    std::optional<int> focus_index;
    Rect bounds;

    // Affordances: which action kinds the component offers, the fixed option
    // list for select, and the lexicon section used to invent text payloads.
    std::vector<ActionKind> action_kinds;
    std::vector<std::string> choices;
    std::string payload_class;

    std::string name() const { return path.empty() ? std::string{} : path.back(); }
    std::string path_string() const;
    bool path_equals(const ComponentDescriptor& other) const { return path == other.path; }
    bool offers(ActionKind kind) const;

    // Human-readable identity, e.g. "Button [Login]" or "TextField [Username]".
    std::string describe() const;
};

std::string join_path(const std::vector<std::string>& path);
std::vector<std::string> split_path(const std::string& joined);

}  // namespace mlmonkey
