#include "mlmonkey/component.hpp"

#include <algorithm>
#include <sstream>

namespace mlmonkey {

std::string to_string(ComponentCategory category) {
    switch (category) {
        case ComponentCategory::button_like: return "button-like";
        case ComponentCategory::text_input: return "text-input";
        case ComponentCategory::label: return "label";
        case ComponentCategory::container: return "container";
        case ComponentCategory::tab: return "tab";
        case ComponentCategory::table_cell: return "table-cell";
        case ComponentCategory::other: return "other";
    }
    return "other";
}

std::optional<ComponentCategory> category_from_string(const std::string& text) {
    if (text == "button-like") return ComponentCategory::button_like;
    if (text == "text-input") return ComponentCategory::text_input;
    if (text == "label") return ComponentCategory::label;
    if (text == "container") return ComponentCategory::container;
    if (text == "tab") return ComponentCategory::tab;
    if (text == "table-cell") return ComponentCategory::table_cell;
    if (text == "other") return ComponentCategory::other;
    return std::nullopt;
}

std::string to_string(ActionKind kind) {
    switch (kind) {
        case ActionKind::click: return "click";
        case ActionKind::enter_text: return "enter-text";
        case ActionKind::select: return "select";
    }
    return "click";
}

std::optional<ActionKind> action_kind_from_string(const std::string& text) {
    if (text == "click") return ActionKind::click;
    if (text == "enter-text") return ActionKind::enter_text;
    if (text == "select") return ActionKind::select;
    return std::nullopt;
}

std::string ComponentDescriptor::path_string() const {
    return join_path(path);
}

bool ComponentDescriptor::offers(ActionKind kind) const {
    return std::find(action_kinds.begin(), action_kinds.end(), kind) != action_kinds.end();
}

std::string ComponentDescriptor::describe() const {
    std::string word;
    switch (category) {
        case ComponentCategory::button_like: word = "Button"; break;
        case ComponentCategory::text_input: word = "TextField"; break;
        case ComponentCategory::label: word = "Label"; break;
        case ComponentCategory::container: word = "Panel"; break;
        case ComponentCategory::tab: word = "Tab"; break;
        case ComponentCategory::table_cell: word = "TableCell"; break;
        case ComponentCategory::other:
            word = offers(ActionKind::select) ? "ComboBox" : "Component";
            break;
    }
    return word + " [" + name() + "]";
}

std::string join_path(const std::vector<std::string>& path) {
    std::string joined;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0) {
            joined += '/';
        }
        joined += path[i];
    }
    return joined;
}

std::vector<std::string> split_path(const std::string& joined) {
    std::vector<std::string> path;
    std::stringstream ss(joined);
    std::string element;
    while (std::getline(ss, element, '/')) {
        path.push_back(element);
    }
    return path;
}

}  // namespace mlmonkey
