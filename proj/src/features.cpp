#include "mlmonkey/features.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <set>

namespace mlmonkey {

bool is_enabled(const ComponentDescriptor& component) {
    return component.enabled;
}

bool is_preferred_type(const ComponentDescriptor& component) {
    return component.category == ComponentCategory::button_like ||
           component.category == ComponentCategory::text_input;
}

std::vector<const ComponentDescriptor*> focus_cycle_of(const WindowSnapshot& window) {
    std::vector<const ComponentDescriptor*> cycle;
    for (const auto& component : window.components) {
        if (component.focusable && component.focus_index) {
            cycle.push_back(&component);
        }
    }
    std::sort(cycle.begin(), cycle.end(),
              [](const ComponentDescriptor* a, const ComponentDescriptor* b) {
                  return *a->focus_index < *b->focus_index;
              });
    return cycle;
}

std::vector<const ComponentDescriptor*> focus_cycle_for(const SutState& state,
                                                        const ComponentDescriptor& from) {
    const ComponentDescriptor* live = state.find(from.path_string());
    if (live == nullptr) {
        return {};
    }
    const WindowSnapshot* window = state.window_of(*live);
    if (window == nullptr) {
        return {};
    }
    return focus_cycle_of(*window);
}

int focus_distance(const ComponentDescriptor& from, const ComponentDescriptor& to,
                   const std::vector<const ComponentDescriptor*>& focus_cycle) {
    if (from.path_equals(to)) {
        return 0;
    }
    auto position = std::find_if(focus_cycle.begin(), focus_cycle.end(),
                                 [&](const ComponentDescriptor* c) { return c->path_equals(from); });
    if (position == focus_cycle.end()) {
        return kMinFocusDistance;
    }
    const int n = static_cast<int>(focus_cycle.size());
    const int origin = static_cast<int>(position - focus_cycle.begin());
    auto at = [&](int index) {
        return focus_cycle[static_cast<std::size_t>(((index % n) + n) % n)];
    };

    std::set<const ComponentDescriptor*> visited;
    const ComponentDescriptor* after = *position;
    const ComponentDescriptor* before = *position;
    for (int dist = 1; dist <= -kMinFocusDistance; ++dist) {
        visited.insert(after);
        after = at(origin + dist);
        if (after->path_equals(to)) {
            return dist;
        }
        visited.insert(before);
        before = at(origin - dist);
        if (before->path_equals(to)) {
            return -dist;
        }
        if (visited.count(after) != 0 && visited.count(before) != 0) {
            break;
        }
    }
    return kMinFocusDistance;
}

int path_distance(const ComponentDescriptor& from, const ComponentDescriptor& to) {
    const auto& a = from.path;
    const auto& b = to.path;
    std::size_t min_length = std::min(a.size(), b.size());
    std::size_t max_length = std::max(a.size(), b.size());
    std::size_t common = 0;
    while (common < min_length && a[common] == b[common]) {
        common++;
    }
    return static_cast<int>(max_length - common);
}

double point_distance(const ComponentDescriptor& from, const ComponentDescriptor& to) {
    double dx = from.bounds.x - to.bounds.x;
    double dy = from.bounds.y - to.bounds.y;
    return std::sqrt(dx * dx + dy * dy);
}

FeatureVector features_for(const ComponentDescriptor& previous_target,
                           const ComponentDescriptor& possible_target, const SutState& state) {
    FeatureVector features;
    features.enabled = is_enabled(possible_target);
    features.preferred_type = is_preferred_type(possible_target);
    features.focus_distance =
        focus_distance(previous_target, possible_target, focus_cycle_for(state, previous_target));
    features.path_distance = path_distance(previous_target, possible_target);
    features.point_distance = point_distance(previous_target, possible_target);
    return features;
}

std::string format_double(double value) {
    char buffer[32];
    auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    std::string text(buffer, result.ptr);
    if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
        text.find("inf") == std::string::npos && text.find("nan") == std::string::npos) {
        text += ".0";
    }
    return text;
}

void FeatureExtractor::ensure_header() {
    if (!header_written_) {
        out_ << kRawCsvHeader << '\n';
        header_written_ = true;
    }
}

void FeatureExtractor::extract(const std::optional<Action>& previous, const SutState& from_state,
                               const Action& current) {
    ensure_header();
    if (!previous) {
        return;
    }
    const ComponentDescriptor& previous_target = previous->target;
    const ComponentDescriptor& correct_target = current.target;
    for (const ComponentDescriptor* possible : from_state.flatten()) {
        FeatureVector features = features_for(previous_target, *possible, from_state);
        bool label = possible->path_equals(correct_target);

        std::string identifier = possible->describe();
        identifier.erase(std::remove(identifier.begin(), identifier.end(), ','),
                         identifier.end());

        out_ << identifier << ',' << (features.enabled ? "true" : "false") << ','
             << (features.preferred_type ? "true" : "false") << ',' << features.focus_distance
             << ',' << features.path_distance << ',' << format_double(features.point_distance)
             << ',' << (label ? "true" : "false") << '\n';
        rows_written_++;
        if (label) {
            true_rows_++;
        }
    }
}

}  // namespace mlmonkey
