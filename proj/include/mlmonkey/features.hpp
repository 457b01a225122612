#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mlmonkey/action.hpp"
#include "mlmonkey/component.hpp"
#include "mlmonkey/sut_state.hpp"

namespace mlmonkey {

inline constexpr int kMinFocusDistance = -10;

// The five features of a possible target component, relative to the
// previously acted-on component.
struct FeatureVector {
    bool enabled = true;
    bool preferred_type = false;
    int focus_distance = kMinFocusDistance;
    int path_distance = 0;
    double point_distance = 0.0;
};

bool is_enabled(const ComponentDescriptor& component);
bool is_preferred_type(const ComponentDescriptor& component);

// Signed distance along the window's focus cycle: simultaneous forward (+) and
// backward (-) search, forward preferred on ties, capped at |kMinFocusDistance|
// steps. Returns kMinFocusDistance when the target is not reachable or `from`
// has no cycle.
int focus_distance(const ComponentDescriptor& from, const ComponentDescriptor& to,
                   const std::vector<const ComponentDescriptor*>& focus_cycle);

// max(len_a, len_b) minus the common prefix length; 0 iff the paths are equal.
int path_distance(const ComponentDescriptor& from, const ComponentDescriptor& to);

// Euclidean distance between the upper-left corners of the bounds.
double point_distance(const ComponentDescriptor& from, const ComponentDescriptor& to);

// Focusable components of the window ordered by focus_index.
std::vector<const ComponentDescriptor*> focus_cycle_of(const WindowSnapshot& window);
// The cycle of the window that holds `from` (looked up by path); empty when
// the component is not part of the state.
std::vector<const ComponentDescriptor*> focus_cycle_for(const SutState& state,
                                                        const ComponentDescriptor& from);

FeatureVector features_for(const ComponentDescriptor& previous_target,
                           const ComponentDescriptor& possible_target, const SutState& state);

// Shortest round-trip decimal form with a trailing ".0" for integral values,
// e.g. 44.0 and 107.64757312638311.
std::string format_double(double value);

inline constexpr char kRawCsvHeader[] =
    "component,enabled,preferredType,focusDistance,pathDistance,pointDistance,label";

// Streams labeled raw CSV rows while the state graph is being built from
// existing tests. Wire on_action as the graph's extraction observer. The
// header is written once, before any data row; a call without a previous
// action writes only the header (the first action of a sequence is skipped).
class FeatureExtractor {
public:
    explicit FeatureExtractor(std::ostream& out) : out_(out) {}

    void extract(const std::optional<Action>& previous, const SutState& from_state,
                 const Action& current);

    void on_action(const SutState& from_state, const Action& current) {
        extract(previous_, from_state, current);
        previous_ = current;
    }

    // Restarts the action sequence. seed_previous, when set, acts as the
    // previous action for the next on_action call, so that call emits rows
    // instead of being skipped.
    void begin_sequence(std::optional<Action> seed_previous) {
        previous_ = std::move(seed_previous);
    }

    std::size_t rows_written() const { return rows_written_; }
    std::size_t true_rows() const { return true_rows_; }

private:
    void ensure_header();

    std::ostream& out_;
    std::optional<Action> previous_;
    bool header_written_ = false;
    std::size_t rows_written_ = 0;
    std::size_t true_rows_ = 0;
};

}  // namespace mlmonkey
