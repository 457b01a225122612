#pragma once

#include <compare>
#include <optional>
#include <string>

#include "mlmonkey/component.hpp"

namespace mlmonkey {

// A concrete GUI action. enter-text and select carry a payload; click does not.
struct Action {
    ActionKind kind = ActionKind::click;
    ComponentDescriptor target;
    std::optional<std::string> payload;

    // TAP-style line, e.g. "Entering text 'Max' into TextField [Username]".
    std::string describe() const;
};

// Payload-free identity used by the state graph. Text payloads are free
// variables of an enter-text action; select options are finite and distinct,
// so the chosen option is part of the signature.
struct ActionSignature {
    ActionKind kind = ActionKind::click;
    std::string target_path;
    std::string select_option;

    auto operator<=>(const ActionSignature&) const = default;
};

ActionSignature signature_of(const Action& action);

}  // namespace mlmonkey
