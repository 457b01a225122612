#include "mlmonkey/action.hpp"

namespace mlmonkey {

std::string Action::describe() const {
    switch (kind) {
        case ActionKind::click:
            return "Click on " + target.describe();
        case ActionKind::enter_text:
            return "Entering text '" + payload.value_or("") + "' into " + target.describe();
        case ActionKind::select:
            return "Select '" + payload.value_or("") + "' on " + target.describe();
    }
    return {};
}

ActionSignature signature_of(const Action& action) {
    ActionSignature sig;
    sig.kind = action.kind;
    sig.target_path = action.target.path_string();
    if (action.kind == ActionKind::select) {
        sig.select_option = action.payload.value_or("");
    }
    return sig;
}

}  // namespace mlmonkey
