#include "pyramid/resolution.hpp"

#include <sstream>

namespace pyramid {

namespace {

std::string gens_to_string(const std::vector<ShapeGen>& gens) {
    std::ostringstream os;
    os << "{";
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (k) os << ", ";
        os << "(" << vertex_to_string(gens[k].vertex) << ")@" << gens[k].degree;
    }
    os << "}";
    return os.str();
}

const char* terminal_name(TerminalKind k) {
    switch (k) {
        case TerminalKind::Zero: return "zero";
        case TerminalKind::Semisimple: return "semisimple";
        default: return "truncated";
    }
}

}  // namespace

ShapeDiff compare(const ResolutionShape& actual, const ResolutionShape& predicted) {
    ShapeDiff diff;
    const std::size_t steps = std::max(actual.steps.size(), predicted.steps.size());
    for (std::size_t l = 0; l < steps; ++l) {
        const std::vector<ShapeGen> empty;
        const auto& a = l < actual.steps.size() ? actual.steps[l] : empty;
        const auto& p = l < predicted.steps.size() ? predicted.steps[l] : empty;
        if (a != p) {
            diff.equal = false;
            diff.description = "step " + std::to_string(l) + ": computed " + gens_to_string(a) +
                               " vs predicted " + gens_to_string(p);
            return diff;
        }
    }
    if (actual.terminal_kind != predicted.terminal_kind) {
        diff.equal = false;
        diff.description = std::string("terminal kind: computed ") +
                           terminal_name(actual.terminal_kind) + " vs predicted " +
                           terminal_name(predicted.terminal_kind);
        return diff;
    }
    if (actual.terminal != predicted.terminal) {
        diff.equal = false;
        diff.description = "terminal: computed " + gens_to_string(actual.terminal) +
                           " vs predicted " + gens_to_string(predicted.terminal);
    }
    return diff;
}

}  // namespace pyramid
