#include "portcanyon/errors.hpp"

namespace portcanyon {

const char* to_string(ErrorCategory category) noexcept {
    switch (category) {
        case ErrorCategory::domain: return "domain";
        case ErrorCategory::shape: return "shape";
        case ErrorCategory::lookup: return "lookup";
        case ErrorCategory::pairing: return "pairing";
        case ErrorCategory::insufficient: return "insufficient-data";
        case ErrorCategory::degenerate: return "degenerate-fit";
        case ErrorCategory::no_solution: return "no-solution";
        case ErrorCategory::parse: return "parse";
        case ErrorCategory::grid: return "grid";
        case ErrorCategory::config: return "config";
        case ErrorCategory::io: return "io";
    }
    return "unknown";
}

}  // namespace portcanyon
