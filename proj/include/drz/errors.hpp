#pragma once

#include <stdexcept>
#include <string>

namespace drz {

// Malformed or mismatched inputs (wrong ring, bad JSON, bad dimensions).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// The requested strategy cannot handle this ring; callers may pick another.
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured cap (cardinality, search bound) was exceeded.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A stated precondition failed; the message names the condition.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal property that must hold was observed to fail.  Never caught
// and recovered; a throw here is a defect in the library, not in the input.
struct defect_error : std::logic_error {
    explicit defect_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace drz
