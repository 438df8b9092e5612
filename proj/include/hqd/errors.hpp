#pragma once

#include <stdexcept>
#include <string>

namespace hqd {

// A recoloring square that does not satisfy the cycle-combination
// preconditions (wrong colors, or the monochromatic pairs do not lie in
// distinct cycles).
struct invalid_recolor : std::runtime_error {
    explicit invalid_recolor(const std::string& what) : std::runtime_error(what) {}
};

// A construction has no implemented route for the requested size, or its
// output failed self-verification. Raised instead of returning a silently
// wrong answer.
struct unsupported_instance : std::runtime_error {
    explicit unsupported_instance(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hqd
