#pragma once

#include <stdexcept>
#include <string>

namespace gwcubic {

// Input-level failures. The CLI maps all of these to exit code 2.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidSequence : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct BadCacheVersion : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct BadCacheLine : InvalidInput {
    int line;
    BadCacheLine(int line_no, const std::string& what)
        : InvalidInput("cache line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

struct NonSmoothCubic : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct DegeneratePoint : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Always-on invariant check (fires in release builds too). Used where a
// violation means the recursion itself is wrong, not that the input was bad.
[[noreturn]] void internal_failure(const char* what);

inline void internal_check(bool ok, const char* what) {
    if (!ok) internal_failure(what);
}

}  // namespace gwcubic
