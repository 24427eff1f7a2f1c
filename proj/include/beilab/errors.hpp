#pragma once

#include <stdexcept>
#include <string>

namespace beilab {

// Bad user input (malformed file, out-of-range vertex, loop, ...). CLI exit 2.
struct input_error : std::runtime_error {
    int line = 0;  // 1-based line in the source file, 0 when not file-based
    explicit input_error(const std::string& msg, int line_ = 0)
        : std::runtime_error(msg), line(line_) {}
};

// Input is valid but beyond the supported size envelope. CLI exit 3.
struct unsupported_size_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cross-checked identity failed. Raised only by `both`-mode operations that
// compare an algebraic result with its combinatorial counterpart. CLI exit 1.
struct theorem_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace beilab
