#pragma once

#include <stdexcept>
#include <string>

namespace mtorus {

// Bad user input: malformed files, precondition violations, unsupported requests.
// The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A shipped internal assertion failed (e.g. the two page-table routes disagree).
// Indicates a bug in this library, not in the input. CLI exit code 3.
class integrity_error : public std::logic_error {
public:
    explicit integrity_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void integrity_check(bool ok, const std::string& msg) {
    if (!ok) throw integrity_error(msg);
}

}  // namespace mtorus
