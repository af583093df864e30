#pragma once

#include <stdexcept>
#include <string>

namespace congmon {

// Error taxonomy mirrors the CLI exit codes:
//   parse_error         -> exit 2 (malformed input)
//   precondition_error  -> exit 3 (operation called outside its domain)
//   verification_error  -> exit 1 (an internal exact check did not hold;
//                                  never swallowed)
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw precondition_error(msg);
}

inline void verify(bool cond, const std::string& msg) {
    if (!cond) throw verification_error(msg);
}

} // namespace congmon
