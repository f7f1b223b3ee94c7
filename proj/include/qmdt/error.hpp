#pragma once

#include <stdexcept>
#include <string>

namespace qmdt {

// Thrown by every validating constructor and operation. `code` is a stable
// identifier (e.g. "StepViolatesI1Bound") surfaced verbatim by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

    // Enumeration limits map to a distinct exit status in the CLI.
    bool isBoundExceeded() const noexcept { return code_ == "BoundExceeded"; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

} // namespace qmdt
