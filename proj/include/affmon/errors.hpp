#pragma once

#include <stdexcept>
#include <string>

namespace affmon {

// Violation of a mathematical precondition (wrong rank, non-saturated parent, ...).
// The CLI maps these to exit code 1 with a stable error code string.
class domain_error : public std::runtime_error {
public:
    domain_error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Malformed input file or arguments; CLI exit code 2.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

} // namespace affmon
