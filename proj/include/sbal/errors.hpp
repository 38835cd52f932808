#pragma once

#include <stdexcept>
#include <string>

namespace sbal {

// Problems with input data or files (missing file, malformed line, bad
// payload kind).  The CLI maps these to exit code 2.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Analysis-domain refusals (oracle size cap, strict mode with nothing to
// analyze).  The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace sbal
