#pragma once

#include <stdexcept>
#include <string>

namespace regorb {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
    std::size_t line;
};

// MeatAxe gave up without a certificate either way.
struct Undecided : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace regorb
