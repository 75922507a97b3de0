#ifndef CPCOUNT_ERRORS_HPP
#define CPCOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cpcount {

// Malformed or out-of-contract input. CLI maps this to exit code 2.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

// Query outside a validity window of the underlying theorems. Exit code 3.
struct WindowError : std::runtime_error {
    explicit WindowError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two independent computation routes disagreed. Always a bug. Exit code 4.
struct InternalContradiction : std::runtime_error {
    explicit InternalContradiction(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cpcount

#endif
