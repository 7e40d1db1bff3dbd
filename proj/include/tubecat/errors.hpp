#pragma once

#include <stdexcept>
#include <string>

namespace tubecat {

// Exit-code families used by the CLI: 1 invalid input, 2 not an SMC, 3 internal.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotAnSmc : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct Unsupported : std::runtime_error {
    std::string case_label;
    Unsupported(std::string label, const std::string& what)
        : std::runtime_error(what + " [" + label + "]"), case_label(std::move(label)) {}
};

}  // namespace tubecat
