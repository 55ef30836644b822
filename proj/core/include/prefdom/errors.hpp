#pragma once

#include <stdexcept>
#include <string>

namespace prefdom {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input: orders, domain files, law files, SOC data.
class parse_error : public error {
public:
    using error::error;
};

// An operation was called on arguments that violate its contract.
class precondition_error : public error {
public:
    using error::error;
};

// The request is well-formed but outside the implemented caps
// (e.g. exhaustive search beyond the supported number of alternatives).
class capability_error : public error {
public:
    using error::error;
};

// Structurally valid input whose content is inconsistent
// (e.g. a SOC file whose census does not sum to the declared voter count).
class data_error : public error {
public:
    using error::error;
};

}  // namespace prefdom
