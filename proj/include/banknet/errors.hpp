#pragma once

#include <stdexcept>
#include <string>

namespace banknet {

// Structurally unusable input: bad field value, malformed scenario, argument
// outside its documented domain.
class invalid_params : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The parameter point is structurally fine but a formula is undefined there
// (nonpositive denominator, empty feasible interval).
class degenerate_model : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Reading or writing a file failed.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace banknet
