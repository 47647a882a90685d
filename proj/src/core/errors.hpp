#pragma once

#include <stdexcept>
#include <string>

namespace graphmatch {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed edge-list text (bad header, bad line, self-loop, duplicate, range).
struct parse_error : error {
    using error::error;
};

// Parameter or precondition violation (family ranges, bad vertex labels, ...).
struct domain_error : error {
    using error::error;
};

// A closed form was requested outside its girth hypothesis without force.
struct girth_error : error {
    using error::error;
};

// No printed closed form exists for the requested (family, k) or k value.
struct no_formula_error : error {
    using error::error;
};

// Exactness violation: a division that must be exact was not. Indicates a bug.
struct internal_error : error {
    using error::error;
};

} // namespace graphmatch
