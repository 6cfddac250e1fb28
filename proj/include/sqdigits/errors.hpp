#pragma once

#include <stdexcept>
#include <string>

namespace sqdigits {

// q-power or intermediate value left the 128-bit working range.
struct RangeError : std::range_error {
    using std::range_error::range_error;
};

// A configured size cap (table size, sieve bound, exact-evaluation box) was exceeded.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

// Input lies outside the mathematical domain of the operation (improper f, integral frequency, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Caller broke a documented precondition (spacing, window ordering, kernel parameters).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace sqdigits
