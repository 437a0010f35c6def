// Exact arbitrary-precision integers and rationals used throughout.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qsymcat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when an operation's stated precondition is violated
/// (window mismatch, invalid factorization input, out-of-range subset, ...).
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when text input cannot be parsed.
struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Int factorial(int k);
Int binomial(int n, int k);

inline std::string to_string(const Int& v) { return v.str(); }
inline std::string to_string(const Rat& v) { return v.str(); }

}  // namespace qsymcat
