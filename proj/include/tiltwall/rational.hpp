#ifndef TILTWALL_RATIONAL_HPP
#define TILTWALL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tiltwall {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical "p/q" (or "p" when q = 1); sign on the numerator.
std::string to_text(const Rat& x);

/// Parses "p", "p/q" or a decimal-free signed integer pair. Throws ParseError.
Rat parse_rational(std::string_view text);

bool is_integer(const Rat& x);

/// Largest integer <= x.
Int floor_int(const Rat& x);

/// Smallest integer >= x.
Int ceil_int(const Rat& x);

inline Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

} // namespace tiltwall

#endif
