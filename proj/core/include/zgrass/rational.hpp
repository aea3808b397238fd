#ifndef ZGRASS_RATIONAL_HPP
#define ZGRASS_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace zgrass {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact arbitrary-precision rational scalar.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Renders a rational as "p" or "p/q" with q > 0.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q". Throws zgrass::error on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace zgrass

#endif
