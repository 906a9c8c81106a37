#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace chromsym {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Renders a rational as "num" or "num/den" (denominator omitted when 1).
inline std::string rational_to_string(const Rational& q) {
    return q.str();
}

/// Parses "num" or "num/den"; throws std::invalid_argument on malformed input.
inline Rational rational_from_string(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

/// Resource-cap violations (edge/vertex/search caps), distinct from domain errors.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace chromsym
