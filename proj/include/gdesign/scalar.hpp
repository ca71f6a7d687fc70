#ifndef GDESIGN_SCALAR_HPP
#define GDESIGN_SCALAR_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace gdesign {

using Rational = boost::rational<std::int64_t>;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

/// Parses "p/q" or "p". Throws Error(ParseError).
Rational parse_rational(const std::string& text);

double to_double(const Rational& r);

/// A real number that may also be known exactly. Values produced by exact
/// constructors (cube characters, scheme idempotents) carry the rational;
/// values from a floating eigensolve carry only the double.
struct Scalar {
    std::optional<Rational> exact;
    double value = 0.0;

    Scalar() = default;
    explicit Scalar(double v) : value(v) {}
    explicit Scalar(const Rational& r) : exact(r), value(to_double(r)) {}

    bool is_exact() const { return exact.has_value(); }

    /// Exact fraction string on the exact path, 12 significant digits otherwise.
    std::string to_string() const;
};

Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator/(const Scalar& a, const Scalar& b);
Scalar abs(const Scalar& a);

/// Equality used across the library: exact when both sides are exact,
/// absolute tolerance otherwise.
bool approx_equal(const Scalar& a, const Scalar& b, double tolerance);

/// 12 significant digits, the serialization used for floating values.
std::string format_decimal(double v);

}  // namespace gdesign

#endif
