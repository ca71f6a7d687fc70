#include "gdesign/scalar.hpp"

#include "gdesign/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace gdesign {

std::string to_string(const Rational& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole)
{
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw Error(ErrorCode::ParseError, "not a fraction: '" + whole + "'");
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_int(text, text));
    auto num = parse_int(std::string_view(text).substr(0, slash), text);
    auto den = parse_int(std::string_view(text).substr(slash + 1), text);
    if (den == 0)
        throw Error(ErrorCode::ParseError, "zero denominator: '" + text + "'");
    return Rational(num, den);
}

double to_double(const Rational& r)
{
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string format_decimal(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    std::string s(buf);
    if (s == "-0")
        s = "0";
    return s;
}

std::string Scalar::to_string() const
{
    if (exact)
        return gdesign::to_string(*exact);
    return format_decimal(value);
}

namespace {

template <typename ExactOp, typename RealOp>
Scalar combine(const Scalar& a, const Scalar& b, ExactOp exact_op, RealOp real_op)
{
    if (a.exact && b.exact)
        return Scalar(exact_op(*a.exact, *b.exact));
    return Scalar(real_op(a.value, b.value));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b)
{
    return combine(a, b, std::plus<Rational>{}, std::plus<double>{});
}

Scalar operator-(const Scalar& a, const Scalar& b)
{
    return combine(a, b, std::minus<Rational>{}, std::minus<double>{});
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    return combine(a, b, std::multiplies<Rational>{}, std::multiplies<double>{});
}

Scalar operator/(const Scalar& a, const Scalar& b)
{
    return combine(a, b, std::divides<Rational>{}, std::divides<double>{});
}

Scalar abs(const Scalar& a)
{
    if (a.exact)
        return Scalar(boost::abs(*a.exact));
    return Scalar(std::fabs(a.value));
}

bool approx_equal(const Scalar& a, const Scalar& b, double tolerance)
{
    if (a.exact && b.exact)
        return *a.exact == *b.exact;
    return std::fabs(a.value - b.value) < tolerance;
}

}  // namespace gdesign
