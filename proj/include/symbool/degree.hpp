#pragma once

#include <compare>
#include <climits>
#include <string>

#include "symbool/errors.hpp"

namespace symbool {

// Algebraic degree of a Boolean function. The zero function carries a
// distinct marker that orders below every integer degree.
class Degree {
public:
    constexpr Degree() = default;  // zero function
    constexpr explicit Degree(int d) : value_(d) {}

    static constexpr Degree zero_function() { return Degree{}; }

    constexpr bool is_zero_function() const { return value_ == kZero; }

    int value() const
    {
        if (is_zero_function()) throw DomainError("degree of the zero function has no integer value");
        return value_;
    }

    // Integer degree, or `fallback` for the zero function.
    constexpr int value_or(int fallback) const { return is_zero_function() ? fallback : value_; }

    constexpr auto operator<=>(const Degree&) const = default;
    constexpr bool operator==(const Degree&) const = default;

    constexpr bool operator<=(int d) const { return value_ <= d; }
    constexpr bool operator==(int d) const { return value_ == d; }

    std::string to_string() const { return is_zero_function() ? std::string("zero") : std::to_string(value_); }

private:
    static constexpr int kZero = INT_MIN;
    int value_ = kZero;
};

}  // namespace symbool
