#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace majcol {

/// Exact rational number over 64-bit integers, always kept in lowest terms
/// with a positive denominator. Every operation computes in 128 bits and
/// throws std::overflow_error if the reduced result does not fit.
class Rational {
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT(implicit)
    Rational(std::int64_t numerator, std::int64_t denominator);

    [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }

    [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }
    [[nodiscard]] std::int64_t floor() const noexcept;
    [[nodiscard]] std::int64_t ceil() const noexcept;
    [[nodiscard]] Rational abs() const noexcept { return num_ < 0 ? -*this : *this; }
    [[nodiscard]] int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

    /// "p/q", or "p" when the value is an integer.
    [[nodiscard]] std::string to_string() const;
    /// Parses "p/q" or "p".
    static Rational parse(std::string_view text);

    Rational operator-() const noexcept;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace majcol
