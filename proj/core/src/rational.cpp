#include "majcol/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace majcol {

namespace {

__extension__ typedef __int128 wide_t;

wide_t wide_gcd(wide_t a, wide_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        wide_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(wide_t value) {
    return value >= std::numeric_limits<std::int64_t>::min() &&
           value <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

// Reduces numerator/denominator and stores it in `out`.
static void assign_reduced(wide_t numerator, wide_t denominator, std::int64_t& num, std::int64_t& den) {
    if (denominator == 0) throw std::domain_error("rational: zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    wide_t g = wide_gcd(numerator, denominator);
    if (g > 1) {
        numerator /= g;
        denominator /= g;
    }
    if (!fits(numerator) || !fits(denominator)) throw std::overflow_error("rational: 64-bit overflow");
    num = static_cast<std::int64_t>(numerator);
    den = static_cast<std::int64_t>(denominator);
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    assign_reduced(numerator, denominator, num_, den_);
}

std::int64_t Rational::floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view part) {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
            throw std::invalid_argument("rational: cannot parse '" + std::string(part) + "'");
        }
        return value;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::operator-() const noexcept {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    wide_t g = std::gcd(den_, rhs.den_);
    wide_t lhs_scale = rhs.den_ / g;
    wide_t rhs_scale = den_ / g;
    assign_reduced(wide_t(num_) * lhs_scale + wide_t(rhs.num_) * rhs_scale, wide_t(den_) * lhs_scale, num_, den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    assign_reduced(wide_t(num_) * rhs.num_, wide_t(den_) * rhs.den_, num_, den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("rational: division by zero");
    assign_reduced(wide_t(num_) * rhs.den_, wide_t(den_) * rhs.num_, num_, den_);
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
    wide_t a = wide_t(lhs.num()) * rhs.den();
    wide_t b = wide_t(rhs.num()) * lhs.den();
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace majcol
