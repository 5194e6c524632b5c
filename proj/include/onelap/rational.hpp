#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "onelap/error.hpp"

namespace onelap {

// Exact rational number. Always stored reduced with a positive denominator.
// Intermediate products are evaluated in 128-bit arithmetic; a result whose
// reduced form does not fit in 64 bits raises Overflow instead of wrapping.
class Rat {
  public:
    constexpr Rat() = default;
    Rat(std::int64_t value) : num_(value) {}
    Rat(std::int64_t numerator, std::int64_t denominator);

    // Accepts "p", "p/q", and plain decimals such as "-0.25".
    static Rat parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }
    Rat abs() const;

    Rat operator-() const;
    Rat operator+(const Rat& other) const;
    Rat operator-(const Rat& other) const;
    Rat operator*(const Rat& other) const;
    Rat operator/(const Rat& other) const;
    Rat& operator+=(const Rat& other) { return *this = *this + other; }
    Rat& operator-=(const Rat& other) { return *this = *this - other; }
    Rat& operator*=(const Rat& other) { return *this = *this * other; }
    Rat& operator/=(const Rat& other) { return *this = *this / other; }

    bool operator==(const Rat& other) const { return num_ == other.num_ && den_ == other.den_; }
    bool operator!=(const Rat& other) const { return !(*this == other); }
    bool operator<(const Rat& other) const;
    bool operator>(const Rat& other) const { return other < *this; }
    bool operator<=(const Rat& other) const { return !(other < *this); }
    bool operator>=(const Rat& other) const { return !(*this < other); }

    // "p" when the denominator is 1, otherwise "p/q"; sign on the numerator.
    std::string str() const;
    double to_double() const;

  private:
    static Rat make(__int128 numerator, __int128 denominator);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Least common multiple of two positive 64-bit values, erroring on overflow.
std::int64_t lcm_checked(std::int64_t a, std::int64_t b);

} // namespace onelap
