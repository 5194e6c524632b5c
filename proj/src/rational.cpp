#include "onelap/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

namespace onelap {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow128(__int128 value) {
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min()) {
        throw Error(ErrorCode::Overflow, "rational does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(value);
}

} // namespace

Rat Rat::make(__int128 numerator, __int128 denominator) {
    if (denominator == 0) {
        throw Error(ErrorCode::DivisionByZero, "zero denominator");
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    if (numerator == 0) {
        return Rat();
    }
    __int128 g = gcd128(numerator, denominator);
    Rat r;
    r.num_ = narrow128(numerator / g);
    r.den_ = narrow128(denominator / g);
    return r;
}

Rat::Rat(std::int64_t numerator, std::int64_t denominator) {
    *this = make(numerator, denominator);
}

Rat Rat::abs() const {
    Rat r = *this;
    if (r.num_ < 0) r.num_ = narrow128(-static_cast<__int128>(r.num_));
    return r;
}

Rat Rat::operator-() const {
    return make(-static_cast<__int128>(num_), den_);
}

Rat Rat::operator+(const Rat& other) const {
    return make(static_cast<__int128>(num_) * other.den_ + static_cast<__int128>(other.num_) * den_,
                static_cast<__int128>(den_) * other.den_);
}

Rat Rat::operator-(const Rat& other) const {
    return make(static_cast<__int128>(num_) * other.den_ - static_cast<__int128>(other.num_) * den_,
                static_cast<__int128>(den_) * other.den_);
}

Rat Rat::operator*(const Rat& other) const {
    return make(static_cast<__int128>(num_) * other.num_, static_cast<__int128>(den_) * other.den_);
}

Rat Rat::operator/(const Rat& other) const {
    if (other.num_ == 0) {
        throw Error(ErrorCode::DivisionByZero, "division by zero rational");
    }
    return make(static_cast<__int128>(num_) * other.den_, static_cast<__int128>(den_) * other.num_);
}

bool Rat::operator<(const Rat& other) const {
    return static_cast<__int128>(num_) * other.den_ < static_cast<__int128>(other.num_) * den_;
}

std::string Rat::str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
        s += '/';
        s += std::to_string(den_);
    }
    return s;
}

double Rat::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

Rat Rat::parse(std::string_view text) {
    auto fail = [&]() -> Rat {
        throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
    };

    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }

    auto read_digits = [&](__int128& out) -> bool {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
        out = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            out = out * 10 + (text[pos] - '0');
            if (out > static_cast<__int128>(std::numeric_limits<std::int64_t>::max()) * 1000000) {
                throw Error(ErrorCode::Overflow, "rational literal too large");
            }
            ++pos;
        }
        return true;
    };

    __int128 whole = 0;
    bool has_whole = read_digits(whole);

    __int128 numerator = whole;
    __int128 denominator = 1;
    if (pos < text.size() && text[pos] == '/') {
        if (!has_whole) return fail();
        ++pos;
        if (!read_digits(denominator)) return fail();
    } else if (pos < text.size() && text[pos] == '.') {
        // decimals may omit the digits on one side: "2." and ".5" are fine,
        // a lone "." is not
        ++pos;
        __int128 frac = 0;
        std::size_t start = pos;
        bool has_frac = read_digits(frac);
        if (!has_whole && !has_frac) return fail();
        for (std::size_t i = start; i < pos; ++i) {
            numerator *= 10;
            denominator *= 10;
        }
        numerator += frac;
    } else if (!has_whole) {
        return fail();
    }
    if (pos != text.size()) return fail();
    if (negative) numerator = -numerator;
    return make(numerator, denominator);
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
    if (a <= 0 || b <= 0) {
        throw Error(ErrorCode::Overflow, "lcm of nonpositive values");
    }
    __int128 g = gcd128(a, b);
    __int128 l = static_cast<__int128>(a) / g * b;
    if (l > std::numeric_limits<std::int64_t>::max()) {
        throw Error(ErrorCode::Overflow, "lcm does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(l);
}

} // namespace onelap
