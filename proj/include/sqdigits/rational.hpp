#pragma once

#include <cstdint>
#include <string>

namespace sqdigits {

// Exact rational with 64-bit numerator/denominator, always in lowest terms
// with a positive denominator. Arithmetic overflow raises RangeError.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num) : num_(num), den_(1) {}  // NOLINT: implicit from integers is intended
    Rational(std::int64_t num, std::int64_t den);

    // Accepts "a/b" or "a" (optional sign). Throws PreconditionError otherwise.
    static Rational parse(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Representative in [0, 1).
    Rational frac() const;

    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
    friend bool operator==(const Rational& a, const Rational& b) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::int64_t lcm_checked(std::int64_t a, std::int64_t b);

}  // namespace sqdigits
