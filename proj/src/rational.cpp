#include "sqdigits/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "sqdigits/errors.hpp"

namespace sqdigits {

namespace {

std::int64_t narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw RangeError("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

Rational make(__int128 num, __int128 den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    __int128 n = num;
    __int128 d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const auto g = std::gcd(n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n),
                            static_cast<std::uint64_t>(d));
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
}

Rational Rational::parse(const std::string& text) {
    const auto bad = [&] { return PreconditionError("expected an exact rational \"a/b\", got \"" + text + "\""); };
    const auto slash = text.find('/');
    const auto parse_int = [&](const std::string& s, bool allow_sign) -> std::int64_t {
        if (s.empty()) throw bad();
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) throw bad();
        for (std::size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw bad();
        try {
            return std::stoll(s);
        } catch (const std::exception&) {
            throw bad();
        }
    };
    if (slash == std::string::npos) return Rational(parse_int(text, true));
    const std::int64_t n = parse_int(text.substr(0, slash), true);
    const std::int64_t d = parse_int(text.substr(slash + 1), false);
    if (d == 0) throw bad();
    return Rational(n, d);
}

Rational Rational::frac() const {
    std::int64_t r = num_ % den_;
    if (r < 0) r += den_;
    return Rational(r, den_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
    if (a <= 0 || b <= 0) throw DomainError("lcm of non-positive integers");
    const std::int64_t g = std::gcd(a, b);
    return narrow(static_cast<__int128>(a / g) * b);
}

}  // namespace sqdigits
