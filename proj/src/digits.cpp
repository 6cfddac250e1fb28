#include "sqdigits/digits.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "sqdigits/errors.hpp"

namespace sqdigits {

namespace {

void require_base(std::uint64_t q) {
    if (q < 2) throw PreconditionError("base q must be >= 2");
}

}  // namespace

void DigitWindowSpec::validate() const {
    require_base(q);
    if (kappa1 > kappa2) throw PreconditionError("digit window requires kappa1 <= kappa2");
    (void)checked_pow(q, kappa2);
}

u128 checked_pow(std::uint64_t q, unsigned k) {
    require_base(q);
    constexpr u128 kMax = std::numeric_limits<u128>::max();
    u128 r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (r > kMax / q)
            throw RangeError("q^" + std::to_string(k) + " exceeds the 128-bit working range (q=" +
                             std::to_string(q) + ")");
        r *= q;
    }
    return r;
}

unsigned floor_log(std::uint64_t q, u128 n) {
    require_base(q);
    if (n == 0) throw PreconditionError("floor_log of zero");
    unsigned k = 0;
    while (n >= q) {
        n /= q;
        ++k;
    }
    return k;
}

std::vector<std::uint64_t> to_digits(u128 n, std::uint64_t q) {
    require_base(q);
    std::vector<std::uint64_t> out;
    if (n == 0) return {0};
    while (n != 0) {
        out.push_back(static_cast<std::uint64_t>(n % q));
        n /= q;
    }
    return out;
}

u128 from_digits(const std::vector<std::uint64_t>& digits, std::uint64_t q) {
    require_base(q);
    constexpr u128 kMax = std::numeric_limits<u128>::max();
    u128 v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (v > (kMax - *it) / q) throw RangeError("digit list exceeds the 128-bit working range");
        v = v * q + *it;
    }
    return v;
}

u128 rep_low(i128 a, unsigned kappa, std::uint64_t q) {
    const u128 m = checked_pow(q, kappa);
    if (a >= 0) return static_cast<u128>(a) % m;
    // -(a+1) never overflows; a mod m = m - 1 - ((-(a+1)) mod m).
    const u128 r = static_cast<u128>(-(a + 1)) % m;
    return m - 1 - r;
}

u128 rep_window(i128 a, unsigned kappa1, unsigned kappa2, std::uint64_t q) {
    if (kappa1 > kappa2) throw PreconditionError("digit window requires kappa1 <= kappa2");
    return rep_low(a, kappa2, q) / checked_pow(q, kappa1);
}

std::uint64_t digit_sum(u128 n, std::uint64_t q) {
    require_base(q);
    if (q == 2) {
        return static_cast<std::uint64_t>(std::popcount(static_cast<std::uint64_t>(n)) +
                                          std::popcount(static_cast<std::uint64_t>(n >> 64)));
    }
    std::uint64_t s = 0;
    if (n >> 64) {
        while (n >> 64) {
            s += static_cast<std::uint64_t>(n % q);
            n /= q;
        }
    }
    auto lo = static_cast<std::uint64_t>(n);
    while (lo != 0) {
        s += lo % q;
        lo /= q;
    }
    return s;
}

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace sqdigits
