/*
 * digits.hpp - base-q expansions and digit windows.
 *
 * For a in Z and 0 <= k1 <= k2, rep_low(a, k) is the residue of a modulo
 * q^k and rep_window(a, k1, k2) the integer spelled by the digits of index
 * k1..k2-1, i.e. floor(rep_low(a, k2) / q^k1). All q-powers are computed
 * in unsigned 128-bit arithmetic and overflow raises RangeError.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sqdigits/numerics.hpp"

namespace sqdigits {

struct DigitWindowSpec {
    std::uint64_t q = 2;
    unsigned kappa1 = 0;
    unsigned kappa2 = 0;

    // Throws PreconditionError / RangeError when the invariants fail.
    void validate() const;
    unsigned length() const { return kappa2 - kappa1; }
};

// q^k, throwing RangeError if it does not fit in 128 bits.
u128 checked_pow(std::uint64_t q, unsigned k);

// Largest k with q^k <= n (n >= 1).
unsigned floor_log(std::uint64_t q, u128 n);

// Digits eps_0 .. eps_k, least significant first; n = 0 gives {0}.
std::vector<std::uint64_t> to_digits(u128 n, std::uint64_t q);

// Inverse of to_digits; throws RangeError on overflow.
u128 from_digits(const std::vector<std::uint64_t>& digits, std::uint64_t q);

u128 rep_low(i128 a, unsigned kappa, std::uint64_t q);
u128 rep_window(i128 a, unsigned kappa1, unsigned kappa2, std::uint64_t q);

std::uint64_t digit_sum(u128 n, std::uint64_t q);

std::string to_string(u128 v);

}  // namespace sqdigits
