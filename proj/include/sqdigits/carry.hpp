/*
 * carry.hpp - exact counts of carry propagation past a digit window.
 *
 * For lambda = 2 mu + nu + rho + rho_tilde, count the n in [q^(nu-1), q^nu)
 * for which truncating m^2 (n+r)^2 and m^2 n^2 to their lambda lowest digits
 * changes the phase difference f(m^2 (n+r)^2) - f(m^2 n^2). Phase
 * differences are compared mod 1, exactly when f has rational phases.
 */
#pragma once

#include <cstdint>

#include "sqdigits/qmult.hpp"

namespace sqdigits {

struct CarrySpec {
    std::uint64_t q = 2;
    unsigned mu = 1;
    unsigned nu = 1;
    unsigned rho = 0;
    unsigned rho_tilde = 0;
    std::uint64_t m = 1;
    std::uint64_t r = 0;

    unsigned lambda() const { return 2 * mu + nu + rho + rho_tilde; }
    // PreconditionError when lambda >= 2 mu + 2 nu or m is outside [q^(mu-1), q^mu);
    // RangeError when q^(2 mu + 2 nu + 2) does not fit in 128 bits.
    void validate() const;
};

std::uint64_t count_mismatch(const CarrySpec& spec, const StronglyQMultiplicative& f, unsigned threads = 1);

// Four-term version with m' = m + s q^kappa and the window [kappa, lambda):
// requires 0 <= kappa <= nu - rho and 1 <= s < q^rho. m' may leave [q^(mu-1), q^mu).
std::uint64_t count_second_diff_mismatch(const CarrySpec& spec, const StronglyQMultiplicative& f, unsigned kappa,
                                         std::uint64_t s, unsigned threads = 1);

// count_mismatch without the CarrySpec invariants: any m >= 1, any lambda.
std::uint64_t count_mismatch_raw(const StronglyQMultiplicative& f, std::uint64_t m, unsigned nu, std::uint64_t r,
                                 unsigned lambda, unsigned threads = 1);

}  // namespace sqdigits
