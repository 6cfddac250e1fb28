/*
 * expsums.hpp - exponential sums evaluated exactly, next to the right-hand
 * sides of the estimates they are compared with.
 *
 * Where an estimate is stated with an unspecified constant the bound is
 * reported with that constant set to 1 and explicit_constant = false; the
 * ratio is then only meaningful across a parameter sweep.
 */
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sqdigits/numerics.hpp"
#include "sqdigits/rational.hpp"

namespace sqdigits {

struct BoundReport {
    double exact = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
    bool explicit_constant = true;
};

// |sum_{L1 < l <= L2} e(l xi)| against min(L2 - L1, 1 / |sin pi xi|).
BoundReport geometric_sum(std::int64_t L1, std::int64_t L2, double xi);

// sum_{N1 < n <= N2} min(M, |sin pi (n xi + phi)|^-1) against
// (3 + floor((N2 - N1) ||xi||)) (3M + ||xi||^-1 log ||xi||^-1). DomainError if xi is an integer.
BoundReport min_sum(std::int64_t N1, std::int64_t N2, double M, double xi, double phi);

// |sum_{n<m} e((a n^2 + b n) / m)| against sqrt(2 m gcd(a, m)).
BoundReport gauss_complete(std::int64_t a, std::int64_t b, std::int64_t m);

// Same sum over n0 < n <= n0 + N, against (N/m + 1 + (2/pi) log(2m/pi)) sqrt(2 m gcd(a, m)).
BoundReport gauss_incomplete(std::int64_t a, std::int64_t b, std::int64_t m, std::int64_t n0, std::int64_t N);

// |sum_{n0 < n <= n0 + N} e(alpha n^2 + beta n + gamma)| against
// N / sqrt(m) + sqrt(N log m) + sqrt(m log m), given |alpha - a/m| <= 1/m^2, gcd(a, m) = 1, m >= 2.
BoundReport weyl_quadratic(double alpha, double beta, double gamma, std::int64_t n0, std::int64_t N, std::int64_t a,
                           std::int64_t m);

// (1/A) sum_{a <= A} gcd(a, m)^gamma against sigma_{gamma-1}(m).
BoundReport gcd_average(std::int64_t m, std::int64_t A, double gamma);

// |sum_{n=1}^N e(theta n^2)| against lambda2^(1/2) N + lambda2^(-1/2), lambda2 = 2 |theta|.
BoundReport second_derivative_test(double theta, std::int64_t N);

struct DivisorBounds {
    std::uint64_t tau_val = 0;
    double tau_lower = 0.0;
    double tau_upper = 0.0;
    double sigma_val = 0.0;
    double sigma_bound = 0.0;
};

// tau(q^lambda) between (1 + lambda)^omega(q) and tau(q) lambda^omega(q);
// sigma_x(q^lambda) below prod_{p | q} 1 / (1 - p^x). Requires q >= 2, lambda >= 1, x < 0.
DivisorBounds divisor_bounds(std::uint64_t q, unsigned lambda, double x);

struct VdcCheck {
    double lhs = 0.0;
    double rhs = 0.0;
};

// Both sides of the shifted van der Corput inequality for z_1..z_N (z[0] is z_1).
VdcCheck vdc_variant_check(const std::vector<Complex>& z, std::int64_t N_prime, std::int64_t R);

// sum_{m<=M} sum_{n<=N} a_m b_n e(xi4 m^2 n^2 + xi3 m n^2 + xi2 m^2 n + xi1 m n), xi = {xi1, xi2, xi3, xi4}.
// The m-range is split into fixed chunks merged in order, so the result does not depend on threads.
Complex bilinear_quadratic_sum(const std::vector<Complex>& a, const std::vector<Complex>& b,
                               const std::array<double, 4>& xi, unsigned threads = 1);
// Rational frequencies, with every phase reduced exactly modulo their common denominator.
Complex bilinear_quadratic_sum(const std::vector<Complex>& a, const std::vector<Complex>& b,
                               const std::array<Rational, 4>& xi, unsigned threads = 1);

// Right-hand sides of the three double-sum estimates with constant 1; compare
// against |sum / MN|^2, |sum / MN|^2 and |sum / MN|^4 respectively.
// DomainError if the frequency is an integer.
double bound_mn2(std::int64_t M, std::int64_t N, double xi3);
double bound_xi2(std::int64_t M, std::int64_t N, double xi2);
double bound_m2n2(std::int64_t M, std::int64_t N, double xi4);

}  // namespace sqdigits
