/*
 * harness.hpp - experiments along squares of primes.
 *
 *   S(x)        = sum_{n <= x} Lambda(n) f(n^2) e(theta n)
 *   equidist    : counts of s_q(p^2) mod m over primes p <= x
 *   S20         : sum_m sum_n a_m b_n f(m^2 n^2) e(theta m n) on q-adic boxes
 *   S_I         : sum_m |sum_{n in I(m)} f(m^2 n^2) e(theta m n)|
 *   Vaughan     : type I / type II quantities next to the Lambda-sum
 *
 * Every reduction runs over a fixed chunk order, so results do not depend
 * on the thread count.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqdigits/fourier.hpp"
#include "sqdigits/qmult.hpp"

namespace sqdigits {

// Sum over n <= x of Lambda(n) f(n^2) e(theta n); x <= 10^8.
Complex lambda_weighted_sum(std::uint64_t x, const StronglyQMultiplicative& f, double theta, unsigned threads = 1);

struct EquidistReport {
    std::uint64_t x = 0;
    std::uint64_t q = 2;
    std::uint64_t m = 2;
    std::vector<std::uint64_t> counts;
    std::uint64_t pi_x = 0;
    double max_rel_discrepancy = 0.0;
    bool m_coprime_to_q_minus_1 = false;
    bool q_prime = false;
};

EquidistReport equidist_counts(std::uint64_t x, std::uint64_t q, std::uint64_t m, unsigned threads = 1);

// Exact S20 over [q^(mu-1), q^mu) x [q^(nu-1), q^nu); a and b are indexed from
// the lower end of each range. CapacityError if q^(mu+nu) > 2^26.
Complex type2_S20(unsigned mu, unsigned nu, const StronglyQMultiplicative& f, double theta,
                  const std::vector<Complex>& a, const std::vector<Complex>& b, unsigned threads = 1);

// S_I with explicit per-m intervals [lo, hi) inside [q^(nu-1), q^nu), one per m
// in [q^(mu-1), q^mu).
double type1_SI(unsigned mu, unsigned nu, const StronglyQMultiplicative& f, double theta,
                const std::vector<std::pair<std::uint64_t, std::uint64_t>>& intervals, unsigned threads = 1);
// Same sum with every interval [q^(nu-1), t) and the worst t taken per m
// (all integer cut points are scanned).
double type1_SI_max(unsigned mu, unsigned nu, const StronglyQMultiplicative& f, double theta, unsigned threads = 1);

struct TypeIIPlan {
    std::int64_t mu = 0;
    std::int64_t nu = 0;
    std::int64_t rho = 0;
    std::int64_t rho_tilde = 0;
    std::int64_t rho1 = 0;
    std::int64_t rho2 = 0;
    std::int64_t rho3 = 0;
    double rho4 = 0.0;
    std::int64_t rho5 = 0;
    std::int64_t lambda = 0;
    std::int64_t kappa1 = 0;
    std::int64_t kappa2 = 0;
    double c = 0.0;
    double eta = 0.0;
    bool in_regime = false;  // eta <= 1/2000
    bool accepted = false;
    std::string violated;  // first violated constraint when !accepted
};

TypeIIPlan type2_plan(std::int64_t mu, std::int64_t nu, const SpectralConstants& constants);

struct TypeIRho {
    std::int64_t rho = 0;
    bool in_regime = false;  // eta <= 1/2000
    bool rho_le_nu_over_20 = false;
};

TypeIRho type1_rho(std::int64_t nu, const SpectralConstants& constants);

struct TypeIIAlignment {
    double M = 0.0;
    std::vector<double> rounds;  // |S| at start (a = b = 1), then after each half-step
    std::uint64_t pairs = 0;     // number of (m, n) terms, the trivial bound
};

// Lower bound for the sup of |S20| over unimodular a, b: start from a = b = 1,
// then two rounds of aligning a to the rows and b to the columns.
TypeIIAlignment type2_S20_aligned(unsigned mu, unsigned nu, const StronglyQMultiplicative& f, double theta,
                                  unsigned threads = 1);

struct VaughanProbe {
    std::uint64_t x = 0;
    double beta1 = 0.0;
    double beta2 = 0.0;
    double type1_max = 0.0;
    double type1_argmax_M = 0.0;
    double type2_max = 0.0;
    double type2_argmax_M = 0.0;
    std::vector<TypeIIAlignment> type2;
    Complex lambda_sum;  // sum_{x/q < n <= x} Lambda(n) g(n)
    double U = 0.0;      // max(type1_max, type2_max)
    double C = 0.0;      // |lambda_sum| / (U log^2 x)
};

// g(n) = f(n^2) e(theta n). Requires x >= q^2, 0 < beta1 < 1/3, x <= 10^7; beta2 = 1 - beta1.
VaughanProbe vaughan_probe(std::uint64_t x, const StronglyQMultiplicative& f, double theta, double beta1,
                           unsigned threads = 1);

struct DecayFit {
    std::vector<std::uint64_t> xs;
    std::vector<double> values;  // |S(x)| / x
    double fitted_exponent = 0.0;
};

// Requires >= 3 strictly increasing x values, each <= 10^8.
DecayFit decay_fit(const std::vector<std::uint64_t>& xs, const StronglyQMultiplicative& f, double theta,
                   unsigned threads = 1);

}  // namespace sqdigits
