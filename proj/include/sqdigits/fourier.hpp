/*
 * fourier.hpp - the discrete Fourier transform of a strongly q-multiplicative f
 *
 *   F_lambda(t) = q^-lambda * sum_{0 <= u < q^lambda} f(u) e(-t u / q^lambda)
 *
 * For strongly q-multiplicative f the window transform F_{k1,k2} depends only
 * on lambda = k2 - k1, and F factors digit by digit:
 *
 *   F_lambda(t) = prod_{l=0}^{lambda-1} F_1(t / q^l).
 *
 * Also here: the spectral constants c(f) (decay of |F_1(t) F_1(qt)|) and
 * eta(f) (L1 growth through Psi_q), and the L1 / L2 inequalities that are
 * phrased in terms of F. Inequality checks return both sides.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "sqdigits/qmult.hpp"

namespace sqdigits {

struct ValueBound {
    double value = 0.0;
    double bound = 0.0;
};

struct FourierTable {
    StronglyQMultiplicative f;
    unsigned lambda = 0;
    std::vector<Complex> values;  // values[h] = F_lambda(h), 0 <= h < q^lambda

    std::uint64_t size() const { return values.size(); }
    // F_lambda(h) for any integer h (period q^lambda).
    Complex at(std::int64_t h) const;
};

struct SpectralConstants {
    double c = 0.0;
    double eta = 0.0;
    double argmax_c = 0.0;
    double argmax_eta = 0.0;
    std::size_t grid_size = 0;
    double refine_tol = 0.0;
};

inline constexpr std::uint64_t kMaxFourierTable = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kMaxConstantsBase = 64;

// F_1(s) = q^-1 sum_b f(b) e(-s b / q).
Complex eval_F1(const StronglyQMultiplicative& f, double s);

// F_lambda(t) through the digit product.
Complex eval_F(const StronglyQMultiplicative& f, unsigned lambda, double t);

// phi_q(t) = |sum_j f(j) e(-j t)| = q |F_1(q t)|.
double phi_q(const StronglyQMultiplicative& f, double t);

// Psi_q(t) = q^-1 sum_r phi_q(t + r / q).
double psi_q(const StronglyQMultiplicative& f, double t);

// F_lambda(t + h) for 0 <= h < q^lambda. Same capacity guard as build_table.
std::vector<Complex> shifted_values(const StronglyQMultiplicative& f, unsigned lambda, double t);

// All integer samples of F_lambda, built level by level in O(q^(lambda+1)).
// Throws CapacityError when q^lambda exceeds kMaxFourierTable.
FourierTable build_table(const StronglyQMultiplicative& f, unsigned lambda);

// Throws DomainError for improper f, CapacityError for q > kMaxConstantsBase.
SpectralConstants compute_constants(const StronglyQMultiplicative& f);

// max over real t of |F_lambda(t)| (grid plus refinement over one period).
double sup_abs_F(const StronglyQMultiplicative& f, unsigned lambda);

// sum_{l < q^lambda} |F_lambda(t + l)|^2, identically 1.
double quadratic_mean(const StronglyQMultiplicative& f, unsigned lambda, double t);

// sum_{h < q^lambda, h = a mod q^delta} |F_lambda(t + h)|  <=  q^(eta (lambda - delta)) |F_delta(t + a)|.
ValueBound l1_masked_sum(const StronglyQMultiplicative& f, unsigned lambda, unsigned delta, std::int64_t a,
                         double t, const SpectralConstants& constants);
ValueBound l1_masked_sum(const StronglyQMultiplicative& f, unsigned lambda, unsigned delta, std::int64_t a,
                         double t);

// |F_{k1,k2}(t)| for f = e(gamma s_q) against
// exp(pi^2/48 - (k2-k1) pi^2 (q-1) / (12 (q+1)) ||(q-1) gamma||^2).
ValueBound digit_sum_decay_bound(std::uint64_t q, const Rational& gamma, unsigned kappa1, unsigned kappa2,
                                 double t);

// sum_{0 <= k < q^(k2-k1)/A} |F(floor(k A) + B)|^2  <=  (3q-2)/(q-1) max_t |F_alpha(t)|^2,
// where q^alpha <= A < q^(alpha+1). DomainError if A is outside [1, q^(k2-k1)).
ValueBound almost_ap_l2_sum(const StronglyQMultiplicative& f, unsigned kappa1, unsigned kappa2, double A,
                            double B);

// sum_n |F(q^lambda t_n)|^2  <  1 + 1 / (delta q^lambda) for delta-spaced nodes mod 1.
// PreconditionError if the nodes are not delta-spaced or delta is outside (0, 1/2].
ValueBound large_sieve_sum(const StronglyQMultiplicative& f, unsigned kappa1, unsigned kappa2,
                           const std::vector<double>& nodes, double delta);

}  // namespace sqdigits
