/*
 * vaaler.hpp - Beurling-Selberg / Vaaler kernels for the interval indicator.
 *
 * Symmetric kernel (shifted = false): chi*_alpha is the indicator of
 * [-alpha/2, alpha/2) mod 1, approximated by the degree-H polynomial
 * chi*_{alpha,H} with majorant B*_{alpha,H}:
 *
 *   |chi*_alpha(x) - chi*_{alpha,H}(x)| <= B*_{alpha,H}(x).
 *
 * Shifted kernel (shifted = true): the same objects translated by alpha/2,
 * so the indicator is that of [0, alpha). Coefficients pick up e(-h alpha/2).
 *
 * Convolutions are taken in coefficient space only.
 */
#pragma once

#include <cstdint>

#include "sqdigits/fourier.hpp"
#include "sqdigits/qmult.hpp"

namespace sqdigits {

struct VaalerKernel {
    double alpha = 0.5;
    std::int64_t H = 1;
    bool shifted = false;

    // PreconditionError unless 0 < alpha < 1 and H >= 1.
    void validate() const;
};

enum class KernelPart { ChiPoly, BPoly, ChiIndicator };

// Fourier coefficient of the exact indicator chi*_alpha: alpha at 0, sin(pi h alpha) / (pi h) otherwise.
double coeff_chi_star(double alpha, std::int64_t h);

Complex coeff_chi(const VaalerKernel& k, std::int64_t h);
Complex coeff_B(const VaalerKernel& k, std::int64_t h);

double eval_kernel(const VaalerKernel& k, KernelPart which, double x);

// B from its sum of two Fejer terms, for cross-checking the coefficient form.
double eval_B_closed(const VaalerKernel& k, double x);

// max over x = j / grid_n of |chi - chi_H| - B_H. At a jump point both
// one-sided values of the indicator are tested.
double sandwich_defect(const VaalerKernel& k, std::int64_t grid_n);

struct SeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;
};

// sum_k |coeff_chi_star(1/U, kU + a)|^2 over |k| <= 10^6 / U, plus an analytic
// bound 2 / (pi^2 k_max) for the omitted terms. The full series equals 1/U^2.
SeriesValue aliased_chi_sq_sum(std::int64_t U, std::int64_t a);

struct ConvolutionDefects {
    double chiB_sum = 0.0;     // sum_u chi* * B*(u/U), equal to 1/(H+1)
    double BB_sum = 0.0;       // sum_u B* * B*(u/U), at most 1/(H+1)
    double chiH_defect = 0.0;  // twisted chi*_H convolution against the exact one, at most 3/(H+1)
};

// alpha = 1/U. PreconditionError unless 2 <= U <= H+1.
ConvolutionDefects convolution_defects(std::int64_t U, std::int64_t H, std::int64_t ell);

// chi*_alpha * (chi*_alpha e^ell)(x) by exact integration over the
// overlap of the two intervals; requires 0 < alpha <= 1/2.
Complex chi_twisted_convolution(double alpha, std::int64_t ell, double x);

// chi*_{alpha,H} * (chi*_{alpha,H} e^ell)(x), a finite coefficient sum.
Complex chiH_twisted_convolution(const VaalerKernel& k, std::int64_t ell, double x);

struct TruncatedValue {
    Complex approx;
    double error_bound = 0.0;
};

// f_{k1,k2,H}(a) with alpha = q^(k1-k2) and H = K q^(k2-k1) - 1, together with
// the B-kernel bound on |f_{k1,k2}(a) - f_{k1,k2,H}(a)|.
// PreconditionError unless K >= 1 and k2 > k1.
TruncatedValue truncated_f_H(const FourierTable& table, i128 a, unsigned kappa1, unsigned kappa2, std::int64_t K);
TruncatedValue truncated_f_H(const StronglyQMultiplicative& f, i128 a, unsigned kappa1, unsigned kappa2,
                             std::int64_t K);

// sum_{|h|<=H} |chi*_H(h)|^2 |F(t+h)|^2 against q^(-2 lambda).
ValueBound l2_mean_chiH_F(const StronglyQMultiplicative& f, unsigned kappa1, unsigned kappa2, std::int64_t K,
                          double t);
// sum_{|h|<=H} |chi*_H(h)| |F(t+h)| against q^(-lambda) (2 + 2/pi + (2/pi) log K) sum_l |F(t+l)|.
ValueBound l1_mean_chiH_F(const StronglyQMultiplicative& f, unsigned kappa1, unsigned kappa2, std::int64_t K,
                          double t);

}  // namespace sqdigits
