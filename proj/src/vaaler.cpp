#include "sqdigits/vaaler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "sqdigits/digits.hpp"
#include "sqdigits/errors.hpp"

namespace sqdigits {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(pi x) with x reduced mod 2 first, so integer x gives exactly 0.
double sin_pi(double x) {
    const double r = x - 2.0 * std::floor(x / 2.0);
    if (r == 0.0 || r == 1.0) return 0.0;
    return std::sin(kPi * r);
}

double coeff_chi_star_H(double alpha, std::int64_t H, std::int64_t h) {
    const std::int64_t a = h < 0 ? -h : h;
    if (a > H) return 0.0;
    if (a == 0) return alpha;
    const double r = static_cast<double>(a) / static_cast<double>(H + 1);
    return coeff_chi_star(alpha, h) * (kPi * r * (1.0 - r) / std::tan(kPi * r) + r);
}

double coeff_B_star(double alpha, std::int64_t H, std::int64_t h) {
    const std::int64_t a = h < 0 ? -h : h;
    if (a > H) return 0.0;
    const double inv = 1.0 / static_cast<double>(H + 1);
    // cos(pi s) as sin(pi (s + 1/2)) so half-integers give exact zeros.
    const double c = sin_pi(static_cast<double>(a) * alpha + 0.5);
    return inv * (1.0 - static_cast<double>(a) * inv) * c;
}

Complex shift_phase(const VaalerKernel& k, std::int64_t h) {
    if (!k.shifted) return {1.0, 0.0};
    return expi2pi(-static_cast<double>(h) * k.alpha / 2.0);
}

double fejer_half(std::int64_t H, double y) {
    const double s = std::sin(kPi * dist1(y));
    const double n = static_cast<double>(H + 1);
    if (std::fabs(s) < 1e-12) return 0.5;
    const double num = std::sin(kPi * n * dist1(y));
    return num * num / (2.0 * n * n * s * s);
}

// Integral of e(ell t) over [lo, hi].
Complex integrate_e(std::int64_t ell, double lo, double hi) {
    if (ell == 0) return {hi - lo, 0.0};
    const Complex diff = expi2pi(static_cast<double>(ell) * hi) - expi2pi(static_cast<double>(ell) * lo);
    return diff / Complex(0.0, 2.0 * kPi * static_cast<double>(ell));
}

}  // namespace

void VaalerKernel::validate() const {
    if (!(alpha > 0.0) || !(alpha < 1.0)) throw PreconditionError("kernel width alpha must lie in (0, 1)");
    if (H < 1) throw PreconditionError("kernel degree H must be at least 1");
}

double coeff_chi_star(double alpha, std::int64_t h) {
    if (h == 0) return alpha;
    return sin_pi(static_cast<double>(h) * alpha) / (kPi * static_cast<double>(h));
}

Complex coeff_chi(const VaalerKernel& k, std::int64_t h) {
    return coeff_chi_star_H(k.alpha, k.H, h) * shift_phase(k, h);
}

Complex coeff_B(const VaalerKernel& k, std::int64_t h) {
    return coeff_B_star(k.alpha, k.H, h) * shift_phase(k, h);
}

double eval_kernel(const VaalerKernel& k, KernelPart which, double x) {
    if (which == KernelPart::ChiIndicator) {
        if (k.shifted) return std::floor(x) - std::floor(x - k.alpha);
        return std::floor(x + k.alpha / 2.0) - std::floor(x - k.alpha / 2.0);
    }
    CompensatedSum acc;
    for (std::int64_t h = -k.H; h <= k.H; ++h) {
        const Complex c = which == KernelPart::ChiPoly ? coeff_chi(k, h) : coeff_B(k, h);
        acc.add((c * expi2pi(static_cast<double>(h) * x)).real());
    }
    return acc.value();
}

double eval_B_closed(const VaalerKernel& k, double x) {
    const double y = k.shifted ? x - k.alpha / 2.0 : x;
    return fejer_half(k.H, y - k.alpha / 2.0) + fejer_half(k.H, y + k.alpha / 2.0);
}

double sandwich_defect(const VaalerKernel& k, std::int64_t grid_n) {
    k.validate();
    if (grid_n < 1) throw PreconditionError("grid_n must be at least 1");
    const double jump_a = k.shifted ? 0.0 : -k.alpha / 2.0;
    const double jump_b = k.shifted ? k.alpha : k.alpha / 2.0;
    double worst = -1e300;
    for (std::int64_t j = 0; j < grid_n; ++j) {
        const double x = static_cast<double>(j) / static_cast<double>(grid_n);
        const double p = eval_kernel(k, KernelPart::ChiPoly, x);
        const double b = eval_kernel(k, KernelPart::BPoly, x);
        const bool at_jump = dist1(x - jump_a) < 1e-13 || dist1(x - jump_b) < 1e-13;
        if (at_jump) {
            worst = std::max({worst, std::fabs(0.0 - p) - b, std::fabs(1.0 - p) - b});
        } else {
            worst = std::max(worst, std::fabs(eval_kernel(k, KernelPart::ChiIndicator, x) - p) - b);
        }
    }
    return worst;
}

SeriesValue aliased_chi_sq_sum(std::int64_t U, std::int64_t a) {
    if (U < 2) throw PreconditionError("aliased_chi_sq_sum requires U >= 2");
    const double alpha = 1.0 / static_cast<double>(U);
    const std::int64_t kmax = 1000000 / U;
    CompensatedSum acc;
    // Smallest terms first.
    for (std::int64_t k = kmax; k >= 1; --k) {
        const double c1 = coeff_chi_star(alpha, k * U + a);
        const double c2 = coeff_chi_star(alpha, -k * U + a);
        acc.add(c1 * c1);
        acc.add(c2 * c2);
    }
    const double c0 = coeff_chi_star(alpha, a);
    acc.add(c0 * c0);
    return {acc.value(), 2.0 / (kPi * kPi * static_cast<double>(kmax))};
}

Complex chi_twisted_convolution(double alpha, std::int64_t ell, double x) {
    if (!(alpha > 0.0) || alpha > 0.5) throw PreconditionError("chi_twisted_convolution requires 0 < alpha <= 1/2");
    // chi*(t) needs t in [-alpha/2, alpha/2); chi*(x - t) needs t in (x - alpha/2, x + alpha/2] mod 1.
    const double x0 = x - std::round(x);
    Complex out(0.0, 0.0);
    for (int n = -1; n <= 1; ++n) {
        const double lo = std::max(-alpha / 2.0, x0 + n - alpha / 2.0);
        const double hi = std::min(alpha / 2.0, x0 + n + alpha / 2.0);
        if (hi > lo) out += integrate_e(ell, lo, hi);
    }
    return out;
}

Complex chiH_twisted_convolution(const VaalerKernel& k, std::int64_t ell, double x) {
    CompensatedComplexSum acc;
    for (std::int64_t h = -k.H; h <= k.H; ++h) {
        const double c = coeff_chi_star_H(k.alpha, k.H, h) * coeff_chi_star_H(k.alpha, k.H, h - ell);
        if (c != 0.0) acc.add(c * expi2pi(static_cast<double>(h) * x));
    }
    return acc.value();
}

ConvolutionDefects convolution_defects(std::int64_t U, std::int64_t H, std::int64_t ell) {
    if (U < 2 || U > H + 1) throw PreconditionError("convolution_defects requires 2 <= U <= H+1");
    const double alpha = 1.0 / static_cast<double>(U);
    const VaalerKernel k{alpha, H, false};
    CompensatedSum chiB, BB, defect;
    for (std::int64_t u = 0; u < U; ++u) {
        CompensatedSum cb, bb;
        for (std::int64_t h = -H; h <= H; ++h) {
            const double b = coeff_B_star(alpha, H, h);
            const double w = expi2pi_ratio(static_cast<i128>(h) * u, static_cast<u128>(U)).real();
            cb.add(coeff_chi_star(alpha, h) * b * w);
            bb.add(b * b * w);
        }
        chiB.add(cb.value());
        BB.add(bb.value());
        const double x = static_cast<double>(u) / static_cast<double>(U);
        defect.add(std::abs(chiH_twisted_convolution(k, ell, x) - chi_twisted_convolution(alpha, ell, x)));
    }
    return {chiB.value(), BB.value(), defect.value()};
}

TruncatedValue truncated_f_H(const FourierTable& table, i128 a, unsigned kappa1, unsigned kappa2,
                             std::int64_t K) {
    if (kappa2 <= kappa1) throw PreconditionError("truncated_f_H requires kappa2 > kappa1");
    if (K < 1) throw PreconditionError("truncated_f_H requires K >= 1");
    const unsigned lambda = kappa2 - kappa1;
    if (table.lambda != lambda) throw PreconditionError("Fourier table length does not match the window");
    const std::uint64_t q = table.f.q();
    const auto N = static_cast<std::int64_t>(checked_pow(q, lambda));
    if (static_cast<i128>(K) * N > (i128{1} << 40)) throw CapacityError("K q^lambda exceeds 2^40 terms");
    const std::int64_t H = K * N - 1;
    const u128 qk1 = checked_pow(q, kappa1);
    const u128 qk2 = checked_pow(q, kappa2);
    if (qk2 > (u128{1} << 62)) throw RangeError("q^kappa2 exceeds 2^62");
    const double alpha = 1.0 / static_cast<double>(N);
    const VaalerKernel kernel{alpha, H, true};

    // chi_{alpha,H}(h) e(h a / q^k2) = chi*_H(h) e(h (2a - q^k1) / (2 q^k2)), reduced exactly.
    const i128 den2 = static_cast<i128>(2 * qk2);
    i128 a2 = a % den2;
    if (a2 < 0) a2 += den2;
    const i128 slope = 2 * a2 - static_cast<i128>(qk1);
    CompensatedComplexSum acc;
    for (std::int64_t h = -H; h <= H; ++h) {
        const double c = coeff_chi_star_H(alpha, H, h);
        if (c == 0.0) continue;
        acc.add(c * table.at(h) * expi2pi_ratio(static_cast<i128>(h) * slope, static_cast<u128>(den2)));
    }
    TruncatedValue out;
    out.approx = static_cast<double>(N) * acc.value();

    CompensatedSum bound;
    for (std::int64_t k = -(K - 1); k <= K - 1; ++k)
        bound.add((coeff_B(kernel, k * N) * expi2pi_ratio(static_cast<i128>(k) * a, qk1)).real());
    out.error_bound = static_cast<double>(N) * bound.value();
    return out;
}

TruncatedValue truncated_f_H(const StronglyQMultiplicative& f, i128 a, unsigned kappa1, unsigned kappa2,
                             std::int64_t K) {
    if (kappa2 <= kappa1) throw PreconditionError("truncated_f_H requires kappa2 > kappa1");
    return truncated_f_H(build_table(f, kappa2 - kappa1), a, kappa1, kappa2, K);
}

namespace {

struct MeanSetup {
    std::int64_t N;
    std::int64_t H;
    std::vector<Complex> values;
};

MeanSetup mean_setup(const StronglyQMultiplicative& f, unsigned kappa1, unsigned kappa2, std::int64_t K, double t) {
    if (kappa2 <= kappa1) throw PreconditionError("window requires kappa2 > kappa1");
    if (K < 1) throw PreconditionError("K must be at least 1");
    const auto N = static_cast<std::int64_t>(checked_pow(f.q(), kappa2 - kappa1));
    return {N, K * N - 1, shifted_values(f, kappa2 - kappa1, t)};
}

}  // namespace

ValueBound l2_mean_chiH_F(const StronglyQMultiplicative& f, unsigned kappa1, unsigned kappa2, std::int64_t K,
                          double t) {
    const MeanSetup s = mean_setup(f, kappa1, kappa2, K, t);
    const double alpha = 1.0 / static_cast<double>(s.N);
    CompensatedSum acc;
    for (std::int64_t h = -s.H; h <= s.H; ++h) {
        const double c = coeff_chi_star_H(alpha, s.H, h);
        acc.add(c * c * abs2(s.values[static_cast<std::size_t>(((h % s.N) + s.N) % s.N)]));
    }
    return {acc.value(), alpha * alpha};
}

ValueBound l1_mean_chiH_F(const StronglyQMultiplicative& f, unsigned kappa1, unsigned kappa2, std::int64_t K,
                          double t) {
    const MeanSetup s = mean_setup(f, kappa1, kappa2, K, t);
    const double alpha = 1.0 / static_cast<double>(s.N);
    CompensatedSum acc, l1;
    for (std::int64_t h = -s.H; h <= s.H; ++h)
        acc.add(std::fabs(coeff_chi_star_H(alpha, s.H, h)) *
                std::abs(s.values[static_cast<std::size_t>(((h % s.N) + s.N) % s.N)]));
    for (const Complex& v : s.values) l1.add(std::abs(v));
    const double factor = 2.0 + 2.0 / kPi + (2.0 / kPi) * std::log(static_cast<double>(K));
    return {acc.value(), alpha * factor * l1.value()};
}

}  // namespace sqdigits
