#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sqdigits/errors.hpp"
#include "sqdigits/vaaler.hpp"

using namespace sqdigits;

namespace {

const long double kPiL = 3.141592653589793238462643383279502884L;

// Coefficients straight from the closed forms, in long double.
long double chi_star_hat(long double alpha, long long h) {
    if (h == 0) return alpha;
    return std::sin(kPiL * h * alpha) / (kPiL * h);
}

long double chiH_hat(long double alpha, long long H, long long h) {
    if (h == 0) return alpha;
    const long long a = std::llabs(h);
    if (a > H) return 0;
    const long double r = static_cast<long double>(a) / (H + 1);
    return chi_star_hat(alpha, h) * (kPiL * r * (1 - r) / std::tan(kPiL * r) + r);
}

long double BH_hat(long double alpha, long long H, long long h) {
    const long long a = std::llabs(h);
    if (a > H) return 0;
    return (1.0L - static_cast<long double>(a) / (H + 1)) * std::cos(kPiL * h * alpha) / (H + 1);
}

double norm1(double x) { return std::fabs(x - std::round(x)); }

// chi*_alpha * (chi*_alpha e^ell)(x) by midpoint quadrature over the support of the first factor.
oracle::C twisted_quadrature(double alpha, long long ell, double x, int n = 200000) {
    oracle::C acc = 0;
    const double w = alpha / n;
    for (int i = 0; i < n; ++i) {
        const double t = -alpha / 2 + (i + 0.5) * w;
        const double s = x - t;
        const double r = s - std::round(s);
        if (r >= -alpha / 2 && r < alpha / 2) acc += oracle::e(static_cast<double>(ell) * s) * w;
    }
    return acc;
}

}  // namespace

TEST_CASE("coefficient examples") {
    const VaalerKernel k{0.5, 7, false};
    CHECK(coeff_chi(k, 0).real() == 0.5);
    CHECK(std::abs(coeff_chi(k, 8)) == 0.0);
    CHECK(std::abs(coeff_chi(k, -8)) == 0.0);
    CHECK(std::abs(coeff_chi(k, 2)) == 0.0);
    CHECK(std::abs(coeff_chi(k, 4)) == 0.0);
    CHECK(coeff_B(k, 0).real() == doctest::Approx(1.0 / 8).epsilon(1e-15));
    const VaalerKernel k3{1.0 / 3, 10, false};
    CHECK(coeff_B(k3, 10).real() ==
          doctest::Approx(std::cos(std::numbers::pi * 10 / 3.0) / 121.0).epsilon(1e-13));
    CHECK(std::abs(coeff_B(k3, 11)) == 0.0);
    CHECK_THROWS_AS((VaalerKernel{0.0, 3, false}.validate()), PreconditionError);
    CHECK_THROWS_AS((VaalerKernel{0.5, 0, false}.validate()), PreconditionError);
}

TEST_CASE("coefficients agree with the closed forms") {
    auto g = oracle::rng(41);
    for (int i = 0; i < 200; ++i) {
        const double alpha = oracle::uniform(g, 0.001, 0.999);
        const auto H = oracle::uniform_int(g, 1, 300);
        const VaalerKernel sym{alpha, H, false}, sh{alpha, H, true};
        for (long long h = -H - 2; h <= H + 2; ++h) {
            const auto c = coeff_chi(sym, h);
            REQUIRE(std::fabs(c.real() - static_cast<double>(chiH_hat(alpha, H, h))) < 1e-13);
            REQUIRE(std::fabs(c.imag()) < 1e-15);
            REQUIRE(std::fabs(coeff_B(sym, h).real() - static_cast<double>(BH_hat(alpha, H, h))) < 1e-13);
            // |chi_H(h)| <= min(alpha, 1/(pi |h|)) and |B(h)| <= B(0)
            const double cap = h == 0 ? alpha : std::min(alpha, 1.0 / (std::numbers::pi * std::llabs(h)));
            REQUIRE(std::abs(c) <= cap + 1e-15);
            REQUIRE(std::abs(coeff_B(sym, h)) <= 1.0 / (H + 1) + 1e-15);
            const auto tw = oracle::e(-static_cast<double>(h) * alpha / 2);
            REQUIRE(std::abs(coeff_chi(sh, h) - c * tw) < 1e-13);
        }
    }
}

TEST_CASE("kernel evaluation") {
    const VaalerKernel half{0.5, 7, false};
    CHECK(eval_kernel(half, KernelPart::ChiIndicator, 0.0) == 1.0);
    CHECK(eval_kernel(half, KernelPart::ChiIndicator, 0.25) == 0.0);
    CHECK(eval_kernel(half, KernelPart::ChiIndicator, -0.25) == 1.0);
    CHECK(eval_kernel(VaalerKernel{0.5, 7, true}, KernelPart::ChiIndicator, 0.0) == 1.0);
    CHECK(eval_kernel(VaalerKernel{0.5, 7, true}, KernelPart::ChiIndicator, 0.5) == 0.0);

    auto g = oracle::rng(42);
    for (int i = 0; i < 2000; ++i) {
        const VaalerKernel k{oracle::uniform(g, 0.01, 0.99), oracle::uniform_int(g, 1, 50), false};
        const double x = oracle::uniform(g, -2, 2);
        REQUIRE(eval_kernel(k, KernelPart::BPoly, x) == doctest::Approx(eval_B_closed(k, x)).epsilon(1e-10));
    }
    // B at x = alpha/2: first Fejer term has the removable limit 1/2
    const VaalerKernel k{0.3, 9, false};
    const double s = std::sin(std::numbers::pi * 10 * 0.3), d = std::sin(std::numbers::pi * 0.3);
    CHECK(eval_B_closed(k, 0.15) == doctest::Approx(0.5 + s * s / (2 * 100 * d * d)).epsilon(1e-12));
    CHECK(eval_kernel(k, KernelPart::BPoly, 0.15) == doctest::Approx(eval_B_closed(k, 0.15)).epsilon(1e-12));

    // mean of chi_H over a period is alpha
    double mean = 0;
    const int n = 4096;
    for (int j = 0; j < n; ++j) mean += eval_kernel(k, KernelPart::ChiPoly, (j + 0.5) / n);
    CHECK(mean / n == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("sandwich inequality") {
    CHECK(sandwich_defect(VaalerKernel{0.5, 7, false}, 10000) <= 1e-9);
    CHECK(sandwich_defect(VaalerKernel{1.0 / 3, 26, false}, 10000) <= 1e-9);
    CHECK(sandwich_defect(VaalerKernel{1.0 / 3, 26, true}, 10000) <= 1e-9);
    auto g = oracle::rng(43);
    for (int i = 0; i < 30; ++i) {
        const VaalerKernel k{oracle::uniform(g, 0.01, 0.99), oracle::uniform_int(g, 1, 120), i % 2 == 1};
        REQUIRE(sandwich_defect(k, 3001) <= 1e-9);
    }
}

TEST_CASE("aliased square sums") {
    for (auto [U, a] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 0}, {2, 1}, {5, 3}, {7, 0}, {16, 5}}) {
        const auto s = aliased_chi_sq_sum(U, a);
        CAPTURE(U);
        CAPTURE(a);
        CHECK(std::fabs(s.value - 1.0 / static_cast<double>(U * U)) <= s.tail_bound + 1e-12);
    }
    CHECK(aliased_chi_sq_sum(2, 0).value == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("convolution lemmas") {
    const auto d1 = convolution_defects(2, 7, 0);
    CHECK(d1.chiB_sum == doctest::Approx(1.0 / 8).epsilon(1e-10));
    const auto d2 = convolution_defects(4, 15, 0);
    CHECK(d2.BB_sum <= 1.0 / 16 + 1e-12);
    const auto d3 = convolution_defects(3, 8, 2);
    CHECK(d3.chiH_defect <= 3.0 / 9);
    CHECK_THROWS_AS(convolution_defects(10, 8, 0), PreconditionError);
    CHECK_THROWS_AS(convolution_defects(1, 8, 0), PreconditionError);

    auto g = oracle::rng(44);
    for (int i = 0; i < 300; ++i) {
        const auto H = oracle::uniform_int(g, 1, 200);
        const auto U = oracle::uniform_int(g, 2, H + 1);
        const auto ell = oracle::uniform_int(g, -3 * H, 3 * H);
        const auto d = convolution_defects(U, H, ell);
        REQUIRE(std::fabs(d.chiB_sum - 1.0 / (H + 1)) < 1e-10);
        REQUIRE(d.BB_sum <= 1.0 / (H + 1) + 1e-12);
        REQUIRE(d.chiH_defect <= 3.0 / (H + 1) + 1e-12);
    }
}

TEST_CASE("exact convolutions") {
    auto g = oracle::rng(45);
    for (int i = 0; i < 20; ++i) {
        const double alpha = oracle::uniform(g, 0.01, 0.5);
        const auto ell = oracle::uniform_int(g, -20, 20);
        const double x = oracle::uniform(g, -1, 1);
        REQUIRE(std::abs(chi_twisted_convolution(alpha, ell, x) - twisted_quadrature(alpha, ell, x)) < 1e-5);
    }
    for (int i = 0; i < 2000; ++i) {
        const double alpha = oracle::uniform(g, 0.01, 0.5);
        const double x = oracle::uniform(g, -3, 3);
        const auto v = chi_twisted_convolution(alpha, 0, x);
        // triangle: alpha - ||x|| on the support, exactly zero outside
        if (norm1(x) >= alpha) REQUIRE(std::abs(v) == 0.0);
        else REQUIRE(v.real() == doctest::Approx(alpha - norm1(x)).epsilon(1e-12));
        const auto ell = oracle::uniform_int(g, 1, 50) * (i % 2 ? 1 : -1);
        const double at0 = std::sin(std::numbers::pi * alpha * ell) / (std::numbers::pi * ell);
        REQUIRE(std::abs(chi_twisted_convolution(alpha, ell, 0.0) - Complex(at0)) < 1e-13);
    }
    // polynomial version against a direct coefficient product
    const VaalerKernel k{0.25, 12, false};
    for (long long ell : {0LL, 3LL, -7LL, 30LL}) {
        const double x = 0.137;
        oracle::C acc = 0;
        for (long long h = -12; h <= 12; ++h)
            acc += static_cast<double>(chiH_hat(0.25L, 12, h) * chiH_hat(0.25L, 12, h - ell)) *
                   oracle::e(static_cast<double>(h) * x);
        REQUIRE(std::abs(chiH_twisted_convolution(k, ell, x) - acc) < 1e-14);
    }
}

TEST_CASE("truncated digit detector") {
    const auto tm = make_digit_exponential(2, Rational(1, 2));
    const auto r = truncated_f_H(tm, 13, 1, 3, 4);
    CHECK(std::abs(r.approx - Complex(-1.0)) <= r.error_bound + 1e-9);
    CHECK(r.error_bound <= 1.0);

    const auto one = StronglyQMultiplicative::constant_one(3);
    const auto r1 = truncated_f_H(one, 1234, 2, 5, 3);
    CHECK(std::abs(r1.approx - Complex(1.0)) <= r1.error_bound + 1e-9);

    CHECK_THROWS_AS(truncated_f_H(tm, 13, 1, 3, 0), PreconditionError);
    CHECK_THROWS_AS(truncated_f_H(tm, 13, 3, 3, 2), PreconditionError);

    auto g = oracle::rng(46);
    for (auto [q, gamma] : std::vector<std::pair<std::uint64_t, Rational>>{
             {2, Rational(1, 2)}, {3, Rational(1, 3)}, {5, Rational(2, 7)}}) {
        const auto ff = make_digit_exponential(q, gamma);
        for (int i = 0; i < 150; ++i) {
            const auto k1 = static_cast<unsigned>(oracle::uniform_int(g, 0, 4));
            const auto lam = static_cast<unsigned>(oracle::uniform_int(g, 1, q == 2 ? 7 : 4));
            const auto K = oracle::uniform_int(g, 1, 6);
            const i128 a = oracle::uniform_int(g, -100000, 100000);
            const auto v = truncated_f_H(ff, a, k1, k1 + lam, K);
            REQUIRE(v.error_bound <= 1.0 + 1e-12);
            REQUIRE(std::abs(eval_truncated(ff, a, k1, k1 + lam) - v.approx) <= v.error_bound + 1e-9);
        }
    }
}

TEST_CASE("L2 and L1 means against F") {
    auto g = oracle::rng(47);
    for (auto [q, gamma] : std::vector<std::pair<std::uint64_t, Rational>>{
             {2, Rational(1, 2)}, {3, Rational(1, 3)}, {5, Rational(1, 5)}}) {
        const auto ff = make_digit_exponential(q, gamma);
        for (int i = 0; i < 40; ++i) {
            const auto k1 = static_cast<unsigned>(oracle::uniform_int(g, 0, 3));
            const auto lam = static_cast<unsigned>(oracle::uniform_int(g, 1, q == 5 ? 5 : 8));
            const auto K = oracle::uniform_int(g, 1, 8);
            const double t = oracle::uniform(g, 0, 100);
            const auto l2 = l2_mean_chiH_F(ff, k1, k1 + lam, K, t);
            REQUIRE(l2.bound == doctest::Approx(std::pow(static_cast<double>(q), -2.0 * lam)).epsilon(1e-14));
            REQUIRE(l2.value <= l2.bound + 1e-12);
            const auto l1 = l1_mean_chiH_F(ff, k1, k1 + lam, K, t);
            REQUIRE(l1.value <= l1.bound + 1e-12);
        }
    }
}
