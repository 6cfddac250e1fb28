#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sqdigits/errors.hpp"
#include "sqdigits/expsums.hpp"

using namespace sqdigits;

namespace {

const double kPi = std::numbers::pi;

double gauss_oracle(std::int64_t a, std::int64_t b, std::int64_t m, std::int64_t n0, std::int64_t N) {
    oracle::C acc = 0;
    for (std::int64_t n = n0 + 1; n <= n0 + N; ++n) {
        const std::int64_t r = ((a % m) * ((n % m) * (n % m) % m) % m + (b % m) * (n % m)) % m;
        acc += oracle::e(static_cast<double>((r + m) % m) / static_cast<double>(m));
    }
    return std::abs(acc);
}

double sigma(std::int64_t m, double s) {
    double acc = 0;
    for (std::int64_t d = 1; d <= m; ++d)
        if (m % d == 0) acc += std::pow(static_cast<double>(d), s);
    return acc;
}

}  // namespace

TEST_CASE("geometric series") {
    const auto r1 = geometric_sum(0, 4, 0.5);
    CHECK(r1.exact < 1e-12);
    CHECK(r1.bound == doctest::Approx(1.0));
    const auto r2 = geometric_sum(0, 37, 0.0);
    CHECK(r2.exact == doctest::Approx(37.0));
    CHECK(r2.bound == 37.0);
    CHECK(r2.ratio == doctest::Approx(1.0));
    const auto r3 = geometric_sum(0, 100, 1.0 / 7);
    CHECK(r3.exact <= 1.0 / std::sin(kPi / 7) + 1e-12);
    CHECK(r3.explicit_constant);

    auto g = oracle::rng(51);
    for (int i = 0; i < 10000; ++i) {
        const auto L1 = oracle::uniform_int(g, -1000000, 1000000);
        const auto L2 = L1 + oracle::uniform_int(g, 0, 2000);
        const double xi = oracle::uniform(g, -3, 3);
        const auto r = geometric_sum(L1, L2, xi);
        REQUIRE(r.ratio <= 1 + 1e-9);
        if (i % 100 == 0) {
            oracle::C acc = 0;
            for (auto l = L1 + 1; l <= L2; ++l) {
                const long double ph = static_cast<long double>(l) * xi;
                acc += oracle::e(static_cast<double>(ph - std::floor(ph)));
            }
            REQUIRE(r.exact == doctest::Approx(std::abs(acc)).epsilon(1e-9).scale(1.0));
        }
    }
}

TEST_CASE("sum of minimums") {
    const auto one = min_sum(5, 6, 3.0, 0.3, 0.1);
    CHECK(one.exact <= 3.0);
    CHECK_FALSE(one.explicit_constant);
    CHECK_THROWS_AS(min_sum(0, 10, 3.0, 2.0, 0.0), DomainError);
    const double xi = 1 / std::sqrt(2.0);
    const auto r = min_sum(0, 1000, 50, xi, 0.0);
    CHECK(std::isfinite(r.ratio));
    double first = 0;
    for (std::int64_t N : {100, 1000, 10000}) {
        const auto s = min_sum(0, N, 50, xi, 0.0);
        if (first == 0) first = s.ratio;
        CHECK(s.ratio <= 2 * first);
    }
}

TEST_CASE("complete Gauss sums") {
    const auto z = gauss_complete(0, 0, 9);
    CHECK(z.exact == doctest::Approx(9.0));
    CHECK(z.bound == doctest::Approx(9 * std::sqrt(2.0)));
    const auto e4 = gauss_complete(1, 0, 4);
    CHECK(e4.exact == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(e4.ratio == doctest::Approx(1.0).epsilon(1e-12));
    const auto e17 = gauss_complete(3, 1, 17);
    CHECK(e17.exact == doctest::Approx(std::sqrt(17.0)).epsilon(1e-12));
    CHECK(e17.bound == doctest::Approx(std::sqrt(34.0)).epsilon(1e-14));

    for (std::int64_t m = 1; m <= 64; ++m)
        for (std::int64_t a = 0; a < m; ++a)
            for (std::int64_t b = 0; b < m; ++b) {
                const auto r = gauss_complete(a, b, m);
                REQUIRE(r.ratio <= 1 + 1e-9);
                if ((a * 7 + b) % 31 == 0) REQUIRE(std::fabs(r.exact - gauss_oracle(a, b, m, 0, m)) < 1e-9);
            }
}

TEST_CASE("incomplete Gauss sums") {
    CHECK(gauss_incomplete(1, 2, 7, 3, 0).exact == 0.0);
    const auto r = gauss_incomplete(1, 0, 4, 0, 4);
    CHECK(r.exact == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(r.bound == doctest::Approx((2 + 2 / kPi * std::log(8 / kPi)) * std::sqrt(8.0)).epsilon(1e-14));
    auto g = oracle::rng(52);
    for (int i = 0; i < 20000; ++i) {
        const auto m = oracle::uniform_int(g, 1, 64);
        const auto a = oracle::uniform_int(g, -200, 200);
        const auto b = oracle::uniform_int(g, -200, 200);
        const auto n0 = oracle::uniform_int(g, -1000, 1000);
        const auto N = oracle::uniform_int(g, 0, 3 * m);
        const auto s = gauss_incomplete(a, b, m, n0, N);
        REQUIRE(s.ratio <= 1 + 1e-9);
        if (i % 50 == 0) REQUIRE(std::fabs(s.exact - gauss_oracle(a, b, m, n0, N)) < 1e-9);
    }
}

TEST_CASE("Weyl sums") {
    CHECK(weyl_quadratic(0.3, 0.1, 0.2, 0, 1, 1, 3).exact == doctest::Approx(1.0));
    const auto g1 = weyl_quadratic(3.0 / 11, 0.0, 0.0, 0, 11, 3, 11);
    CHECK(std::isfinite(g1.ratio));
    CHECK(g1.exact == doctest::Approx(gauss_oracle(3, 0, 11, 0, 11)).epsilon(1e-9));
    CHECK_FALSE(g1.explicit_constant);
    // convergents of the golden ratio conjugate are ratios of Fibonacci numbers
    const double phi = (std::sqrt(5.0) - 1) / 2;
    std::int64_t a = 1, m = 1;
    while (m < 987) {
        const auto t = a + m;
        a = m;
        m = t;
    }
    REQUIRE(m == 987);
    REQUIRE(a == 610);
    const auto w = weyl_quadratic(phi, 0.1, 0.0, 0, 10000, a, m);
    CHECK(std::isfinite(w.ratio));
    CHECK(w.ratio < 1);
    CHECK_THROWS_AS(weyl_quadratic(0.5, 0, 0, 0, 10, 1, 3), PreconditionError);
    CHECK_THROWS_AS(weyl_quadratic(0.5, 0, 0, 0, 10, 2, 4), PreconditionError);
    CHECK_THROWS_AS(weyl_quadratic(0.5, 0, 0, 0, 10, 1, 1), PreconditionError);
}

TEST_CASE("gcd averages") {
    CHECK(gcd_average(1, 17, 0.7).exact == doctest::Approx(1.0));
    CHECK(gcd_average(1, 17, 0.7).bound == doctest::Approx(1.0));
    const auto r = gcd_average(6, 6, 1.0);
    CHECK(r.exact == doctest::Approx(2.5));
    CHECK(r.bound == doctest::Approx(4.0));
    const auto r12 = gcd_average(12, 100, 0.5);
    CHECK(r12.ratio <= 1);
    CHECK(r12.bound == doctest::Approx(sigma(12, -0.5)).epsilon(1e-14));
    for (std::int64_t m = 1; m <= 200; ++m)
        for (std::int64_t A = 1; A <= 500; A += (A < 50 ? 1 : 7))
            for (double gm : {0.5, 1.0, 2.0}) REQUIRE(gcd_average(m, A, gm).ratio <= 1 + 1e-9);
}

TEST_CASE("second derivative test scaling") {
    // C fitted at N = 64, then the doubling sweep to 4096. For theta = 1e-3 the
    // N = 64 point sits before the first stationary phase (N < 1/(2 theta)) and the
    // ratio roughly doubles on the way up, so only the constant-1 check applies there.
    for (double theta : {std::sqrt(2.0) / 100, 0.0123, std::sqrt(3.0) / 20}) {
        const double C = second_derivative_test(theta, 64).ratio;
        for (std::int64_t N = 128; N <= 4096; N *= 2) {
            const auto r = second_derivative_test(theta, N);
            CHECK_FALSE(r.explicit_constant);
            CHECK(r.ratio <= 2 * C);
        }
    }
    for (std::int64_t N = 64; N <= 4096; N *= 2) CHECK(second_derivative_test(1e-3, N).ratio <= 1.0);
}

TEST_CASE("divisor bounds") {
    for (std::uint64_t p : {2, 3, 7, 101})
        for (unsigned lam = 1; lam <= 6; ++lam) {
            const auto d = divisor_bounds(p, lam, -1.0);
            REQUIRE(d.tau_val == lam + 1);
            REQUIRE(d.tau_lower == doctest::Approx(lam + 1.0));
        }
    const auto d6 = divisor_bounds(6, 2, -0.5);
    CHECK(d6.tau_val == 9);
    CHECK(d6.tau_lower == doctest::Approx(9.0));
    CHECK(d6.tau_upper == doctest::Approx(16.0));
    const auto d2 = divisor_bounds(2, 3, -1.0);
    CHECK(d2.sigma_val == doctest::Approx(1.875));
    CHECK(d2.sigma_bound == doctest::Approx(2.0));
    for (std::uint64_t q = 2; q <= 60; ++q)
        for (unsigned lam = 1; lam <= 5; ++lam)
            for (double x : {-0.25, -1.0, -2.0}) {
                const auto d = divisor_bounds(q, lam, x);
                // tau and sigma of q^lam from the trial-division factorization of q
                std::uint64_t tau = 1;
                double sig = 1;
                std::uint64_t r = q;
                for (std::uint64_t p = 2; p <= r; ++p) {
                    unsigned e = 0;
                    while (r % p == 0) r /= p, ++e;
                    if (e == 0) continue;
                    tau *= e * lam + 1;
                    double part = 0;
                    for (unsigned k = 0; k <= e * lam; ++k) part += std::pow(static_cast<double>(p), x * k);
                    sig *= part;
                }
                REQUIRE(d.tau_val == tau);
                REQUIRE(d.tau_lower <= static_cast<double>(tau) + 1e-9);
                REQUIRE(static_cast<double>(tau) <= d.tau_upper + 1e-9);
                REQUIRE(d.sigma_val == doctest::Approx(sig).epsilon(1e-12));
                REQUIRE(d.sigma_val <= d.sigma_bound * (1 + 1e-12));
            }
}

TEST_CASE("van der Corput variant") {
    std::vector<Complex> ones(50, Complex(1.0));
    const auto eq = vdc_variant_check(ones, 1, 1);
    CHECK(eq.lhs == doctest::Approx(2500.0));
    CHECK(eq.rhs == doctest::Approx(2500.0));
    auto g = oracle::rng(53);
    for (int i = 0; i < 1000; ++i) {
        const auto N = oracle::uniform_int(g, 1, 200);
        std::vector<Complex> z(static_cast<std::size_t>(N));
        for (auto& v : z) v = Complex(oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1));
        const auto r = vdc_variant_check(z, oracle::uniform_int(g, 1, 10), oracle::uniform_int(g, 1, 30));
        REQUIRE(r.lhs <= r.rhs + 1e-9 * std::max(1.0, r.rhs));
    }
    std::vector<Complex> w(256);
    for (int n = 1; n <= 256; ++n) w[n - 1] = oracle::e(n * static_cast<double>(n) * 0.0123);
    const auto r = vdc_variant_check(w, 1, 16);
    CHECK(r.lhs <= r.rhs);
}

TEST_CASE("bilinear quadratic sums") {
    std::vector<Complex> a(30, Complex(1.0)), b(40, Complex(1.0));
    CHECK(std::abs(bilinear_quadratic_sum(a, b, std::array<double, 4>{0, 0, 0, 0}) - Complex(1200.0)) < 1e-9);

    // direct oracle, and thread-count independence
    auto g = oracle::rng(54);
    std::vector<Complex> ra(70), rb(50);
    for (auto& v : ra) v = oracle::e(oracle::uniform(g, 0, 1));
    for (auto& v : rb) v = oracle::e(oracle::uniform(g, 0, 1)) * 0.5;
    const std::array<double, 4> xi{0.11, 0.013, 0.0031, 0.00071};
    oracle::C acc = 0;
    for (int m = 1; m <= 70; ++m)
        for (int n = 1; n <= 50; ++n) {
            const long double M = m, N = n;
            const long double ph = xi[3] * M * M * N * N + xi[2] * M * N * N + xi[1] * M * M * N + xi[0] * M * N;
            acc += ra[m - 1] * rb[n - 1] * oracle::e(static_cast<double>(ph - std::floor(ph)));
        }
    const Complex s1 = bilinear_quadratic_sum(ra, rb, xi, 1);
    CHECK(std::abs(s1 - acc) < 1e-9);
    const Complex s4 = bilinear_quadratic_sum(ra, rb, xi, 4);
    CHECK(s1 == s4);

    const std::array<Rational, 4> xr{Rational(1, 3), Rational(2, 7), Rational(5, 11), Rational(1, 101)};
    const std::array<double, 4> xd{1.0 / 3, 2.0 / 7, 5.0 / 11, 1.0 / 101};
    CHECK(std::abs(bilinear_quadratic_sum(ra, rb, xr) - bilinear_quadratic_sum(ra, rb, xd)) < 1e-8);

    CHECK(bound_mn2(10, 10, 0.5) >= std::sqrt(0.5));
    CHECK_THROWS_AS(bound_mn2(10, 10, 3.0), DomainError);
    CHECK_THROWS_AS(bound_xi2(10, 10, -1.0), DomainError);
    CHECK_THROWS_AS(bound_m2n2(10, 10, 0.0), DomainError);
}

namespace {

// b_n = 1 and a_m the unit phase aligning row m, the coefficient choice that maximizes |sum|.
double extremal_ratio(int family, double freq, std::int64_t M) {
    std::array<double, 4> xi{0, 0, 0, 0};
    xi[family == 0 ? 2 : family == 1 ? 1 : 3] = freq;
    std::vector<Complex> a(static_cast<std::size_t>(M)), b(static_cast<std::size_t>(M), Complex(1.0));
    for (std::int64_t m = 1; m <= M; ++m) {
        oracle::C row = 0;
        for (std::int64_t n = 1; n <= M; ++n) {
            const long double L = static_cast<long double>(m), N = static_cast<long double>(n);
            const long double ph = xi[3] * L * L * N * N + xi[2] * L * N * N + xi[1] * L * L * N;
            row += oracle::e(static_cast<double>(ph - std::floor(ph)));
        }
        a[m - 1] = std::abs(row) > 0 ? std::conj(row) / std::abs(row) : Complex(1.0);
    }
    const double norm = std::abs(bilinear_quadratic_sum(a, b, xi)) / static_cast<double>(M * M);
    if (family == 0) return norm * norm / bound_mn2(M, M, freq);
    if (family == 1) return norm * norm / bound_xi2(M, M, freq);
    return std::pow(norm, 4) / bound_m2n2(M, M, freq);
}

}  // namespace

TEST_CASE("double sum bounds keep bounded ratios") {
    const double golden = (std::sqrt(5.0) - 1) / 2;
    for (int family = 0; family < 3; ++family) {
        for (double freq : {golden, std::sqrt(2.0) / 10, 0.3}) {
            const double first = extremal_ratio(family, freq, 32);
            for (std::int64_t M = 64; M <= 256; M *= 2) {
                CAPTURE(family);
                CAPTURE(freq);
                CAPTURE(M);
                CHECK(extremal_ratio(family, freq, M) <= 2 * first);
            }
        }
        // 1/||xi|| comparable to M is pre-asymptotic at M = 32; the constant-1 form still holds
        for (double freq : {1.0 / 17, 1.0 / 101})
            for (std::int64_t M = 32; M <= 256; M *= 2) CHECK(extremal_ratio(family, freq, M) <= 1.0);
    }
}
