#include "sqdigits/expsums.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <numbers>

#include "sqdigits/errors.hpp"

namespace sqdigits {

namespace {

constexpr double kPi = std::numbers::pi;

BoundReport report(double exact, double bound, bool explicit_constant) {
    BoundReport r;
    r.exact = exact;
    r.bound = bound;
    r.ratio = bound > 0.0 ? exact / bound : (exact == 0.0 ? 0.0 : INFINITY);
    r.explicit_constant = explicit_constant;
    return r;
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(gcd_u64(static_cast<std::uint64_t>(std::llabs(a)),
                                             static_cast<std::uint64_t>(std::llabs(b))));
}

i128 mod_i128(i128 v, i128 m) {
    i128 r = v % m;
    return r < 0 ? r + m : r;
}

// e((a n^2 + b n) / m) summed over n0 < n <= n0 + N with exact residues.
double quadratic_rational_sum(std::int64_t a, std::int64_t b, std::int64_t m, std::int64_t n0, std::int64_t N) {
    CompensatedComplexSum acc;
    for (std::int64_t n = n0 + 1; n <= n0 + N; ++n) {
        const i128 nm = mod_i128(n, m);
        const i128 phase = mod_i128(mod_i128(a, m) * nm % m * nm + mod_i128(b, m) * nm, m);
        acc.add(expi2pi_ratio(phase, static_cast<u128>(m)));
    }
    return std::abs(acc.value());
}

double log_inv_dist(double xi) { return std::log(1.0 / dist1(xi)); }

void require_non_integer(double xi, const char* what) {
    if (dist1(xi) == 0.0) throw DomainError(std::string(what) + " must not be an integer");
}

constexpr std::size_t kBilinearChunks = 64;

template <typename TermFn>
Complex chunked_bilinear(std::size_t M, std::size_t N, unsigned threads, const TermFn& term) {
    const std::size_t chunks = std::min(kBilinearChunks, std::max<std::size_t>(M, 1));
    std::vector<CompensatedComplexSum> partial(chunks);
    parallel_chunks(chunks, threads, [&](std::size_t c) {
        const std::size_t lo = M * c / chunks;
        const std::size_t hi = M * (c + 1) / chunks;
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = 0; j < N; ++j) partial[c].add(term(i, j));
    });
    CompensatedComplexSum total;
    for (const auto& p : partial) total.merge(p);
    return total.value();
}

}  // namespace

BoundReport geometric_sum(std::int64_t L1, std::int64_t L2, double xi) {
    if (L1 > L2) throw PreconditionError("geometric_sum requires L1 <= L2");
    // |sum| is unchanged by the unimodular factor e(L1 xi), so sum over 1..L2-L1.
    const double x = frac(xi);
    CompensatedComplexSum shifted;
    for (std::int64_t l = 1; l <= L2 - L1; ++l) shifted.add(expi2pi_mul(x, static_cast<u128>(l)));
    const double exact = std::abs(shifted.value());
    const double len = static_cast<double>(L2 - L1);
    const double s = std::fabs(std::sin(kPi * x));
    const double bound = dist1(x) == 0.0 ? len : std::min(len, 1.0 / s);
    return report(exact, bound, true);
}

BoundReport min_sum(std::int64_t N1, std::int64_t N2, double M, double xi, double phi) {
    require_non_integer(xi, "xi");
    if (!(M > 0.0)) throw PreconditionError("min_sum requires M > 0");
    if (N1 > N2) throw PreconditionError("min_sum requires N1 <= N2");
    const long double x = static_cast<long double>(xi) - std::floor(static_cast<long double>(xi));
    CompensatedSum acc;
    for (std::int64_t n = N1 + 1; n <= N2; ++n) {
        const long double p = frac(x * static_cast<long double>(n) + static_cast<long double>(phi));
        const double s = std::fabs(std::sin(kPi * static_cast<double>(p)));
        acc.add(s == 0.0 ? M : std::min(M, 1.0 / s));
    }
    const double d = dist1(xi);
    const double bound = (3.0 + std::floor(static_cast<double>(N2 - N1) * d)) * (3.0 * M + (1.0 / d) * std::log(1.0 / d));
    return report(acc.value(), bound, false);
}

BoundReport gauss_complete(std::int64_t a, std::int64_t b, std::int64_t m) {
    if (m < 1) throw PreconditionError("gauss_complete requires m >= 1");
    const double exact = quadratic_rational_sum(a, b, m, -1, m);
    const double g = static_cast<double>(gcd_i64(a, m));
    return report(exact, std::sqrt(2.0 * static_cast<double>(m) * g), true);
}

BoundReport gauss_incomplete(std::int64_t a, std::int64_t b, std::int64_t m, std::int64_t n0, std::int64_t N) {
    if (m < 1) throw PreconditionError("gauss_incomplete requires m >= 1");
    if (N < 0) throw PreconditionError("gauss_incomplete requires N >= 0");
    const double exact = quadratic_rational_sum(a, b, m, n0, N);
    const double md = static_cast<double>(m);
    const double g = static_cast<double>(gcd_i64(a, m));
    const double bound =
        (static_cast<double>(N) / md + 1.0 + (2.0 / kPi) * std::log(2.0 * md / kPi)) * std::sqrt(2.0 * md * g);
    return report(exact, bound, true);
}

BoundReport weyl_quadratic(double alpha, double beta, double gamma, std::int64_t n0, std::int64_t N, std::int64_t a,
                           std::int64_t m) {
    if (m < 2) throw PreconditionError("weyl_quadratic requires m >= 2");
    if (N < 1) throw PreconditionError("weyl_quadratic requires N >= 1");
    if (gcd_i64(a, m) != 1) throw PreconditionError("weyl_quadratic requires gcd(a, m) = 1");
    const double md = static_cast<double>(m);
    if (std::fabs(alpha - static_cast<double>(a) / md) > 1.0 / (md * md) * (1.0 + 1e-12))
        throw PreconditionError("weyl_quadratic requires |alpha - a/m| <= 1/m^2");
    const long double al = static_cast<long double>(alpha) - std::floor(static_cast<long double>(alpha));
    const long double be = static_cast<long double>(beta) - std::floor(static_cast<long double>(beta));
    CompensatedComplexSum acc;
    for (std::int64_t n = n0 + 1; n <= n0 + N; ++n) {
        const long double nl = static_cast<long double>(n);
        const long double p = frac(frac(al * nl * nl) + frac(be * nl) + static_cast<long double>(gamma));
        acc.add(expi2pi(static_cast<double>(p)));
    }
    const double Nd = static_cast<double>(N);
    const double lm = std::log(md);
    return report(std::abs(acc.value()), Nd / std::sqrt(md) + std::sqrt(Nd * lm) + std::sqrt(md * lm), false);
}

BoundReport gcd_average(std::int64_t m, std::int64_t A, double gamma) {
    if (m < 1 || A < 1) throw PreconditionError("gcd_average requires m >= 1 and A >= 1");
    CompensatedSum acc;
    for (std::int64_t a = 1; a <= A; ++a) acc.add(std::pow(static_cast<double>(gcd_i64(a, m)), gamma));
    CompensatedSum sigma;
    for (std::int64_t d = 1; d <= m; ++d)
        if (m % d == 0) sigma.add(std::pow(static_cast<double>(d), gamma - 1.0));
    return report(acc.value() / static_cast<double>(A), sigma.value(), true);
}

BoundReport second_derivative_test(double theta, std::int64_t N) {
    if (N < 1) throw PreconditionError("second_derivative_test requires N >= 1");
    if (theta == 0.0) throw PreconditionError("second_derivative_test requires theta != 0");
    const long double th = static_cast<long double>(theta) - std::floor(static_cast<long double>(theta));
    CompensatedComplexSum acc;
    for (std::int64_t n = 1; n <= N; ++n) {
        const long double nl = static_cast<long double>(n);
        acc.add(expi2pi(static_cast<double>(frac(th * nl * nl))));
    }
    const double l2 = 2.0 * std::fabs(theta);
    return report(std::abs(acc.value()), std::sqrt(l2) * static_cast<double>(N) + 1.0 / std::sqrt(l2), false);
}

DivisorBounds divisor_bounds(std::uint64_t q, unsigned lambda, double x) {
    if (q < 2 || lambda < 1 || !(x < 0.0)) throw PreconditionError("divisor_bounds requires q >= 2, lambda >= 1, x < 0");
    std::vector<std::pair<std::uint64_t, unsigned>> factors;
    std::uint64_t rest = q;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) factors.emplace_back(p, e);
    }
    if (rest > 1) factors.emplace_back(rest, 1);

    DivisorBounds out;
    const double omega = static_cast<double>(factors.size());
    std::uint64_t tau_q = 1;
    out.tau_val = 1;
    out.sigma_val = 1.0;
    out.sigma_bound = 1.0;
    for (const auto& [p, e] : factors) {
        tau_q *= e + 1;
        out.tau_val *= static_cast<std::uint64_t>(e) * lambda + 1;
        const double px = std::pow(static_cast<double>(p), x);
        double local = 0.0;
        for (std::uint64_t j = 0; j <= static_cast<std::uint64_t>(e) * lambda; ++j)
            local += std::pow(static_cast<double>(p), x * static_cast<double>(j));
        out.sigma_val *= local;
        out.sigma_bound *= 1.0 / (1.0 - px);
    }
    out.tau_lower = std::pow(1.0 + lambda, omega);
    out.tau_upper = static_cast<double>(tau_q) * std::pow(static_cast<double>(lambda), omega);
    return out;
}

VdcCheck vdc_variant_check(const std::vector<Complex>& z, std::int64_t N_prime, std::int64_t R) {
    const auto N = static_cast<std::int64_t>(z.size());
    if (N < 1 || N_prime < 1 || R < 1) throw PreconditionError("vdc_variant_check requires N, N', R >= 1");
    CompensatedComplexSum total;
    CompensatedSum energy;
    for (const Complex& v : z) {
        total.add(v);
        energy.add(abs2(v));
    }
    CompensatedSum corr;
    corr.add(energy.value());
    for (std::int64_t r = 1; r < R; ++r) {
        const std::int64_t shift = N_prime * r;
        if (shift >= N) break;
        CompensatedSum inner;
        for (std::int64_t n = 0; n + shift < N; ++n) inner.add((z[n + shift] * std::conj(z[n])).real());
        corr.add(2.0 * (1.0 - static_cast<double>(r) / static_cast<double>(R)) * inner.value());
    }
    VdcCheck out;
    out.lhs = abs2(total.value());
    out.rhs = static_cast<double>(N + N_prime * R - N_prime) / static_cast<double>(R) * corr.value();
    return out;
}

Complex bilinear_quadratic_sum(const std::vector<Complex>& a, const std::vector<Complex>& b,
                               const std::array<double, 4>& xi, unsigned threads) {
    std::array<long double, 4> x{};
    for (int i = 0; i < 4; ++i) x[i] = static_cast<long double>(xi[i]) - std::floor(static_cast<long double>(xi[i]));
    return chunked_bilinear(a.size(), b.size(), threads, [&](std::size_t i, std::size_t j) {
        const long double m = static_cast<long double>(i + 1);
        const long double n = static_cast<long double>(j + 1);
        const long double p =
            frac(x[3] * (m * m * n * n)) + frac(x[2] * (m * n * n)) + frac(x[1] * (m * m * n)) + frac(x[0] * (m * n));
        return a[i] * b[j] * expi2pi(static_cast<double>(frac(p)));
    });
}

Complex bilinear_quadratic_sum(const std::vector<Complex>& a, const std::vector<Complex>& b,
                               const std::array<Rational, 4>& xi, unsigned threads) {
    std::int64_t D = 1;
    for (const Rational& r : xi) D = lcm_checked(D, r.den());
    std::array<i128, 4> P{};
    for (int i = 0; i < 4; ++i) {
        const Rational r = xi[i].frac();
        P[i] = static_cast<i128>(r.num()) * (D / r.den());
    }
    const i128 Dm = D;
    return chunked_bilinear(a.size(), b.size(), threads, [&](std::size_t i, std::size_t j) {
        const i128 m = static_cast<i128>(i + 1) % Dm;
        const i128 n = static_cast<i128>(j + 1) % Dm;
        const i128 mn = m * n % Dm;
        const i128 phase = (P[3] * (mn * mn % Dm) % Dm + P[2] * (mn * n % Dm) % Dm + P[1] * (mn * m % Dm) % Dm +
                            P[0] * mn % Dm) %
                           Dm;
        return a[i] * b[j] * expi2pi_ratio(phase, static_cast<u128>(Dm));
    });
}

double bound_mn2(std::int64_t M, std::int64_t N, double xi3) {
    require_non_integer(xi3, "xi3");
    const double d = dist1(xi3);
    const double L = log_inv_dist(xi3);
    const double Md = static_cast<double>(M), Nd = static_cast<double>(N);
    return std::sqrt(d) + L * L / (Md * Nd * Nd * d) + 1.0 / Nd + L * L / Md;
}

double bound_xi2(std::int64_t M, std::int64_t N, double xi2) {
    require_non_integer(xi2, "xi2");
    const double d = dist1(xi2);
    const double Md = static_cast<double>(M), Nd = static_cast<double>(N);
    return std::cbrt(d) + 1.0 / (Md * std::sqrt(Nd) * std::sqrt(d)) + 1.0 / std::sqrt(Md) + 1.0 / Nd;
}

double bound_m2n2(std::int64_t M, std::int64_t N, double xi4) {
    require_non_integer(xi4, "xi4");
    const double d = dist1(xi4);
    const double L = log_inv_dist(xi4);
    const double Md = static_cast<double>(M), Nd = static_cast<double>(N);
    const double bracket = 1.0 / (d * Md * Md * Nd * Nd) + std::pow(d, -0.6) / (Md * Nd * Nd) +
                           std::pow(d, -0.8) / (Md * Md * Nd) + std::pow(d, -0.4) / (Md * Nd);
    return std::pow(d, 0.4) + 1.0 / Nd + L / Md + bracket * L * L * L;
}

}  // namespace sqdigits
