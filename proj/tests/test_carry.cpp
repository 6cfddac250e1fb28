#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "sqdigits/carry.hpp"
#include "sqdigits/errors.hpp"

using namespace sqdigits;

namespace {

using U = unsigned __int128;

U upow(std::uint64_t q, unsigned k) {
    U r = 1;
    for (unsigned i = 0; i < k; ++i) r *= q;
    return r;
}

// digit sum of the digits of x with index in [k1, k2)
std::uint64_t window_sum(U x, std::uint64_t q, unsigned k1, unsigned k2) {
    return oracle::digit_sum((x % upow(q, k2)) / upow(q, k1), q);
}

// f = e(u s_q(n) / v): phases compared as integers mod v.
struct DigitExp {
    std::uint64_t q, u, v;
    std::int64_t full(U x) const { return static_cast<std::int64_t>(oracle::digit_sum(x, q) * u % v); }
    std::int64_t trunc(U x, unsigned k1, unsigned k2) const {
        return static_cast<std::int64_t>(window_sum(x, q, k1, k2) * u % v);
    }
    std::int64_t mod(std::int64_t a) const { return ((a % (std::int64_t)v) + (std::int64_t)v) % (std::int64_t)v; }
};

std::uint64_t brute_count(const DigitExp& f, std::uint64_t m, unsigned nu, std::uint64_t r, unsigned lambda) {
    std::uint64_t c = 0;
    const U M2 = U(m) * m;
    for (U n = upow(f.q, nu - 1); n < upow(f.q, nu); ++n) {
        const U a = M2 * (n + r) * (n + r), b = M2 * n * n;
        if (f.mod(f.trunc(a, 0, lambda) - f.trunc(b, 0, lambda)) != f.mod(f.full(a) - f.full(b))) ++c;
    }
    return c;
}

std::uint64_t brute_second(const DigitExp& f, std::uint64_t m, std::uint64_t m2, unsigned nu, std::uint64_t r,
                           unsigned kappa, unsigned lambda) {
    std::uint64_t c = 0;
    for (U n = upow(f.q, nu - 1); n < upow(f.q, nu); ++n) {
        const U x[4] = {U(m2) * m2 * (n + r) * (n + r), U(m2) * m2 * n * n, U(m) * m * (n + r) * (n + r),
                        U(m) * m * n * n};
        const std::int64_t t = f.trunc(x[0], kappa, lambda) - f.trunc(x[1], kappa, lambda) -
                               f.trunc(x[2], kappa, lambda) + f.trunc(x[3], kappa, lambda);
        const std::int64_t g = f.full(x[0]) - f.full(x[1]) - f.full(x[2]) + f.full(x[3]);
        if (f.mod(t) != f.mod(g)) ++c;
    }
    return c;
}

}  // namespace

TEST_CASE("CarrySpec validation") {
    CHECK_NOTHROW((CarrySpec{2, 3, 6, 1, 1, 5, 1}.validate()));
    CHECK_THROWS_AS((CarrySpec{2, 3, 6, 1, 1, 8, 1}.validate()), PreconditionError);
    CHECK_THROWS_AS((CarrySpec{2, 3, 6, 1, 1, 3, 1}.validate()), PreconditionError);
    // lambda = 6 + 2 + 3 + 3 = 14 >= 2 mu + 2 nu = 10
    CHECK_THROWS_AS((CarrySpec{2, 3, 2, 3, 3, 5, 1}.validate()), PreconditionError);
    CHECK_THROWS_AS((CarrySpec{2, 30, 40, 1, 1, std::uint64_t{1} << 29, 1}.validate()), RangeError);
}

TEST_CASE("small instance") {
    const auto tm = make_digit_exponential(2, Rational(1, 2));
    const CarrySpec s{2, 3, 6, 1, 1, 5, 1};
    CHECK(s.lambda() == 14);
    CHECK(count_mismatch(s, tm) == 3);
    CHECK(brute_count({2, 1, 2}, 5, 6, 1, 14) == 3);
    CHECK(count_mismatch(CarrySpec{2, 3, 6, 1, 1, 5, 0}, tm) == 0);
}

TEST_CASE("counts agree with brute force") {
    const std::vector<std::pair<DigitExp, StronglyQMultiplicative>> fs = {
        {{2, 1, 2}, make_digit_exponential(2, Rational(1, 2))},
        {{3, 1, 3}, make_digit_exponential(3, Rational(1, 3))},
        {{3, 2, 7}, make_digit_exponential(3, Rational(2, 7))},
        {{5, 1, 4}, make_digit_exponential(5, Rational(1, 4))}};
    for (const auto& [o, f] : fs) {
        const std::uint64_t q = o.q;
        for (unsigned mu = 1; mu <= 3; ++mu)
            for (unsigned nu = 2; nu <= (q == 2 ? 9u : q == 3 ? 6u : 4u); ++nu)
                for (unsigned rho = 0; rho <= 1; ++rho)
                    for (unsigned rt = 0; rt <= 3; ++rt) {
                        if (2 * mu + nu + rho + rt >= 2 * mu + 2 * nu) continue;
                        const auto lo = static_cast<std::uint64_t>(upow(q, mu - 1));
                        for (std::uint64_t m = lo; m < lo * q; m += std::max<std::uint64_t>(1, lo * q / 5))
                            for (std::uint64_t r : {std::uint64_t{0}, std::uint64_t{1}, q - 1, q + 1}) {
                                const CarrySpec s{q, mu, nu, rho, rt, m, r};
                                REQUIRE(count_mismatch(s, f) == brute_count(o, m, nu, r, s.lambda()));
                            }
                    }
    }
}

TEST_CASE("floating phases match exact phases") {
    const auto exact = make_digit_exponential(3, Rational(1, 3));
    const auto fl = StronglyQMultiplicative::from_phases(3, std::vector<double>{0.0, 1.0 / 3, 2.0 / 3});
    for (unsigned nu = 3; nu <= 6; ++nu)
        for (std::uint64_t m = 3; m < 9; ++m) {
            const CarrySpec s{3, 2, nu, 1, 1, m, 2};
            if (s.lambda() >= 2 * 2 + 2 * nu) continue;
            REQUIRE(count_mismatch(s, exact) == count_mismatch(s, fl));
        }
}

TEST_CASE("monotone in rho_tilde") {
    const auto tm = make_digit_exponential(2, Rational(1, 2));
    for (unsigned nu = 6; nu <= 12; ++nu)
        for (std::uint64_t m = 4; m < 8; ++m) {
            std::uint64_t prev = UINT64_MAX;
            for (unsigned rt = 1; rt <= 3; ++rt) {
                const CarrySpec s{2, 3, nu, 1, rt, m, 1};
                if (s.lambda() >= 6 + 2 * nu) continue;
                const auto c = count_mismatch(s, tm);
                REQUIRE(c <= prev);
                prev = c;
            }
        }
}

TEST_CASE("second difference") {
    const auto tm = make_digit_exponential(2, Rational(1, 2));
    const DigitExp o{2, 1, 2};
    for (std::uint64_t m = 4; m < 8; ++m)
        for (unsigned kappa = 0; kappa <= 5; ++kappa)
            for (std::uint64_t r : {1, 2, 3}) {
                const CarrySpec s{2, 3, 6, 1, 1, m, r};
                const std::uint64_t m2 = m + (std::uint64_t{1} << kappa);  // may leave [4, 8)
                const auto c = count_second_diff_mismatch(s, tm, kappa, 1, 1);
                REQUIRE(c == brute_second(o, m, m2, 6, r, kappa, s.lambda()));
                if (kappa == 0) {
                    const auto single = count_mismatch_raw(tm, m2, 6, r, s.lambda()) + count_mismatch_raw(tm, m, 6, r, s.lambda());
                    REQUIRE(c <= single);
                }
            }
    const CarrySpec s{2, 3, 6, 2, 1, 5, 1};
    CHECK_THROWS_AS(count_second_diff_mismatch(s, tm, 5, 1), PreconditionError);
    CHECK_THROWS_AS(count_second_diff_mismatch(s, tm, 1, 4), PreconditionError);
    CHECK_THROWS_AS(count_second_diff_mismatch(s, tm, 1, 0), PreconditionError);
}

TEST_CASE("thread count does not change counts") {
    const auto f = make_digit_exponential(3, Rational(2, 7));
    const CarrySpec s{3, 2, 8, 1, 2, 5, 1};
    CHECK(count_mismatch(s, f, 1) == count_mismatch(s, f, 4));
    CHECK(count_second_diff_mismatch(s, f, 2, 1, 1) == count_second_diff_mismatch(s, f, 2, 1, 3));
}
