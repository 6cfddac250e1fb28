#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sqdigits/digits.hpp"
#include "sqdigits/errors.hpp"
#include "sqdigits/optimize.hpp"
#include "sqdigits/rational.hpp"

using namespace sqdigits;

TEST_CASE("to_digits examples") {
    CHECK(to_digits(0, 2) == std::vector<std::uint64_t>{0});
    CHECK(to_digits(13, 2) == std::vector<std::uint64_t>{1, 0, 1, 1});
    CHECK(to_digits(123, 10) == std::vector<std::uint64_t>{3, 2, 1});
}

TEST_CASE("rep_low and rep_window examples") {
    CHECK(rep_low(13, 3, 2) == 5);
    CHECK(rep_low(-1, 2, 3) == 8);
    CHECK(rep_low(0, 0, 5) == 0);
    CHECK(rep_window(13, 1, 3, 2) == 2);
    CHECK(rep_window(13, 0, 3, 2) == 5);
    // 242 = 22222_3, digits 2..3 give 22_3
    CHECK(rep_window(242, 2, 4, 3) == 8);
    CHECK_THROWS_AS(rep_window(5, 3, 2, 2), PreconditionError);
}

TEST_CASE("digit_sum examples") {
    CHECK(digit_sum(0, 2) == 0);
    CHECK(digit_sum(7, 2) == 3);
    CHECK(digit_sum(999999999999ULL, 10) == 108);
}

TEST_CASE("checked powers overflow loudly") {
    CHECK(checked_pow(2, 127) == (u128{1} << 127));
    CHECK_THROWS_AS(checked_pow(2, 128), RangeError);
    CHECK_THROWS_AS(rep_low(1, 200, 3), RangeError);
    DigitWindowSpec ok{3, 2, 5};
    CHECK_NOTHROW(ok.validate());
    DigitWindowSpec bad{1, 0, 1};
    CHECK_THROWS(bad.validate());
    DigitWindowSpec inverted{2, 4, 3};
    CHECK_THROWS_AS(inverted.validate(), PreconditionError);
}

TEST_CASE("round trip over random n per base") {
    auto g = oracle::rng(11);
    for (std::uint64_t q : {2, 3, 5, 7, 10}) {
        for (int i = 0; i < 100000; ++i) {
            const u128 n = (static_cast<u128>(g()) << 40) ^ g();
            const auto d = to_digits(n, q);
            CHECK_EQ(from_digits(d, q), n);
            if (d.size() > 1) REQUIRE(d.back() != 0);
            REQUIRE(digit_sum(n, q) == oracle::digit_sum(n, q));
        }
    }
}

TEST_CASE("window consistency and digit detection") {
    auto g = oracle::rng(12);
    for (int i = 0; i < 2000; ++i) {
        const i128 a = static_cast<i128>(oracle::uniform_int(g, -1000000, 1000000));
        const unsigned k = static_cast<unsigned>(oracle::uniform_int(g, 0, 12));
        const std::uint64_t q = static_cast<std::uint64_t>(oracle::uniform_int(g, 2, 9));
        REQUIRE(rep_window(a, 0, k, q) == rep_low(a, k, q));
    }
    // rep_window(a, k1, k2) = u  iff  frac(a / q^k2) in [u / q^(k2-k1), (u+1) / q^(k2-k1)).
    for (std::uint64_t q : {2, 3}) {
        for (unsigned k2 = 0; k2 <= 6; ++k2) {
            const auto Q2 = static_cast<std::int64_t>(checked_pow(q, k2));
            const auto top = static_cast<std::int64_t>(checked_pow(q, k2 + 2));
            for (unsigned k1 = 0; k1 <= k2; ++k1) {
                const auto W = static_cast<std::int64_t>(checked_pow(q, k2 - k1));
                for (std::int64_t a = 0; a < top; ++a) {
                    const auto u = static_cast<std::int64_t>(rep_window(a, k1, k2, q));
                    // exact comparison in integers: frac(a/Q2) * W in [u, u+1)
                    const std::int64_t r = a % Q2;
                    REQUIRE(r * W >= u * Q2);
                    REQUIRE(r * W < (u + 1) * Q2);
                }
            }
        }
    }
}

TEST_CASE("digit sum subadditivity") {
    auto g = oracle::rng(13);
    for (int i = 0; i < 100000; ++i) {
        const std::uint64_t q = static_cast<std::uint64_t>(oracle::uniform_int(g, 2, 10));
        const u128 a = g() >> 2, b = g() >> 2;
        REQUIRE(digit_sum(a + b, q) <= digit_sum(a, q) + digit_sum(b, q));
    }
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("-1/3").frac() == Rational(2, 3));
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(1, 2) * Rational(4)).is_integer());
    CHECK_THROWS_AS(Rational::parse("0.5"), PreconditionError);
    CHECK_THROWS_AS(Rational::parse("1/0"), PreconditionError);
    CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(3), RangeError);
}

TEST_CASE("grid_refine_max finds a known maximum") {
    // max of 2 sin^2 u cos u on [0, pi/2] is 4/(3 sqrt 3) at cos u = 1/sqrt 3
    const auto m = grid_refine_max([](double u) { return 2 * std::sin(u) * std::sin(u) * std::cos(u); }, 0.0,
                                   std::numbers::pi / 2, 4096);
    CHECK(m.value == doctest::Approx(4.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-14));
    CHECK(m.argmax == doctest::Approx(std::acos(1.0 / std::sqrt(3.0))).epsilon(1e-8));
}
