/*
 * qmult.hpp - strongly q-multiplicative functions f : N -> U.
 *
 * f is stored through its digit phases: f(b) = e(phase[b]) for 0 <= b < q,
 * phase[0] = 0, and f(sum eps_j q^j) = prod_j f(eps_j). Phases built from
 * rationals are kept exact: every phase is an integer multiple of 1/D for a
 * common denominator D, so an evaluation accumulates an integer mod D and
 * converts to a complex number once. Floating phases accumulate in long
 * double.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sqdigits/numerics.hpp"
#include "sqdigits/rational.hpp"

namespace sqdigits {

using UnitComplex = Complex;

enum class PhaseKind { ExactRational, Floating };

class StronglyQMultiplicative {
public:
    static StronglyQMultiplicative from_phases(std::uint64_t q, const std::vector<Rational>& phases);
    static StronglyQMultiplicative from_phases(std::uint64_t q, const std::vector<double>& phases);
    static StronglyQMultiplicative constant_one(std::uint64_t q);

    std::uint64_t q() const { return q_; }
    PhaseKind phase_kind() const { return kind_; }
    bool exact() const { return kind_ == PhaseKind::ExactRational; }

    // Common denominator D of the exact phases (0 for floating phases).
    std::int64_t denominator() const { return den_; }

    // phase[b] in [0, 1) as doubles, and exactly when available.
    std::vector<double> phases() const;
    std::vector<Rational> exact_phases() const;

    // Exact phase of f(n) as an integer in [0, D). Requires exact().
    std::int64_t phase_units(u128 n) const;

    // Phase of f(n) in [0, 1).
    double phase(u128 n) const;

    UnitComplex eval(u128 n) const;

    // f(b) for a single digit b < q.
    UnitComplex digit_value(std::uint64_t b) const { return digit_values_[b]; }

private:
    StronglyQMultiplicative() = default;
    void build_blocks();

    std::uint64_t q_ = 2;
    PhaseKind kind_ = PhaseKind::ExactRational;
    std::int64_t den_ = 1;
    std::vector<std::int64_t> digit_units_;  // exact numerators over den_
    std::vector<double> digit_phase_;        // floating phases
    std::vector<UnitComplex> digit_values_;

    // Phases of all integers below block_ = q^block_digits_, to consume several digits per step.
    std::uint64_t block_ = 1;
    std::vector<std::int64_t> block_units_;
    std::vector<double> block_phase_;
    std::vector<UnitComplex> roots_;  // e(k / D) when D is small
};

// f(n) = e(gamma * s_q(n)).
StronglyQMultiplicative make_digit_exponential(std::uint64_t q, const Rational& gamma);
StronglyQMultiplicative make_digit_exponential(std::uint64_t q, double gamma);

// False iff f(n) = e(gamma n) for some gamma with (q-1) gamma in Z. Exact for
// rational phases; floating phases use tolerance 1e-10.
bool is_proper(const StronglyQMultiplicative& f);

UnitComplex eval(const StronglyQMultiplicative& f, u128 n);

// f_{k1,k2}(a) = f(q^k1 rep_window(a, k1, k2)) = f(rep_window(a, k1, k2)).
UnitComplex eval_truncated(const StronglyQMultiplicative& f, i128 a, unsigned kappa1, unsigned kappa2);

// Phase counterpart of eval_truncated, in [0, 1).
double phase_truncated(const StronglyQMultiplicative& f, i128 a, unsigned kappa1, unsigned kappa2);

}  // namespace sqdigits
