#include "sqdigits/qmult.hpp"

#include <cmath>

#include "sqdigits/digits.hpp"
#include "sqdigits/errors.hpp"

namespace sqdigits {

namespace {

constexpr std::uint64_t kBlockLimit = 1u << 16;
constexpr std::int64_t kRootTableLimit = 1 << 16;

void check_phase_count(std::uint64_t q, std::size_t n) {
    if (q < 2) throw PreconditionError("base q must be >= 2");
    if (n != q) throw PreconditionError("expected exactly q digit phases");
}

}  // namespace

StronglyQMultiplicative StronglyQMultiplicative::from_phases(std::uint64_t q, const std::vector<Rational>& phases) {
    check_phase_count(q, phases.size());
    if (phases[0].frac() != Rational(0)) throw PreconditionError("phase[0] must be 0 (f(0) = 1)");
    StronglyQMultiplicative f;
    f.q_ = q;
    f.kind_ = PhaseKind::ExactRational;
    std::int64_t den = 1;
    for (const auto& p : phases) den = lcm_checked(den, p.frac().den());
    f.den_ = den;
    f.digit_units_.reserve(q);
    for (const auto& p : phases) {
        const Rational r = p.frac();
        f.digit_units_.push_back(r.num() * (den / r.den()));
    }
    f.build_blocks();
    return f;
}

StronglyQMultiplicative StronglyQMultiplicative::from_phases(std::uint64_t q, const std::vector<double>& phases) {
    check_phase_count(q, phases.size());
    StronglyQMultiplicative f;
    f.q_ = q;
    f.kind_ = PhaseKind::Floating;
    f.den_ = 0;
    for (double p : phases) {
        if (!std::isfinite(p)) throw PreconditionError("non-finite phase");
        f.digit_phase_.push_back(frac(p));
    }
    if (f.digit_phase_[0] != 0.0) throw PreconditionError("phase[0] must be 0 (f(0) = 1)");
    f.build_blocks();
    return f;
}

StronglyQMultiplicative StronglyQMultiplicative::constant_one(std::uint64_t q) {
    return from_phases(q, std::vector<Rational>(q, Rational(0)));
}

void StronglyQMultiplicative::build_blocks() {
    if (exact() && den_ <= kRootTableLimit) {
        roots_.resize(static_cast<std::size_t>(den_));
        for (std::int64_t k = 0; k < den_; ++k)
            roots_[static_cast<std::size_t>(k)] = expi2pi(static_cast<double>(k) / static_cast<double>(den_));
    }
    digit_values_.resize(q_);
    for (std::uint64_t b = 0; b < q_; ++b) {
        if (exact())
            digit_values_[b] = expi2pi_ratio(digit_units_[b], static_cast<u128>(den_));
        else
            digit_values_[b] = expi2pi(digit_phase_[b]);
    }

    block_ = q_;
    while (block_ <= kBlockLimit / q_) block_ *= q_;
    if (exact()) {
        block_units_.assign(block_, 0);
        for (std::uint64_t n = 1; n < block_; ++n)
            block_units_[n] = (block_units_[n / q_] + digit_units_[n % q_]) % den_;
    } else {
        block_phase_.assign(block_, 0.0);
        for (std::uint64_t n = 1; n < block_; ++n)
            block_phase_[n] = frac(block_phase_[n / q_] + digit_phase_[n % q_]);
    }
}

std::vector<double> StronglyQMultiplicative::phases() const {
    if (!exact()) return digit_phase_;
    std::vector<double> out;
    for (auto u : digit_units_) out.push_back(static_cast<double>(u) / static_cast<double>(den_));
    return out;
}

std::vector<Rational> StronglyQMultiplicative::exact_phases() const {
    if (!exact()) throw DomainError("floating phases have no exact representation");
    std::vector<Rational> out;
    for (auto u : digit_units_) out.emplace_back(u, den_);
    return out;
}

std::int64_t StronglyQMultiplicative::phase_units(u128 n) const {
    if (!exact()) throw DomainError("phase_units requires exact rational phases");
    i128 acc = 0;
    while (n != 0) {
        acc += block_units_[static_cast<std::size_t>(n % block_)];
        n /= block_;
    }
    return static_cast<std::int64_t>(acc % den_);
}

double StronglyQMultiplicative::phase(u128 n) const {
    if (exact()) return static_cast<double>(phase_units(n)) / static_cast<double>(den_);
    long double acc = 0.0L;
    while (n != 0) {
        acc += block_phase_[static_cast<std::size_t>(n % block_)];
        n /= block_;
    }
    return static_cast<double>(acc - std::floor(acc));
}

UnitComplex StronglyQMultiplicative::eval(u128 n) const {
    if (exact()) {
        const std::int64_t u = phase_units(n);
        if (!roots_.empty()) return roots_[static_cast<std::size_t>(u)];
        return expi2pi_ratio(u, static_cast<u128>(den_));
    }
    return expi2pi(phase(n));
}

StronglyQMultiplicative make_digit_exponential(std::uint64_t q, const Rational& gamma) {
    if (q < 2) throw PreconditionError("base q must be >= 2");
    std::vector<Rational> phases;
    phases.reserve(q);
    for (std::uint64_t b = 0; b < q; ++b) phases.push_back((gamma * Rational(static_cast<std::int64_t>(b))).frac());
    return StronglyQMultiplicative::from_phases(q, phases);
}

StronglyQMultiplicative make_digit_exponential(std::uint64_t q, double gamma) {
    if (q < 2) throw PreconditionError("base q must be >= 2");
    std::vector<double> phases;
    phases.reserve(q);
    for (std::uint64_t b = 0; b < q; ++b) phases.push_back(frac(gamma * static_cast<double>(b)));
    return StronglyQMultiplicative::from_phases(q, phases);
}

bool is_proper(const StronglyQMultiplicative& f) {
    const std::uint64_t q = f.q();
    const auto qm1 = static_cast<std::int64_t>(q - 1);
    // Improper candidates: gamma = k / (q-1) mod 1, k = 0..q-2.
    if (f.exact()) {
        const auto phases = f.exact_phases();
        for (std::int64_t k = 0; k < qm1; ++k) {
            const Rational gamma(k, qm1);
            bool match = true;
            for (std::uint64_t b = 0; b < q && match; ++b)
                match = (gamma * Rational(static_cast<std::int64_t>(b))).frac() == phases[b];
            if (match) return false;
        }
        return true;
    }
    const auto phases = f.phases();
    for (std::int64_t k = 0; k < qm1; ++k) {
        const double gamma = static_cast<double>(k) / static_cast<double>(qm1);
        // Least-squares residual of the circular misfit phase[b] - b*gamma.
        double ss = 0.0;
        for (std::uint64_t b = 0; b < q; ++b) {
            const double d = dist1(phases[b] - gamma * static_cast<double>(b));
            ss += d * d;
        }
        if (std::sqrt(ss / static_cast<double>(q)) <= 1e-10) return false;
    }
    return true;
}

UnitComplex eval(const StronglyQMultiplicative& f, u128 n) { return f.eval(n); }

UnitComplex eval_truncated(const StronglyQMultiplicative& f, i128 a, unsigned kappa1, unsigned kappa2) {
    return f.eval(rep_window(a, kappa1, kappa2, f.q()));
}

double phase_truncated(const StronglyQMultiplicative& f, i128 a, unsigned kappa1, unsigned kappa2) {
    return f.phase(rep_window(a, kappa1, kappa2, f.q()));
}

}  // namespace sqdigits
