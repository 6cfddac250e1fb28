#include "sqdigits/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "sqdigits/digits.hpp"
#include "sqdigits/errors.hpp"
#include "sqdigits/optimize.hpp"

namespace sqdigits {

namespace {

double reduce_mod(double t, double period) { return t - period * std::floor(t / period); }

// Visits h -> F_lambda(t + h) for every 0 <= h < q^lambda.
//
// Digit k of h fixes the factor F_1((t + h) / q^k), which depends on h mod
// q^(k+1) only, so a depth-first walk over the digits of h from the least
// significant one needs a single trigonometric evaluation per inner node.
template <typename Visitor>
class ShiftWalker {
public:
    ShiftWalker(const StronglyQMultiplicative& f, unsigned lambda, double t, Visitor& visit)
        : f_(f), q_(f.q()), lambda_(lambda), t_(t), visit_(visit), digit_step_(expi2pi(-1.0 / static_cast<double>(f.q()))) {
        for (std::uint64_t b = 0; b < q_; ++b) fvals_.push_back(f.digit_value(b));
    }

    void run() { walk(0, 0, 1, 1.0, Complex(1.0, 0.0)); }

private:
    // F_1 at s where w = e(-s / q).
    Complex f1(Complex w) const {
        Complex acc = fvals_[q_ - 1];
        for (std::uint64_t b = q_ - 1; b-- > 0;) acc = acc * w + fvals_[b];
        return acc / static_cast<double>(q_);
    }

    void walk(unsigned level, std::uint64_t h, std::uint64_t qk, double qk_d, Complex prod) {
        if (level == lambda_) {
            visit_(h, prod);
            return;
        }
        // s_d = (t + h + d q^k) / q^k = (t + h) / q^k + d.
        const double s0 = reduce_mod((t_ + static_cast<double>(h)) / qk_d, static_cast<double>(q_));
        Complex w = expi2pi(-s0 / static_cast<double>(q_));
        if (level + 1 == lambda_) {  // leaves inline, this is where all the time goes
            for (std::uint64_t d = 0; d < q_; ++d) {
                visit_(h + d * qk, prod * f1(w));
                w *= digit_step_;
            }
            return;
        }
        for (std::uint64_t d = 0; d < q_; ++d) {
            walk(level + 1, h + d * qk, qk * q_, qk_d * static_cast<double>(q_), prod * f1(w));
            w *= digit_step_;
        }
    }

    const StronglyQMultiplicative& f_;
    std::uint64_t q_;
    unsigned lambda_;
    double t_;
    Visitor& visit_;
    Complex digit_step_;
    std::vector<Complex> fvals_;
};

template <typename Visitor>
void for_each_shift(const StronglyQMultiplicative& f, unsigned lambda, double t, Visitor&& visit) {
    ShiftWalker<std::remove_reference_t<Visitor>> walker(f, lambda, t, visit);
    walker.run();
}

double abs_F1_product(const StronglyQMultiplicative& f, double t) {
    return std::abs(eval_F1(f, t) * eval_F1(f, static_cast<double>(f.q()) * t));
}

}  // namespace

std::vector<Complex> shifted_values(const StronglyQMultiplicative& f, unsigned lambda, double t) {
    const u128 n = checked_pow(f.q(), lambda);
    if (n > kMaxFourierTable) throw CapacityError("q^lambda exceeds the Fourier table cap of 2^24 entries");
    std::vector<Complex> out(static_cast<std::size_t>(n));
    for_each_shift(f, lambda, t, [&](std::uint64_t h, Complex v) { out[h] = v; });
    return out;
}

Complex FourierTable::at(std::int64_t h) const {
    const auto n = static_cast<std::int64_t>(values.size());
    std::int64_t r = h % n;
    if (r < 0) r += n;
    return values[static_cast<std::size_t>(r)];
}

Complex eval_F1(const StronglyQMultiplicative& f, double s) {
    const auto q = static_cast<double>(f.q());
    const Complex w = expi2pi(-reduce_mod(s, q) / q);
    Complex acc = f.digit_value(f.q() - 1);
    for (std::uint64_t b = f.q() - 1; b-- > 0;) acc = acc * w + f.digit_value(b);
    return acc / q;
}

Complex eval_F(const StronglyQMultiplicative& f, unsigned lambda, double t) {
    const auto q = static_cast<double>(f.q());
    const double period = std::pow(q, static_cast<double>(lambda));
    double s = reduce_mod(t, period);
    Complex prod(1.0, 0.0);
    for (unsigned l = 0; l < lambda; ++l) {
        prod *= eval_F1(f, s);
        s /= q;
    }
    return prod;
}

double phi_q(const StronglyQMultiplicative& f, double t) {
    return static_cast<double>(f.q()) * std::abs(eval_F1(f, static_cast<double>(f.q()) * t));
}

double psi_q(const StronglyQMultiplicative& f, double t) {
    const auto q = static_cast<double>(f.q());
    double acc = 0.0;
    for (std::uint64_t r = 0; r < f.q(); ++r) acc += phi_q(f, t + static_cast<double>(r) / q);
    return acc / q;
}

FourierTable build_table(const StronglyQMultiplicative& f, unsigned lambda) {
    const std::uint64_t q = f.q();
    const u128 total = checked_pow(q, lambda);
    if (total > kMaxFourierTable)
        throw CapacityError("q^lambda = " + to_string(total) + " exceeds the Fourier table cap of 2^24 entries");

    // Level l holds F_l(h) for h < q^l; F_l(h) = F_{l-1}(h mod q^(l-1)) * F_1(h / q^(l-1)),
    // and F_1(h / q^(l-1)) = q^-1 sum_b f(b) e(-b h / q^l) with the angle reduced exactly.
    std::vector<Complex> level{Complex(1.0, 0.0)};
    std::uint64_t prev = 1;
    for (unsigned l = 1; l <= lambda; ++l) {
        const std::uint64_t size = prev * q;
        std::vector<Complex> next(size);
        for (std::uint64_t h = 0; h < size; ++h) {
            const Complex w = expi2pi_ratio(-static_cast<i128>(h), size);
            Complex acc = f.digit_value(q - 1);
            for (std::uint64_t b = q - 1; b-- > 0;) acc = acc * w + f.digit_value(b);
            next[h] = level[h % prev] * (acc / static_cast<double>(q));
        }
        level = std::move(next);
        prev = size;
    }
    return FourierTable{f, lambda, std::move(level)};
}

SpectralConstants compute_constants(const StronglyQMultiplicative& f) {
    if (!is_proper(f)) throw DomainError("c(f) and eta(f) are only defined for proper f");
    const std::uint64_t q = f.q();
    // the psi_q maximization costs ~q^3 grid work; q = 128 already takes most of a minute
    if (q > kMaxConstantsBase)
        throw CapacityError("q = " + std::to_string(q) + " exceeds the spectral-constant base cap " +
                            std::to_string(kMaxConstantsBase));
    const auto qd = static_cast<double>(q);

    // |F_1(t) F_1(qt)| has period q; confirm numerically before restricting to [0, q).
    for (int i = 0; i < 64; ++i) {
        const double t = 0.37 + 0.731 * i;
        if (std::fabs(abs_F1_product(f, t + qd) - abs_F1_product(f, t)) > 1e-12)
            throw std::logic_error("|F_1(t) F_1(qt)| failed the period-q check");
    }

    SpectralConstants out;
    out.grid_size = 4096 * q;
    out.refine_tol = 1e-10;
    const Maximum cmax = grid_refine_max([&](double t) { return abs_F1_product(f, t); }, 0.0, qd, out.grid_size,
                                         out.refine_tol);
    const Maximum emax = grid_refine_max([&](double t) { return psi_q(f, t); }, 0.0, 1.0, out.grid_size,
                                         out.refine_tol);
    out.c = -std::log(cmax.value) / (2.0 * std::log(qd));
    out.eta = std::log(emax.value) / std::log(qd);
    out.argmax_c = cmax.argmax;
    out.argmax_eta = emax.argmax;
    return out;
}

double sup_abs_F(const StronglyQMultiplicative& f, unsigned lambda) {
    if (lambda == 0) return 1.0;
    const double period = std::pow(static_cast<double>(f.q()), static_cast<double>(lambda));
    // |d/dt F_lambda| <= 2 pi, so 64 grid cells per unit period brackets every peak.
    const auto grid = static_cast<std::size_t>(std::min(64.0 * period, 4194304.0));
    return grid_refine_max([&](double t) { return std::abs(eval_F(f, lambda, t)); }, 0.0, period,
                           std::max<std::size_t>(grid, 64))
        .value;
}

double quadratic_mean(const StronglyQMultiplicative& f, unsigned lambda, double t) {
    (void)checked_pow(f.q(), lambda);
    CompensatedSum acc;
    for_each_shift(f, lambda, t, [&](std::uint64_t, Complex v) { acc.add(abs2(v)); });
    return acc.value();
}

ValueBound l1_masked_sum(const StronglyQMultiplicative& f, unsigned lambda, unsigned delta, std::int64_t a,
                         double t, const SpectralConstants& constants) {
    if (delta > lambda) throw PreconditionError("l1_masked_sum requires delta <= lambda");
    const auto values = shifted_values(f, lambda, t);
    const auto modulus = static_cast<std::int64_t>(checked_pow(f.q(), delta));
    std::int64_t start = a % modulus;
    if (start < 0) start += modulus;
    CompensatedSum acc;
    for (auto h = static_cast<std::size_t>(start); h < values.size(); h += static_cast<std::size_t>(modulus))
        acc.add(std::abs(values[h]));
    ValueBound out;
    out.value = acc.value();
    out.bound = std::pow(static_cast<double>(f.q()), constants.eta * static_cast<double>(lambda - delta)) *
                std::abs(eval_F(f, delta, t + static_cast<double>(a)));
    return out;
}

ValueBound l1_masked_sum(const StronglyQMultiplicative& f, unsigned lambda, unsigned delta, std::int64_t a,
                         double t) {
    return l1_masked_sum(f, lambda, delta, a, t, compute_constants(f));
}

ValueBound digit_sum_decay_bound(std::uint64_t q, const Rational& gamma, unsigned kappa1, unsigned kappa2,
                                 double t) {
    if (kappa1 > kappa2) throw PreconditionError("digit window requires kappa1 <= kappa2");
    const auto f = make_digit_exponential(q, gamma);
    const unsigned lambda = kappa2 - kappa1;
    const Rational r = (Rational(static_cast<std::int64_t>(q - 1)) * gamma).frac();
    const double dist = std::min(r.to_double(), 1.0 - r.to_double());
    const double qd = static_cast<double>(q);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    ValueBound out;
    out.value = std::abs(eval_F(f, lambda, t));
    out.bound = std::exp(pi2 / 48.0 - static_cast<double>(lambda) * pi2 * (qd - 1.0) / (12.0 * (qd + 1.0)) * dist * dist);
    return out;
}

ValueBound almost_ap_l2_sum(const StronglyQMultiplicative& f, unsigned kappa1, unsigned kappa2, double A,
                            double B) {
    if (kappa1 > kappa2) throw PreconditionError("digit window requires kappa1 <= kappa2");
    const unsigned lambda = kappa2 - kappa1;
    const auto q = static_cast<double>(f.q());
    const double span = std::pow(q, static_cast<double>(lambda));
    if (!(A >= 1.0) || !(A < span)) throw DomainError("almost_ap_l2_sum requires 1 <= A < q^(kappa2-kappa1)");
    unsigned alpha = 0;
    while (std::pow(q, static_cast<double>(alpha + 1)) <= A) ++alpha;

    CompensatedSum acc;
    for (std::uint64_t k = 0; static_cast<double>(k) * A < span; ++k)
        acc.add(abs2(eval_F(f, lambda, std::floor(static_cast<double>(k) * A) + B)));
    const double sup = sup_abs_F(f, alpha);
    return {acc.value(), (3.0 * q - 2.0) / (q - 1.0) * sup * sup};
}

ValueBound large_sieve_sum(const StronglyQMultiplicative& f, unsigned kappa1, unsigned kappa2,
                           const std::vector<double>& nodes, double delta) {
    if (kappa1 > kappa2) throw PreconditionError("digit window requires kappa1 <= kappa2");
    if (!(delta > 0.0) || delta > 0.5) throw PreconditionError("spacing delta must lie in (0, 1/2]");
    std::vector<double> reduced;
    reduced.reserve(nodes.size());
    for (double t : nodes) reduced.push_back(frac(t));
    std::sort(reduced.begin(), reduced.end());
    const double slack = 1e-12;
    for (std::size_t i = 0; i + 1 < reduced.size(); ++i)
        if (reduced[i + 1] - reduced[i] < delta - slack)
            throw PreconditionError("nodes are not delta-spaced modulo 1");
    if (reduced.size() > 1 && 1.0 - reduced.back() + reduced.front() < delta - slack)
        throw PreconditionError("nodes are not delta-spaced modulo 1");

    const unsigned lambda = kappa2 - kappa1;
    const double span = std::pow(static_cast<double>(f.q()), static_cast<double>(lambda));
    CompensatedSum acc;
    for (double t : nodes) acc.add(abs2(eval_F(f, lambda, span * t)));
    return {acc.value(), 1.0 + 1.0 / (delta * span)};
}

}  // namespace sqdigits
