#include "sqdigits/carry.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "sqdigits/digits.hpp"
#include "sqdigits/errors.hpp"

namespace sqdigits {

namespace {

constexpr std::size_t kCountChunks = 64;

// Sign-weighted phase combinations: sum_i sign_i (truncated_i - full_i) == 0 mod 1 ?
class PhaseComparator {
public:
    PhaseComparator(const StronglyQMultiplicative& f, unsigned kappa, unsigned lambda)
        : f_(f), kappa_(kappa), lambda_(lambda) {}

    template <std::size_t K>
    bool differs(const std::array<u128, K>& args, const std::array<int, K>& signs) const {
        if (f_.exact()) {
            const std::int64_t D = f_.denominator();
            std::int64_t acc = 0;
            for (std::size_t i = 0; i < K; ++i) {
                const std::int64_t t = f_.phase_units(rep_window(static_cast<i128>(args[i]), kappa_, lambda_, f_.q()));
                const std::int64_t u = f_.phase_units(args[i]);
                acc = (acc + signs[i] * (t - u)) % D;
            }
            return acc != 0;
        }
        long double acc = 0.0L;
        for (std::size_t i = 0; i < K; ++i) {
            const double t = f_.phase(rep_window(static_cast<i128>(args[i]), kappa_, lambda_, f_.q()));
            acc += signs[i] * (static_cast<long double>(t) - f_.phase(args[i]));
        }
        return dist1(static_cast<double>(acc)) > 1e-9;
    }

private:
    const StronglyQMultiplicative& f_;
    unsigned kappa_;
    unsigned lambda_;
};

template <typename Pred>
std::uint64_t count_range(std::uint64_t lo, std::uint64_t hi, unsigned threads, const Pred& pred) {
    const std::uint64_t len = hi - lo;
    const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(kCountChunks, std::max<std::uint64_t>(len, 1)));
    std::vector<std::uint64_t> partial(chunks, 0);
    parallel_chunks(chunks, threads, [&](std::size_t c) {
        const std::uint64_t a = lo + len * c / chunks;
        const std::uint64_t b = lo + len * (c + 1) / chunks;
        for (std::uint64_t n = a; n < b; ++n)
            if (pred(n)) ++partial[c];
    });
    std::uint64_t total = 0;
    for (auto p : partial) total += p;
    return total;
}

void check_range(std::uint64_t q, std::uint64_t m_max, unsigned nu, std::uint64_t r) {
    // (m (n + r))^2 must fit in 128 bits.
    const u128 n_max = checked_pow(q, nu) + r;
    const u128 mn = static_cast<u128>(m_max) * n_max;
    if (n_max != 0 && mn / n_max != m_max) throw RangeError("m (n + r) overflows 128 bits");
    if (mn > (u128{1} << 63)) throw RangeError("(m (n + r))^2 exceeds the 128-bit working range");
}

}  // namespace

void CarrySpec::validate() const {
    if (q < 2) throw PreconditionError("q must be at least 2");
    if (mu < 1 || nu < 1) throw PreconditionError("mu and nu must be at least 1");
    if (lambda() >= 2 * mu + 2 * nu) throw PreconditionError("carry lemma requires lambda < 2 mu + 2 nu");
    (void)checked_pow(q, 2 * mu + 2 * nu + 2);
    const u128 lo = checked_pow(q, mu - 1);
    const u128 hi = checked_pow(q, mu);
    if (m < lo || m >= hi) throw PreconditionError("m must lie in [q^(mu-1), q^mu)");
}

std::uint64_t count_mismatch_raw(const StronglyQMultiplicative& f, std::uint64_t m, unsigned nu, std::uint64_t r,
                                 unsigned lambda, unsigned threads) {
    if (nu < 1) throw PreconditionError("nu must be at least 1");
    check_range(f.q(), m, nu, r);
    const auto lo = static_cast<std::uint64_t>(checked_pow(f.q(), nu - 1));
    const auto hi = static_cast<std::uint64_t>(checked_pow(f.q(), nu));
    const PhaseComparator cmp(f, 0, lambda);
    const u128 m2 = static_cast<u128>(m) * m;
    return count_range(lo, hi, threads, [&](std::uint64_t n) {
        const u128 a = m2 * (static_cast<u128>(n + r) * (n + r));
        const u128 b = m2 * (static_cast<u128>(n) * n);
        return cmp.differs<2>({a, b}, {1, -1});
    });
}

std::uint64_t count_mismatch(const CarrySpec& spec, const StronglyQMultiplicative& f, unsigned threads) {
    spec.validate();
    if (f.q() != spec.q) throw PreconditionError("f and the carry spec use different bases");
    return count_mismatch_raw(f, spec.m, spec.nu, spec.r, spec.lambda(), threads);
}

std::uint64_t count_second_diff_mismatch(const CarrySpec& spec, const StronglyQMultiplicative& f, unsigned kappa,
                                         std::uint64_t s, unsigned threads) {
    spec.validate();
    if (f.q() != spec.q) throw PreconditionError("f and the carry spec use different bases");
    if (kappa + spec.rho > spec.nu) throw PreconditionError("requires 0 <= kappa <= nu - rho");
    const u128 q_rho = checked_pow(spec.q, spec.rho);
    if (s < 1 || s >= q_rho) throw PreconditionError("requires 1 <= s < q^rho");
    const u128 m2_wide = static_cast<u128>(spec.m) + static_cast<u128>(s) * checked_pow(spec.q, kappa);
    if (m2_wide > (u128{1} << 62)) throw RangeError("m + s q^kappa exceeds the working range");
    const auto mp = static_cast<std::uint64_t>(m2_wide);
    check_range(spec.q, mp, spec.nu, spec.r);

    const auto lo = static_cast<std::uint64_t>(checked_pow(spec.q, spec.nu - 1));
    const auto hi = static_cast<std::uint64_t>(checked_pow(spec.q, spec.nu));
    const PhaseComparator cmp(f, kappa, spec.lambda());
    const u128 m_sq = static_cast<u128>(spec.m) * spec.m;
    const u128 mp_sq = static_cast<u128>(mp) * mp;
    const std::uint64_t r = spec.r;
    return count_range(lo, hi, threads, [&](std::uint64_t n) {
        const u128 nr2 = static_cast<u128>(n + r) * (n + r);
        const u128 n2 = static_cast<u128>(n) * n;
        return cmp.differs<4>({mp_sq * nr2, m_sq * nr2, mp_sq * n2, m_sq * n2}, {1, -1, -1, 1});
    });
}

}  // namespace sqdigits
