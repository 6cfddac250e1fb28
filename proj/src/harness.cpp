#include "sqdigits/harness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sqdigits/digits.hpp"
#include "sqdigits/errors.hpp"
#include "sqdigits/sieve.hpp"

namespace sqdigits {

namespace {

constexpr std::uint64_t kLambdaSumCap = 100000000;
constexpr std::uint64_t kVaughanCap = 10000000;
constexpr u128 kBoxCap = u128{1} << 26;
constexpr std::size_t kRowChunks = 64;

Complex twist(double theta, std::uint64_t n) {
    return theta == 0.0 ? Complex(1.0, 0.0) : expi2pi_mul(theta, n);
}

// sum over prime powers lo < p^k <= x of log p * g(p^k), merged per sieve segment in order.
template <typename G>
Complex prime_power_sum(std::uint64_t lo, std::uint64_t x, unsigned threads, const G& g) {
    std::vector<CompensatedComplexSum> parts(segment_count(x));
    for_each_segment(x, threads, [&](std::size_t k, const std::vector<std::uint64_t>& primes) {
        for (std::uint64_t p : primes) {
            const double lp = std::log(static_cast<double>(p));
            for (u128 v = p; v <= x; v *= p)
                if (v > lo) parts[k].add(lp * g(static_cast<std::uint64_t>(v)));
        }
    });
    CompensatedComplexSum total;
    for (const auto& p : parts) total.merge(p);
    return total.value();
}

struct Box {
    std::uint64_t m_lo, m_hi, n_lo, n_hi;
};

Box make_box(unsigned mu, unsigned nu, std::uint64_t q) {
    if (mu < 1 || nu < 1) throw PreconditionError("mu and nu must be at least 1");
    if (checked_pow(q, mu + nu) > kBoxCap) throw CapacityError("q^(mu+nu) exceeds the exact-evaluation cap 2^26");
    return {static_cast<std::uint64_t>(checked_pow(q, mu - 1)), static_cast<std::uint64_t>(checked_pow(q, mu)),
            static_cast<std::uint64_t>(checked_pow(q, nu - 1)), static_cast<std::uint64_t>(checked_pow(q, nu))};
}

Complex g_term(const StronglyQMultiplicative& f, double theta, std::uint64_t m, std::uint64_t n) {
    const u128 mn = static_cast<u128>(m) * n;
    return f.eval(mn * mn) * twist(theta, static_cast<std::uint64_t>(mn));
}

// Runs row(m) -> double for each m in [lo, hi) and sums the results in m order.
template <typename Row>
double sum_rows(std::uint64_t lo, std::uint64_t hi, unsigned threads, const Row& row) {
    const std::uint64_t len = hi - lo;
    const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(kRowChunks, std::max<std::uint64_t>(len, 1)));
    std::vector<CompensatedSum> parts(chunks);
    parallel_chunks(chunks, threads, [&](std::size_t c) {
        for (std::uint64_t m = lo + len * c / chunks; m < lo + len * (c + 1) / chunks; ++m) parts[c].add(row(m));
    });
    CompensatedSum total;
    for (const auto& p : parts) total.merge(p);
    return total.value();
}

Complex phase_of(Complex z) {
    const double r = std::abs(z);
    return r == 0.0 ? Complex(1.0, 0.0) : std::conj(z) / r;
}

std::int64_t floor_eps(double v) { return static_cast<std::int64_t>(std::floor(v + 1e-9)); }
std::int64_t ceil_eps(double v) { return static_cast<std::int64_t>(std::ceil(v - 1e-9)); }

// M values for the probe: q-adic powers inside [lo, hi] plus both ends.
std::vector<double> probe_grid(double lo, double hi, std::uint64_t q) {
    std::vector<double> out{lo};
    for (double M = 1.0; M <= hi; M *= static_cast<double>(q))
        if (M > lo && M < hi) out.push_back(M);
    if (hi > lo) out.push_back(hi);
    return out;
}

}  // namespace

Complex lambda_weighted_sum(std::uint64_t x, const StronglyQMultiplicative& f, double theta, unsigned threads) {
    if (x > kLambdaSumCap) throw CapacityError("x = " + std::to_string(x) + " exceeds the Lambda-sum cap 10^8");
    return prime_power_sum(0, x, threads, [&](std::uint64_t n) {
        return f.eval(static_cast<u128>(n) * n) * twist(theta, n);
    });
}

EquidistReport equidist_counts(std::uint64_t x, std::uint64_t q, std::uint64_t m, unsigned threads) {
    if (q < 2) throw PreconditionError("q must be at least 2");
    if (m < 2) throw PreconditionError("m must be at least 2");
    EquidistReport rep;
    rep.x = x;
    rep.q = q;
    rep.m = m;
    rep.m_coprime_to_q_minus_1 = gcd_u64(m, q - 1) == 1;
    rep.q_prime = is_prime_trial(q);
    std::vector<std::vector<std::uint64_t>> parts(segment_count(x), std::vector<std::uint64_t>(m, 0));
    for_each_segment(x, threads, [&](std::size_t k, const std::vector<std::uint64_t>& primes) {
        for (std::uint64_t p : primes) ++parts[k][digit_sum(static_cast<u128>(p) * p, q) % m];
    });
    rep.counts.assign(m, 0);
    for (const auto& part : parts)
        for (std::uint64_t a = 0; a < m; ++a) rep.counts[a] += part[a];
    for (auto c : rep.counts) rep.pi_x += c;
    if (rep.pi_x > 0) {
        const double expect = static_cast<double>(rep.pi_x) / static_cast<double>(m);
        for (auto c : rep.counts)
            rep.max_rel_discrepancy = std::max(rep.max_rel_discrepancy, std::fabs(static_cast<double>(c) - expect));
        rep.max_rel_discrepancy /= static_cast<double>(rep.pi_x);
    }
    return rep;
}

Complex type2_S20(unsigned mu, unsigned nu, const StronglyQMultiplicative& f, double theta,
                  const std::vector<Complex>& a, const std::vector<Complex>& b, unsigned threads) {
    const Box box = make_box(mu, nu, f.q());
    if (a.size() != box.m_hi - box.m_lo || b.size() != box.n_hi - box.n_lo)
        throw PreconditionError("coefficient vectors must cover [q^(mu-1), q^mu) and [q^(nu-1), q^nu)");
    const std::uint64_t len = box.m_hi - box.m_lo;
    const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(kRowChunks, len));
    std::vector<CompensatedComplexSum> parts(chunks);
    parallel_chunks(chunks, threads, [&](std::size_t c) {
        for (std::uint64_t i = len * c / chunks; i < len * (c + 1) / chunks; ++i) {
            CompensatedComplexSum row;
            for (std::uint64_t j = 0; j < b.size(); ++j) row.add(b[j] * g_term(f, theta, box.m_lo + i, box.n_lo + j));
            parts[c].add(a[i] * row.value());
        }
    });
    CompensatedComplexSum total;
    for (const auto& p : parts) total.merge(p);
    return total.value();
}

TypeIIAlignment type2_S20_aligned(unsigned mu, unsigned nu, const StronglyQMultiplicative& f, double theta,
                                  unsigned threads) {
    const Box box = make_box(mu, nu, f.q());
    const std::uint64_t M = box.m_hi - box.m_lo, N = box.n_hi - box.n_lo;
    TypeIIAlignment al;
    al.M = static_cast<double>(box.m_hi);
    al.pairs = M * N;
    std::vector<Complex> a(M, Complex(1.0, 0.0)), b(N, Complex(1.0, 0.0));

    // One pass over the box: out[i] = sum_j w[j] g(i, j) along rows, or along columns.
    auto sweep = [&](bool by_rows, const std::vector<Complex>& w, std::vector<Complex>& out) {
        const std::uint64_t len = by_rows ? M : N;
        const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(kRowChunks, len));
        parallel_chunks(chunks, threads, [&](std::size_t c) {
            for (std::uint64_t i = len * c / chunks; i < len * (c + 1) / chunks; ++i) {
                CompensatedComplexSum acc;
                for (std::uint64_t j = 0; j < w.size(); ++j)
                    acc.add(w[j] * (by_rows ? g_term(f, theta, box.m_lo + i, box.n_lo + j)
                                            : g_term(f, theta, box.m_lo + j, box.n_lo + i)));
                out[i] = acc.value();
            }
        });
    };
    auto align = [&](bool by_rows) {
        std::vector<Complex> v(by_rows ? M : N);
        sweep(by_rows, by_rows ? b : a, v);
        CompensatedSum total;
        for (std::size_t i = 0; i < v.size(); ++i) {
            (by_rows ? a : b)[i] = phase_of(v[i]);
            total.add(std::abs(v[i]));
        }
        return total.value();
    };
    al.rounds.push_back(std::abs(type2_S20(mu, nu, f, theta, a, b, threads)));
    for (int round = 0; round < 2; ++round) {
        al.rounds.push_back(align(true));
        al.rounds.push_back(align(false));
    }
    return al;
}

double type1_SI(unsigned mu, unsigned nu, const StronglyQMultiplicative& f, double theta,
                const std::vector<std::pair<std::uint64_t, std::uint64_t>>& intervals, unsigned threads) {
    const Box box = make_box(mu, nu, f.q());
    if (intervals.size() != box.m_hi - box.m_lo) throw PreconditionError("need one interval per m");
    for (const auto& [lo, hi] : intervals)
        if (lo > hi || lo < box.n_lo || hi > box.n_hi)
            throw PreconditionError("intervals must lie inside [q^(nu-1), q^nu)");
    return sum_rows(box.m_lo, box.m_hi, threads, [&](std::uint64_t m) {
        const auto& [lo, hi] = intervals[m - box.m_lo];
        CompensatedComplexSum inner;
        for (std::uint64_t n = lo; n < hi; ++n) inner.add(g_term(f, theta, m, n));
        return std::abs(inner.value());
    });
}

double type1_SI_max(unsigned mu, unsigned nu, const StronglyQMultiplicative& f, double theta, unsigned threads) {
    const Box box = make_box(mu, nu, f.q());
    return sum_rows(box.m_lo, box.m_hi, threads, [&](std::uint64_t m) {
        CompensatedComplexSum prefix;
        double best = 0.0;
        for (std::uint64_t n = box.n_lo; n < box.n_hi; ++n) {
            prefix.add(g_term(f, theta, m, n));
            best = std::max(best, std::abs(prefix.value()));
        }
        return best;
    });
}

TypeIIPlan type2_plan(std::int64_t mu, std::int64_t nu, const SpectralConstants& constants) {
    TypeIIPlan p;
    p.mu = mu;
    p.nu = nu;
    p.c = constants.c;
    p.eta = constants.eta;
    p.in_regime = constants.eta <= 1.0 / 2000.0;
    // The epsilon keeps exact products such as 128 * (1/2000) * 10^5 from rounding down.
    p.rho3 = floor_eps(128.0 * constants.eta * static_cast<double>(mu));
    p.rho = (p.rho3 + 1) / 2;
    p.rho_tilde = ceil_eps(constants.c * static_cast<double>(mu));
    p.rho1 = p.rho2 = 2 * p.rho3;
    p.rho5 = 10 * p.rho3;
    p.rho4 = std::min({static_cast<double>(p.rho3 - p.rho_tilde) / 4.0,
                       static_cast<double>(mu - p.rho - p.rho_tilde - p.rho1) / 6.0, static_cast<double>(mu) / 4.0});
    p.lambda = mu + nu + 2 * p.rho + p.rho_tilde;
    p.kappa1 = mu - p.rho;
    p.kappa2 = 2 * mu + nu + p.rho + p.rho_tilde;

    const struct {
        bool ok;
        const char* name;
    } checks[] = {
        {p.rho > 0, "rho > 0"},
        {8 * p.rho < mu, "rho < mu/8"},
        {8 * p.rho_tilde < mu, "rho_tilde < mu/8"},
        {p.rho < p.rho1, "rho < rho1"},
        {p.rho1 < mu - 3 * p.rho, "rho1 < mu - 3 rho"},
        {p.rho3 > p.rho_tilde, "rho3 > rho_tilde"},
    };
    p.accepted = true;
    for (const auto& c : checks) {
        if (!c.ok) {
            p.accepted = false;
            p.violated = c.name;
            break;
        }
    }
    return p;
}

TypeIRho type1_rho(std::int64_t nu, const SpectralConstants& constants) {
    TypeIRho out;
    out.rho = floor_eps(2.0 * constants.c * static_cast<double>(nu) / (2.5 - 2.0 * constants.eta));
    out.in_regime = constants.eta <= 1.0 / 2000.0;
    out.rho_le_nu_over_20 = 20 * out.rho <= nu;
    return out;
}

VaughanProbe vaughan_probe(std::uint64_t x, const StronglyQMultiplicative& f, double theta, double beta1,
                           unsigned threads) {
    const std::uint64_t q = f.q();
    if (x < q * q) throw PreconditionError("vaughan_probe requires x >= q^2");
    if (!(beta1 > 0.0) || !(beta1 < 1.0 / 3.0)) throw PreconditionError("vaughan_probe requires 0 < beta1 < 1/3");
    if (x > kVaughanCap) throw CapacityError("x = " + std::to_string(x) + " exceeds the Vaughan probe cap 10^7");

    VaughanProbe out;
    out.x = x;
    out.beta1 = beta1;
    out.beta2 = 1.0 - beta1;
    const double xd = static_cast<double>(x);

    std::vector<Complex> g(x + 1);
    for (std::uint64_t n = 1; n <= x; ++n) g[n] = f.eval(static_cast<u128>(n) * n) * twist(theta, n);

    auto m_range = [&](double M) {
        const auto lo = static_cast<std::uint64_t>(std::floor(M / static_cast<double>(q))) + 1;
        const auto hi = static_cast<std::uint64_t>(std::floor(M));
        return std::make_pair(lo, hi);
    };

    // Type I: sum_m max_t |sum_{t < n <= x/m} g(mn)|, t in [x/(qm), x/m].
    for (double M : probe_grid(1.0, std::pow(xd, beta1), q)) {
        const auto [mlo, mhi] = m_range(M);
        if (mlo > mhi) continue;
        const double v = sum_rows(mlo, mhi + 1, threads, [&](std::uint64_t m) {
            const std::uint64_t top = x / m;
            const std::uint64_t bottom = x / (q * m);
            CompensatedComplexSum suffix;
            double best = 0.0;
            for (std::uint64_t n = top; n > bottom; --n) {
                suffix.add(g[m * n]);
                best = std::max(best, std::abs(suffix.value()));
            }
            return best;
        });
        if (v > out.type1_max) {
            out.type1_max = v;
            out.type1_argmax_M = M;
        }
    }

    // Type II: alternating phase alignment from a = b = 1.
    for (double M : probe_grid(std::pow(xd, beta1), std::pow(xd, out.beta2), q)) {
        const auto [mlo, mhi] = m_range(M);
        if (mlo > mhi) continue;
        TypeIIAlignment al;
        al.M = M;
        const std::uint64_t n_max = x / mlo;
        std::vector<Complex> a(mhi - mlo + 1, Complex(1.0, 0.0));
        std::vector<Complex> b(n_max + 1, Complex(1.0, 0.0));
        for (std::uint64_t m = mlo; m <= mhi; ++m) al.pairs += x / m - x / (q * m);

        auto rows = [&](bool align) {
            CompensatedSum total;
            CompensatedComplexSum plain;
            for (std::uint64_t m = mlo; m <= mhi; ++m) {
                CompensatedComplexSum inner;
                for (std::uint64_t n = x / (q * m) + 1; n <= x / m; ++n) inner.add(b[n] * g[m * n]);
                const Complex v = inner.value();
                if (align) a[m - mlo] = phase_of(v);
                total.add(std::abs(v));
                plain.add(a[m - mlo] * v);
            }
            return align ? total.value() : std::abs(plain.value());
        };
        auto cols = [&]() {
            std::vector<CompensatedComplexSum> col(n_max + 1);
            for (std::uint64_t m = mlo; m <= mhi; ++m)
                for (std::uint64_t n = x / (q * m) + 1; n <= x / m; ++n) col[n].add(a[m - mlo] * g[m * n]);
            CompensatedSum total;
            for (std::uint64_t n = 1; n <= n_max; ++n) {
                const Complex v = col[n].value();
                b[n] = phase_of(v);
                total.add(std::abs(v));
            }
            return total.value();
        };
        al.rounds.push_back(rows(false));
        for (int round = 0; round < 2; ++round) {
            al.rounds.push_back(rows(true));
            al.rounds.push_back(cols());
        }
        if (al.rounds.back() > out.type2_max) {
            out.type2_max = al.rounds.back();
            out.type2_argmax_M = M;
        }
        out.type2.push_back(std::move(al));
    }

    out.lambda_sum = prime_power_sum(x / q, x, threads, [&](std::uint64_t n) { return g[n]; });
    out.U = std::max(out.type1_max, out.type2_max);
    const double lx = std::log(xd);
    out.C = out.U > 0.0 ? std::abs(out.lambda_sum) / (out.U * lx * lx) : 0.0;
    return out;
}

DecayFit decay_fit(const std::vector<std::uint64_t>& xs, const StronglyQMultiplicative& f, double theta,
                   unsigned threads) {
    if (xs.size() < 3) throw PreconditionError("decay_fit needs at least 3 x values");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i] <= xs[i - 1]) throw PreconditionError("decay_fit x values must be strictly increasing");
    DecayFit fit;
    fit.xs = xs;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::uint64_t x : xs) {
        if (x < 2) throw PreconditionError("decay_fit x values must be at least 2");
        const double v = std::abs(lambda_weighted_sum(x, f, theta, threads)) / static_cast<double>(x);
        fit.values.push_back(v);
        const double lx = std::log(static_cast<double>(x));
        const double ly = std::log(v);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(xs.size());
    fit.fitted_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return fit;
}

}  // namespace sqdigits
