#include "commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>

#include "sqdigits/errors.hpp"
#include "sqdigits/expsums.hpp"
#include "sqdigits/fourier.hpp"
#include "sqdigits/harness.hpp"
#include "sqdigits/vaaler.hpp"

namespace sqcli {

using namespace sqdigits;

namespace {

constexpr int kInstances = 16;  // random instances per lemma suite
const double kPi = std::numbers::pi;

// largest lambda with q^lambda <= 2^bits
unsigned digits_within(std::uint64_t q, unsigned bits) {
    unsigned lam = 0;
    long double v = q;
    while (v <= std::ldexp(1.0L, static_cast<int>(bits))) {
        ++lam;
        v *= static_cast<long double>(q);
    }
    return lam;
}

double pow_q(std::uint64_t q, unsigned k) { return std::pow(static_cast<double>(q), static_cast<double>(k)); }

std::string join(std::initializer_list<std::string> parts) {
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
    return s;
}

Complex unit(Draw& d) { return expi2pi(d.uniform(0, 1)); }

double frequency(const Config& cfg, Draw& d) {
    // a nonzero --theta pins the frequency of the frequency-driven families
    const double u = d.uniform(0.001, 0.999);
    return cfg.theta != 0.0 ? cfg.theta : u;
}

bool proper(const StronglyQMultiplicative& f) { return is_proper(f); }

// c and eta estimates for f = e(gamma s_q).
double c_lower_bound(std::uint64_t q, const Rational& gamma) {
    const double w = (Rational(static_cast<std::int64_t>(q - 1)) * gamma).frac().to_double();
    const double d = std::min(w, 1 - w);
    return kPi * kPi * static_cast<double>(q - 1) / (12.0 * static_cast<double>(q + 1) * std::log(static_cast<double>(q))) *
           d * d;
}

double eta_upper_bound(std::uint64_t q) {
    const double qd = static_cast<double>(q);
    return (2.0 / (qd * std::sin(kPi / (2.0 * qd))) + 2.0 / kPi * std::log(2.0 * qd / kPi)) / std::log(qd);
}

void add(Report& r, Row row, bool contract = true) {
    row.contract = contract;
    r.rows.push_back(std::move(row));
}

// ------------------------------------------------------------ expsum families

void family_rows(Report& r, const std::string& fam, const Config& cfg, Draw& d) {
    for (int i = 0; i < kInstances; ++i) {
        if (fam == "geometric") {
            const auto L1 = d.integer(-1000, 1000), L2 = L1 + d.integer(0, 2000);
            const double xi = frequency(cfg, d);
            const auto b = geometric_sum(L1, L2, xi);
            add(r, upper("geometric_sum", join({kv("L1", L1), kv("L2", L2), kv("xi", xi)}), b.exact, b.bound));
        } else if (fam == "min") {
            const auto N1 = d.integer(-500, 500), N2 = N1 + d.integer(1, 2000);
            const double M = d.uniform(1, 100), xi = frequency(cfg, d), phi = d.uniform(0, 1);
            const auto b = min_sum(N1, N2, M, xi, phi);
            add(r, upper("min_sum", join({kv("N1", N1), kv("N2", N2), kv("M", M), kv("xi", xi), kv("phi", phi)}),
                         b.exact, b.bound),
                b.explicit_constant);
        } else if (fam == "gauss") {
            const auto m = d.integer(1, 400), a = d.integer(0, m - 1), b0 = d.integer(0, m - 1);
            const auto b = gauss_complete(a, b0, m);
            add(r, upper("gauss_complete", join({kv("a", a), kv("b", b0), kv("m", m)}), b.exact, b.bound));
        } else if (fam == "gauss-incomplete") {
            const auto m = d.integer(1, 400), a = d.integer(0, m - 1), b0 = d.integer(0, m - 1);
            const auto n0 = d.integer(-1000, 1000), N = d.integer(1, 2000);
            const auto b = gauss_incomplete(a, b0, m, n0, N);
            add(r, upper("gauss_incomplete", join({kv("a", a), kv("b", b0), kv("m", m), kv("n0", n0), kv("N", N)}),
                         b.exact, b.bound));
        } else if (fam == "weyl") {
            const auto m = d.integer(2, 500);
            std::int64_t a = d.integer(1, m - 1);
            while (std::gcd(a, m) != 1) a = a % (m - 1) + 1;
            const double md = static_cast<double>(m);
            const double alpha = static_cast<double>(a) / md + d.uniform(-1, 1) / (md * md);
            const double beta = d.uniform(0, 1), gam = d.uniform(0, 1);
            const auto n0 = d.integer(-1000, 1000), N = d.integer(1, 5000);
            const auto b = weyl_quadratic(alpha, beta, gam, n0, N, a, m);
            add(r, upper("weyl_quadratic",
                         join({kv("alpha", alpha), kv("beta", beta), kv("n0", n0), kv("N", N), kv("a", a), kv("m", m)}),
                         b.exact, b.bound),
                b.explicit_constant);
        } else if (fam == "gcd") {
            const auto m = d.integer(1, 1000), A = d.integer(1, 2000);
            const double g = d.uniform(0.25, 2.5);
            const auto b = gcd_average(m, A, g);
            add(r, upper("gcd_average", join({kv("m", m), kv("A", A), kv("gamma", g)}), b.exact, b.bound));
        } else if (fam == "second-derivative") {
            const double u = d.uniform(0.0001, 0.1);
            const double th = cfg.theta != 0.0 ? cfg.theta : u;
            const auto N = d.integer(1, 5000);
            const auto b = second_derivative_test(th, N);
            add(r, upper("second_derivative_test", join({kv("theta", th), kv("N", N)}), b.exact, b.bound),
                b.explicit_constant);
        } else if (fam == "divisor") {
            const auto lam = static_cast<unsigned>(d.integer(1, 40));
            const double x = -d.uniform(0.05, 2.0);
            const auto b = divisor_bounds(cfg.q, lam, x);
            const auto inst = join({kv("q", static_cast<std::int64_t>(cfg.q)), kv("lambda", std::int64_t{lam})});
            add(r, lower("tau_lower", inst, static_cast<double>(b.tau_val), b.tau_lower));
            add(r, upper("tau_upper", inst, static_cast<double>(b.tau_val), b.tau_upper));
            add(r, upper("sigma", join({inst, kv("x", x)}), b.sigma_val, b.sigma_bound));
        } else if (fam == "vdc") {
            const auto N = d.integer(1, 300), Np = d.integer(1, 10), R = d.integer(1, 40);
            std::vector<Complex> z(static_cast<std::size_t>(N));
            for (auto& v : z) v = Complex(d.uniform(-1, 1), d.uniform(-1, 1));
            const auto c = vdc_variant_check(z, Np, R);
            add(r, upper("vdc_variant", join({kv("N", N), kv("N'", Np), kv("R", R)}), c.lhs, c.rhs, 1e-9, 1e-9));
        } else if (fam == "bilinear") {
            const auto M = d.integer(8, 64), N = d.integer(8, 64);
            std::vector<Complex> a(static_cast<std::size_t>(M)), b(static_cast<std::size_t>(N));
            for (auto& v : a) v = unit(d);
            for (auto& v : b) v = unit(d);
            const double xi = frequency(cfg, d);
            const double MN = static_cast<double>(M * N);
            const auto inst = join({kv("M", M), kv("N", N), kv("xi", xi)});
            const double s3 = std::abs(bilinear_quadratic_sum(a, b, std::array<double, 4>{0.0, 0.0, xi, 0.0}, cfg.threads)) / MN;
            const double s2 = std::abs(bilinear_quadratic_sum(a, b, std::array<double, 4>{0.0, xi, 0.0, 0.0}, cfg.threads)) / MN;
            const double s4 = std::abs(bilinear_quadratic_sum(a, b, std::array<double, 4>{0.0, 0.0, 0.0, xi}, cfg.threads)) / MN;
            add(r, upper("bilinear_mn2", inst, s3 * s3, bound_mn2(M, N, xi)), false);
            add(r, upper("bilinear_m2n", inst, s2 * s2, bound_xi2(M, N, xi)), false);
            add(r, upper("bilinear_m2n2", inst, s4 * s4 * s4 * s4, bound_m2n2(M, N, xi)), false);
        }
    }
}

// ------------------------------------------------------------ verify

void fourier_suites(Report& r, const StronglyQMultiplicative& f, const Rational& gamma, Draw& d,
                    std::vector<std::string>& skipped) {
    const auto q = f.q();
    const unsigned L = std::max(1u, digits_within(q, 14));

    for (int i = 0; i < kInstances; ++i) {
        const auto lam = static_cast<unsigned>(d.integer(0, L));
        const double t = d.uniform(0, 1000);
        add(r, equal("quadratic_mean", join({kv("lambda", std::int64_t{lam}), kv("t", t)}), quadratic_mean(f, lam, t),
                     1.0, 1e-9));
    }
    for (int i = 0; i < kInstances; ++i) {
        const auto k1 = static_cast<unsigned>(d.integer(0, 5));
        const auto k2 = k1 + static_cast<unsigned>(d.integer(0, 12));
        const double t = d.uniform(0, 1000);
        const auto v = digit_sum_decay_bound(q, gamma, k1, k2, t);
        add(r, upper("digit_sum_decay", join({kv("k1", std::int64_t{k1}), kv("k2", std::int64_t{k2}), kv("t", t)}),
                     v.value, v.bound));
    }
    for (int i = 0; i < kInstances; ++i) {
        const auto lam = static_cast<unsigned>(d.integer(1, L));
        const auto k1 = static_cast<unsigned>(d.integer(0, 3));
        const double A = d.uniform(1, pow_q(q, lam) * (1 - 1e-9));
        const double B = d.uniform(0, 100);
        const auto v = almost_ap_l2_sum(f, k1, k1 + lam, A, B);
        add(r, upper("almost_ap_l2",
                     join({kv("k1", std::int64_t{k1}), kv("k2", std::int64_t{k1 + lam}), kv("A", A), kv("B", B)}),
                     v.value, v.bound));
    }
    for (int i = 0; i < kInstances; ++i) {
        const double delta = 1.0 / static_cast<double>(d.integer(4, 200));
        const auto want = static_cast<std::size_t>(d.integer(1, static_cast<std::int64_t>(0.5 / delta)));
        std::vector<double> nodes;
        for (int tries = 0; nodes.size() < want && tries < 20000; ++tries) {
            const double x = d.uniform(0, 1);
            bool spaced = true;
            for (double y : nodes) {
                const double gap = std::fabs(x - y);
                if (std::min(gap, 1 - gap) < delta) spaced = false;
            }
            if (spaced) nodes.push_back(x);
        }
        const auto v = large_sieve_sum(f, 0, L, nodes, delta);
        auto row = upper("large_sieve", join({kv("delta", delta), kv("nodes", static_cast<std::int64_t>(nodes.size()))}),
                         v.value, v.bound, 0, 0);
        row.pass = v.value < v.bound;
        add(r, row);
    }
    const unsigned W = std::max(1u, std::min(6u, digits_within(q, 12)));
    for (int i = 0; i < kInstances; ++i) {
        const auto lam = static_cast<unsigned>(d.integer(1, W));
        const auto k1 = static_cast<unsigned>(d.integer(0, 4));
        const auto K = d.integer(1, 8);
        const i128 a = d.integer(-1000000000, 1000000000);
        const auto inst = join({kv("a", static_cast<std::int64_t>(a)), kv("k1", std::int64_t{k1}),
                                kv("k2", std::int64_t{k1 + lam}), kv("K", K)});
        const auto v = truncated_f_H(f, a, k1, k1 + lam, K);
        add(r, upper("truncation_error", inst, std::abs(eval_truncated(f, a, k1, k1 + lam) - v.approx), v.error_bound,
                     0, 1e-9));
        const double t = d.uniform(0, 1000);
        const auto l2 = l2_mean_chiH_F(f, k1, k1 + lam, K, t);
        const auto l1 = l1_mean_chiH_F(f, k1, k1 + lam, K, t);
        add(r, upper("l2_mean_chiH_F", join({inst, kv("t", t)}), l2.value, l2.bound));
        add(r, upper("l1_mean_chiH_F", join({inst, kv("t", t)}), l1.value, l1.bound));
    }

    if (!proper(f) || q > kMaxConstantsBase) {
        skipped.push_back("l1_masked_sum");
        skipped.push_back("spectral_constants");
        return;
    }
    const auto k = compute_constants(f);
    add(r, lower("c_lower", kv("q", static_cast<std::int64_t>(q)), k.c, c_lower_bound(q, gamma)));
    add(r, upper("eta_upper", kv("q", static_cast<std::int64_t>(q)), k.eta, eta_upper_bound(q)));
    for (int i = 0; i < kInstances; ++i) {
        const auto lam = static_cast<unsigned>(d.integer(0, L));
        const auto delta = static_cast<unsigned>(d.integer(0, lam));
        const auto a = d.integer(0, static_cast<std::int64_t>(pow_q(q, delta)) - 1);
        const double t = d.uniform(0, 1000);
        const auto v = l1_masked_sum(f, lam, delta, a, t, k);
        add(r, upper("l1_masked_sum",
                     join({kv("lambda", std::int64_t{lam}), kv("delta", std::int64_t{delta}), kv("a", a), kv("t", t)}),
                     v.value, v.bound));
    }
}

void kernel_suites(Report& r, Draw& d) {
    for (int i = 0; i < kInstances; ++i) {
        const VaalerKernel k{d.uniform(0.05, 0.95), d.integer(1, 60), d.integer(0, 1) == 1};
        const double defect = sandwich_defect(k, 2000);
        add(r, upper("vaaler_sandwich",
                     join({kv("alpha", k.alpha), kv("H", k.H), kv("shifted", std::int64_t{k.shifted})}), defect, 0.0,
                     0, 1e-9));
    }
    for (int i = 0; i < kInstances; ++i) {
        const auto U = d.integer(2, 20), a = d.integer(0, U - 1);
        const auto s = aliased_chi_sq_sum(U, a);
        add(r, equal("aliased_chi_sq", join({kv("U", U), kv("a", a)}), s.value, 1.0 / static_cast<double>(U * U),
                     s.tail_bound + 1e-12));
    }
    for (int i = 0; i < kInstances; ++i) {
        const auto H = d.integer(1, 64), U = d.integer(2, H + 1), ell = d.integer(-2 * H, 2 * H);
        const auto c = convolution_defects(U, H, ell);
        const double cap = 1.0 / static_cast<double>(H + 1);
        const auto inst = join({kv("U", U), kv("H", H), kv("ell", ell)});
        add(r, equal("chiB_sum", inst, c.chiB_sum, cap, 1e-10));
        add(r, upper("BB_sum", inst, c.BB_sum, cap));
        add(r, upper("chiH_convolution", inst, c.chiH_defect, 3 * cap));
    }
}

Report verify(const Config& cfg, const StronglyQMultiplicative& f, const Rational& gamma) {
    Report r;
    Draw d(cfg.seed);
    for (const auto& fam : {"geometric", "gauss", "gauss-incomplete", "gcd", "divisor", "vdc"})
        family_rows(r, fam, cfg, d);
    std::vector<std::string> skipped;
    fourier_suites(r, f, gamma, d, skipped);
    kernel_suites(r, d);

    // per-lemma summary
    std::map<std::string, std::pair<int, int>> tally;
    std::vector<std::string> order;
    for (const auto& row : r.rows) {
        if (!tally.count(row.lemma)) order.push_back(row.lemma);
        auto& t = tally[row.lemma];
        ++t.first;
        if (!row.pass) ++t.second;
    }
    auto suites = ordered_json::array();
    for (const auto& name : order)
        suites.push_back({{"lemma", name}, {"instances", tally[name].first}, {"failures", tally[name].second}});
    r.data["suites"] = suites;
    r.data["skipped"] = skipped;
    return r;
}

// ------------------------------------------------------------ constants

Report constants(const Config& cfg, const Rational& gamma, bool single_q) {
    Report r;
    auto table = ordered_json::array();
    std::vector<std::uint64_t> qs;
    if (single_q) qs.push_back(cfg.q);
    else
        for (std::uint64_t q = 2; q <= 13; ++q) qs.push_back(q);
    for (auto q : qs) {
        const auto f = make_digit_exponential(q, gamma);
        ordered_json e;
        e["q"] = q;
        e["gamma"] = gamma.str();
        if (!proper(f)) {
            e["proper"] = false;
            e["diagnostic"] = "(q-1)*gamma = " + (Rational(static_cast<std::int64_t>(q - 1)) * gamma).str() +
                              " is an integer: f is a character e(gamma n), c and eta are not defined";
            table.push_back(e);
            continue;
        }
        const auto k = compute_constants(f);
        const double cl = c_lower_bound(q, gamma), eu = eta_upper_bound(q);
        e["proper"] = true;
        e["c"] = k.c;
        e["c_lower_bound"] = cl;
        e["argmax_c"] = k.argmax_c;
        e["eta"] = k.eta;
        e["eta_upper_bound"] = eu;
        e["argmax_eta"] = k.argmax_eta;
        table.push_back(e);
        const auto inst = join({kv("q", static_cast<std::int64_t>(q)), "gamma=" + gamma.str()});
        add(r, lower("c_lower", inst, k.c, cl));
        add(r, upper("eta_upper", inst, k.eta, eu));
    }
    r.data["table"] = table;
    return r;
}

// ------------------------------------------------------------ equidist

Report equidist(const Config& cfg) {
    Report r;
    const auto e = equidist_counts(cfg.x, cfg.q, cfg.m, cfg.threads);
    std::uint64_t total = 0;
    const double share = static_cast<double>(e.pi_x) / static_cast<double>(e.m);
    for (std::size_t a = 0; a < e.counts.size(); ++a) {
        total += e.counts[a];
        const double c = static_cast<double>(e.counts[a]);
        Row row{"equidist_class", kv("a", static_cast<std::int64_t>(a)), c, share, c / share, true, false};
        // informational: within 1% of pi(x), the tolerance used at x = 10^7
        row.pass = std::fabs(c - share) <= 0.01 * static_cast<double>(e.pi_x);
        r.rows.push_back(row);
    }
    add(r, equal("partition", kv("x", static_cast<std::int64_t>(e.x)), static_cast<double>(total),
                 static_cast<double>(e.pi_x), 0.0));
    r.data["x"] = e.x;
    r.data["q"] = e.q;
    r.data["m"] = e.m;
    r.data["counts"] = e.counts;
    r.data["pi_x"] = e.pi_x;
    r.data["max_rel_discrepancy"] = e.max_rel_discrepancy;
    r.data["m_coprime_to_q_minus_1"] = e.m_coprime_to_q_minus_1;
    r.data["q_prime"] = e.q_prime;
    return r;
}

// ------------------------------------------------------------ typesums

// Sweep points scaled so that q^mu and q^nu stay near the binary reference sizes.
std::vector<std::pair<unsigned, unsigned>> sweep(std::uint64_t q, std::initializer_list<std::pair<unsigned, unsigned>> ref) {
    std::vector<std::pair<unsigned, unsigned>> out;
    const double s = std::log(2.0) / std::log(static_cast<double>(q));
    for (auto [m2, n2] : ref) {
        const auto mu = std::max(1u, static_cast<unsigned>(std::lround(m2 * s)));
        const auto nu = std::max(1u, static_cast<unsigned>(std::lround(n2 * s)));
        if (out.empty() || out.back() != std::make_pair(mu, nu)) out.emplace_back(mu, nu);
    }
    return out;
}

ordered_json plan_json(const TypeIIPlan& p) {
    return {{"mu", p.mu},         {"nu", p.nu},         {"rho", p.rho},         {"rho_tilde", p.rho_tilde},
            {"rho1", p.rho1},     {"rho2", p.rho2},     {"rho3", p.rho3},       {"rho4", p.rho4},
            {"rho5", p.rho5},     {"lambda", p.lambda}, {"kappa1", p.kappa1},   {"kappa2", p.kappa2},
            {"in_regime", p.in_regime}, {"accepted", p.accepted}, {"violated", p.violated}};
}

Report typesums(const Config& cfg, const StronglyQMultiplicative& f) {
    Report r;
    Draw d(cfg.seed);
    const auto q = cfg.q;
    std::optional<SpectralConstants> k;
    if (!proper(f)) r.data["diagnostic"] = "f is improper: no spectral constants, plans omitted";
    else if (q > kMaxConstantsBase) r.data["diagnostic"] = "q above the spectral-constant cap: plans omitted";
    else k = compute_constants(f);

    auto s20 = ordered_json::array();
    for (auto [mu, nu] : sweep(q, {{6, 10}, {7, 12}, {8, 14}})) {
        const auto inst = join({kv("mu", std::int64_t{mu}), kv("nu", std::int64_t{nu})});
        const auto al = type2_S20_aligned(mu, nu, f, cfg.theta, cfg.threads);
        std::vector<Complex> a(static_cast<std::size_t>(pow_q(q, mu) - pow_q(q, mu - 1)));
        std::vector<Complex> b(static_cast<std::size_t>(pow_q(q, nu) - pow_q(q, nu - 1)));
        for (auto& v : a) v = unit(d);
        for (auto& v : b) v = unit(d);
        const double rnd = std::abs(type2_S20(mu, nu, f, cfg.theta, a, b, cfg.threads));
        const double pairs = static_cast<double>(al.pairs);
        add(r, upper("S20_random", inst, rnd, pairs));
        add(r, upper("S20_aligned", inst, al.rounds.back(), pairs));
        bool monotone = true;
        for (std::size_t i = 1; i < al.rounds.size(); ++i)
            if (al.rounds[i] < al.rounds[i - 1] * (1 - 1e-12)) monotone = false;
        ordered_json e{{"mu", mu},
                       {"nu", nu},
                       {"pairs", al.pairs},
                       {"random", rnd},
                       {"aligned_rounds", al.rounds},
                       {"aligned_monotone", monotone},
                       {"normalized_aligned", al.rounds.back() / pow_q(q, mu + nu)}};
        if (k) e["plan"] = plan_json(type2_plan(mu, nu, *k));
        s20.push_back(e);
    }
    auto si = ordered_json::array();
    for (auto [mu, nu] : sweep(q, {{2, 8}, {3, 12}, {4, 16}})) {
        const double v = type1_SI_max(mu, nu, f, cfg.theta, cfg.threads);
        const double pairs = (pow_q(q, mu) - pow_q(q, mu - 1)) * (pow_q(q, nu) - pow_q(q, nu - 1));
        add(r, upper("S_I_max", join({kv("mu", std::int64_t{mu}), kv("nu", std::int64_t{nu})}), v, pairs));
        ordered_json e{{"mu", mu}, {"nu", nu}, {"value", v}, {"normalized", v / pow_q(q, mu + nu)}};
        if (k) {
            const auto rho = type1_rho(nu, *k);
            e["rho"] = {{"rho", rho.rho}, {"in_regime", rho.in_regime}, {"rho_le_nu_over_20", rho.rho_le_nu_over_20}};
        }
        si.push_back(e);
    }
    r.data["S20"] = s20;
    r.data["S_I"] = si;
    return r;
}

// ------------------------------------------------------------ decay

Report decay(const Config& cfg, const StronglyQMultiplicative& f) {
    std::vector<std::uint64_t> xs;
    for (std::uint64_t x = 10000; x <= cfg.x; x *= 10) xs.push_back(x);
    if (xs.empty() || xs.back() != cfg.x) xs.push_back(cfg.x);
    if (xs.size() < 3) throw UsageError("decay needs --x >= 1e6 (at least three points from 1e4)");
    const auto fit = decay_fit(xs, f, cfg.theta, cfg.threads);
    Report r;
    // psi(x) < 1.03883 x bounds |S(x)| / x for every x
    for (std::size_t i = 0; i < xs.size(); ++i)
        add(r, upper("lambda_sum", kv("x", static_cast<std::int64_t>(xs[i])), fit.values[i], 1.03883));
    r.data["xs"] = fit.xs;
    r.data["values"] = fit.values;
    r.data["fitted_exponent"] = fit.fitted_exponent;
    return r;
}

}  // namespace

Report run(const Config& cfg) {
    const auto gamma = Rational::parse(cfg.gamma);
    const auto f = make_digit_exponential(cfg.q, gamma);
    Report r;
    if (cfg.command == "verify") r = verify(cfg, f, gamma);
    else if (cfg.command == "constants") r = constants(cfg, gamma, !cfg.all_q);
    else if (cfg.command == "equidist") r = equidist(cfg);
    else if (cfg.command == "expsum") {
        Draw d(cfg.seed);
        family_rows(r, cfg.family, cfg, d);
    } else if (cfg.command == "typesums") r = typesums(cfg, f);
    else if (cfg.command == "decay") r = decay(cfg, f);
    else throw UsageError("unknown command " + cfg.command);

    r.command = cfg.command;
    r.config["q"] = cfg.q;
    r.config["m"] = cfg.m;
    r.config["gamma"] = gamma.str();
    r.config["x"] = cfg.x;
    r.config["theta"] = cfg.theta;
    r.config["seed"] = cfg.seed;
    if (cfg.command == "expsum") r.config["family"] = cfg.family;
    return r;
}

}  // namespace sqcli
