#include "sqdigits/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sqdigits/errors.hpp"
#include "sqdigits/numerics.hpp"

namespace sqdigits {

namespace {

constexpr std::uint64_t kSpotChecksPerRun = 1000;

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// r^k, saturating at 2^64.
u128 pow_sat(std::uint64_t r, unsigned k) {
    u128 v = 1;
    for (unsigned i = 0; i < k; ++i) {
        v *= r;
        if (v > (u128{1} << 64)) return u128{1} << 64;
    }
    return v;
}

std::uint64_t iroot(std::uint64_t n, unsigned k) {
    auto r = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / k)));
    while (r > 0 && pow_sat(r, k) > n) --r;
    while (pow_sat(r + 1, k) <= n) ++r;
    return r;
}

// splitmix64, used only to place spot checks deterministically.
std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void spot_check(const SieveSegment& seg, std::uint64_t samples, std::uint64_t salt) {
    const std::uint64_t span = seg.hi - seg.lo;
    if (span == 0) return;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const std::uint64_t n = seg.lo + mix(salt * 1000003 + i) % span;
        if (seg.is_prime(n) != is_prime_trial(n))
            throw std::logic_error("sieve segment disagrees with trial division at n = " + std::to_string(n));
    }
}

}  // namespace

bool SieveSegment::is_prime(std::uint64_t n) const {
    if (n < lo || n >= hi) throw PreconditionError("n outside the sieve segment");
    if (n == 2) return true;
    if (n % 2 == 0) return false;
    const std::uint64_t i = (n - lo - 1) / 2;
    return ((flags[i / 64] >> (i % 64)) & 1) == 0;
}

std::vector<std::uint64_t> SieveSegment::primes() const {
    std::vector<std::uint64_t> out;
    if (lo <= 2 && hi > 2) out.push_back(2);
    const std::uint64_t bits = (hi - lo) / 2;
    for (std::uint64_t w = 0; w < flags.size(); ++w) {
        std::uint64_t free = ~flags[w];
        while (free != 0) {
            const auto b = static_cast<std::uint64_t>(__builtin_ctzll(free));
            const std::uint64_t i = w * 64 + b;
            if (i >= bits) break;
            out.push_back(lo + 2 * i + 1);
            free &= free - 1;
        }
    }
    return out;
}

bool is_prime_trial(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> base_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 3) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 3; p <= limit; p += 2) {
        if (composite[p]) continue;
        out.push_back(p);
        for (std::uint64_t k = p * p; k <= limit; k += 2 * p) composite[k] = true;
    }
    return out;
}

SieveSegment sieve_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint64_t>& odd_base_primes) {
    if (lo % 2 != 0 || hi < lo) throw PreconditionError("segment needs an even lower bound and lo <= hi");
    if ((hi - lo + 1) / 2 > kSegmentBits) throw PreconditionError("segment exceeds 2^22 odd numbers");
    SieveSegment seg;
    seg.lo = lo;
    seg.hi = hi;
    const std::uint64_t bits = (hi - lo + 1) / 2;
    seg.flags.assign((bits + 63) / 64, 0);
    auto mark = [&](std::uint64_t n) {
        const std::uint64_t i = (n - lo - 1) / 2;
        seg.flags[i / 64] |= std::uint64_t{1} << (i % 64);
    };
    if (lo == 0 && hi > 1) mark(1);
    for (std::uint64_t p : odd_base_primes) {
        if (p * p >= hi) break;
        std::uint64_t start = (lo + 1 + p - 1) / p * p;
        if (start % 2 == 0) start += p;
        start = std::max(start, p * p);
        for (std::uint64_t n = start; n < hi; n += 2 * p) mark(n);
    }
    return seg;
}

std::size_t segment_count(std::uint64_t x) { return static_cast<std::size_t>(x / kSegmentSpan + 1); }

void for_each_segment(std::uint64_t x, unsigned threads,
                      const std::function<void(std::size_t, const std::vector<std::uint64_t>&)>& visit) {
    if (x > kSieveCap) throw CapacityError("x = " + std::to_string(x) + " exceeds the sieve cap 10^9");
    const auto base = base_primes(isqrt(x) + 1);
    const std::size_t segments = segment_count(x);
    const std::uint64_t samples = (kSpotChecksPerRun + segments - 1) / segments;
    parallel_chunks(segments, threads, [&](std::size_t k) {
        const std::uint64_t lo = k * kSegmentSpan;
        const std::uint64_t hi = std::min<std::uint64_t>(lo + kSegmentSpan, x + 1);
        const SieveSegment seg = sieve_segment(lo, hi, base);
        spot_check(seg, samples, k);
        visit(k, seg.primes());
    });
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t x, unsigned threads) {
    std::vector<std::vector<std::uint64_t>> parts(segment_count(x));
    for_each_segment(x, threads, [&](std::size_t k, const std::vector<std::uint64_t>& p) { parts[k] = p; });
    std::vector<std::uint64_t> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::uint64_t prime_count(std::uint64_t x, unsigned threads) {
    std::vector<std::uint64_t> counts(segment_count(x), 0);
    for_each_segment(x, threads, [&](std::size_t k, const std::vector<std::uint64_t>& p) { counts[k] = p.size(); });
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

double mangoldt(std::uint64_t n) {
    if (n < 1) throw PreconditionError("mangoldt requires n >= 1");
    if (n == 1) return 0.0;
    for (unsigned k = 1; k < 64 && (std::uint64_t{1} << k) <= n; ++k) {
        const std::uint64_t r = iroot(n, k);
        if (pow_sat(r, k) == n && is_prime_trial(r)) return std::log(static_cast<double>(r));
    }
    return 0.0;
}

std::vector<double> mangoldt_table(std::uint64_t x) {
    if (x > kMangoldtTableCap)
        throw CapacityError("x = " + std::to_string(x) + " exceeds the in-memory Mangoldt table cap 10^8");
    std::vector<double> table(x + 1, 0.0);
    for (std::uint64_t p : primes_up_to(x)) {
        const double lp = std::log(static_cast<double>(p));
        for (u128 v = p; v <= x; v *= p) table[static_cast<std::size_t>(v)] = lp;
    }
    return table;
}

}  // namespace sqdigits
