/*
 * sieve.hpp - segmented sieve of Eratosthenes and the von Mangoldt function.
 *
 * Segments hold odd numbers only, one bit each, 2^22 bits per segment
 * (2^23 integers). Segment k covers [k 2^23, (k+1) 2^23). Base primes up
 * to sqrt(x) are sieved once per call.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace sqdigits {

inline constexpr std::uint64_t kSieveCap = 1000000000;
inline constexpr std::uint64_t kMangoldtTableCap = 100000000;
inline constexpr std::uint64_t kSegmentBits = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kSegmentSpan = 2 * kSegmentBits;

struct SieveSegment {
    std::uint64_t lo = 0;  // inclusive, even
    std::uint64_t hi = 0;  // exclusive
    std::vector<std::uint64_t> flags;  // bit i set <=> lo + 2i + 1 is composite (or 1)

    bool is_prime(std::uint64_t n) const;
    std::vector<std::uint64_t> primes() const;
};

// Odd primes up to limit by the plain (monolithic) sieve.
std::vector<std::uint64_t> base_primes(std::uint64_t limit);

SieveSegment sieve_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint64_t>& odd_base_primes);

std::size_t segment_count(std::uint64_t x);

// Calls visit(k, primes of segment k that are <= x) for every segment k,
// possibly concurrently for distinct k. CapacityError above kSieveCap.
void for_each_segment(std::uint64_t x, unsigned threads,
                      const std::function<void(std::size_t, const std::vector<std::uint64_t>&)>& visit);

std::vector<std::uint64_t> primes_up_to(std::uint64_t x, unsigned threads = 1);
std::uint64_t prime_count(std::uint64_t x, unsigned threads = 1);

// Trial division, for spot checks.
bool is_prime_trial(std::uint64_t n);

// log p if n = p^k, else 0. Requires n >= 1.
double mangoldt(std::uint64_t n);

// Lambda(n) for 0 <= n <= x (entry 0 unused). CapacityError above kMangoldtTableCap.
std::vector<double> mangoldt_table(std::uint64_t x);

}  // namespace sqdigits
