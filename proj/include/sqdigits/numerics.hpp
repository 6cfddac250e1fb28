/*
 * numerics.hpp - small numeric kernels shared by every module.
 *
 *   e(x)      = exp(2 pi i x), with x reduced mod 1 before the trig call
 *   frac(x)   = x - floor(x)
 *   dist1(x)  = ||x||, distance to the nearest integer
 *
 * Accumulators use Neumaier's compensated summation. Parallel helpers split
 * a range into a fixed number of chunks that does not depend on the thread
 * count, and results are merged in chunk order, so every reduction is
 * bitwise reproducible.
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <algorithm>
#include <functional>
#include <numbers>
#include <thread>
#include <vector>

namespace sqdigits {

using Complex = std::complex<double>;
using u128 = unsigned __int128;
using i128 = __int128;

inline double frac(double x) { return x - std::floor(x); }

inline long double frac(long double x) { return x - std::floor(x); }

// |z|^2 without the hypot detour std::norm takes for doubles
inline double abs2(Complex z) { return z.real() * z.real() + z.imag() * z.imag(); }

inline double dist1(double x) {
    const double r = frac(x);
    return r > 0.5 ? 1.0 - r : r;
}

// e(x) for x already reduced to a modest range.
inline Complex expi2pi(double x) {
    const double r = frac(x);
    const double a = 2.0 * std::numbers::pi * r;
    return {std::cos(a), std::sin(a)};
}

// e(num / den) with exact integer reduction of the numerator.
inline Complex expi2pi_ratio(i128 num, u128 den) {
    i128 r = num % static_cast<i128>(den);
    if (r < 0) r += static_cast<i128>(den);
    return expi2pi(static_cast<double>(r) / static_cast<double>(den));
}

// e(theta * n) for large integers n, product formed in extended precision.
inline Complex expi2pi_mul(double theta, u128 n) {
    const long double t = static_cast<long double>(theta) - std::floor(static_cast<long double>(theta));
    const long double p = frac(t * static_cast<long double>(n));
    return expi2pi(static_cast<double>(p));
}

class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::fabs(sum_) >= std::fabs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    CompensatedSum& operator+=(double v) { add(v); return *this; }
    void merge(const CompensatedSum& o) { add(o.sum_); add(o.comp_); }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class CompensatedComplexSum {
public:
    void add(Complex v) { re_.add(v.real()); im_.add(v.imag()); }
    CompensatedComplexSum& operator+=(Complex v) { add(v); return *this; }
    void merge(const CompensatedComplexSum& o) { re_.merge(o.re_); im_.merge(o.im_); }
    Complex value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

// Runs body(chunk_index) for chunk_index in [0, chunks) on up to `threads`
// workers. Chunks are claimed in a static round-robin order; the first
// exception raised by any worker is rethrown on the calling thread.
inline void parallel_chunks(std::size_t chunks, unsigned threads,
                            const std::function<void(std::size_t)>& body) {
    if (threads <= 1 || chunks <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) body(c);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, chunks));
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t c = w; c < chunks; c += workers) body(c);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// Greatest common divisor / integer helpers.
inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        const std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace sqdigits
