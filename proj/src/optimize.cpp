#include "sqdigits/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sqdigits/errors.hpp"

namespace sqdigits {

namespace {

Maximum golden_section(const std::function<double(double)>& fn, double a, double b, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = fn(c);
    double fd = fn(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = fn(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = fn(d);
        }
    }
    const double m = 0.5 * (a + b);
    const double fm = fn(m);
    Maximum best{m, fm};
    if (fc > best.value) best = {c, fc};
    if (fd > best.value) best = {d, fd};
    return best;
}

}  // namespace

Maximum grid_refine_max(const std::function<double(double)>& fn, double lo, double hi,
                        std::size_t grid_n, double tol, std::size_t candidates) {
    if (!(hi > lo) || grid_n < 2) throw PreconditionError("grid_refine_max needs hi > lo and grid_n >= 2");
    const double step = (hi - lo) / static_cast<double>(grid_n);
    std::vector<double> vals(grid_n + 1);
    for (std::size_t i = 0; i <= grid_n; ++i) vals[i] = fn(lo + step * static_cast<double>(i));

    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i <= grid_n; ++i) {
        const bool left_ok = i == 0 || vals[i] >= vals[i - 1];
        const bool right_ok = i == grid_n || vals[i] >= vals[i + 1];
        if (left_ok && right_ok) peaks.push_back(i);
    }
    std::stable_sort(peaks.begin(), peaks.end(), [&](std::size_t x, std::size_t y) { return vals[x] > vals[y]; });
    if (peaks.size() > candidates) peaks.resize(candidates);

    Maximum best{lo, vals[0]};
    for (std::size_t i = 0; i <= grid_n; ++i)
        if (vals[i] > best.value) best = {lo + step * static_cast<double>(i), vals[i]};
    for (std::size_t i : peaks) {
        const double a = std::max(lo, lo + step * (static_cast<double>(i) - 1.0));
        const double b = std::min(hi, lo + step * (static_cast<double>(i) + 1.0));
        const Maximum m = golden_section(fn, a, b, tol);
        if (m.value > best.value) best = m;
    }
    return best;
}

}  // namespace sqdigits
