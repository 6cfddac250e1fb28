#pragma once

#include <cstddef>
#include <functional>

namespace sqdigits {

struct Maximum {
    double argmax = 0.0;
    double value = 0.0;
};

// Deterministic global maximization of a continuous function on [lo, hi]:
// a uniform grid of grid_n + 1 points, then golden-section refinement of
// the `candidates` best grid-local maxima inside their neighbouring cells
// until the bracket is narrower than tol.
Maximum grid_refine_max(const std::function<double(double)>& fn, double lo, double hi,
                        std::size_t grid_n, double tol = 1e-10, std::size_t candidates = 16);

}  // namespace sqdigits
