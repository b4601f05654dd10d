#pragma once

// Grid evaluation of the pure per-point operations. The parallel path splits
// the grid across OpenMP threads; the serial path is the reference and the
// two produce identical results.

#include <span>
#include <vector>

#include "gammainv/branches.hpp"

namespace gammainv {

enum class Execution { serial, parallel };

/// g_k(w) for every w (Im w > 0).
std::vector<Complex> inverse_grid(BranchIndex k, std::span<const Complex> w, Execution exec = Execution::parallel);

/// d_k(t) for every t in the interior of I_k without 0.
std::vector<double> density_grid(BranchIndex k, std::span<const double> t, Execution exec = Execution::parallel);

}  // namespace gammainv
