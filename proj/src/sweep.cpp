#include "gammainv/sweep.hpp"

#include <exception>

#include "gammainv/pickrep.hpp"

namespace gammainv {

namespace {

// Runs body(i) for i in [0, n). The first exception thrown by any iteration
// is rethrown after the loop.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
    if (exec == Execution::serial) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < static_cast<long>(n); ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(gammainv_sweep_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<Complex> inverse_grid(BranchIndex k, std::span<const Complex> w, Execution exec) {
    std::vector<Complex> out(w.size());
    for_each_index(w.size(), exec, [&](std::size_t i) { out[i] = inverse_branch(k, w[i]); });
    return out;
}

std::vector<double> density_grid(BranchIndex k, std::span<const double> t, Execution exec) {
    std::vector<double> out(t.size());
    for_each_index(t.size(), exec, [&](std::size_t i) { out[i] = density(k, t[i]); });
    return out;
}

}  // namespace gammainv
