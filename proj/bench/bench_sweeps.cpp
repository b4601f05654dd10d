// Serial versus OpenMP timing of the grid kernels.
#include <chrono>
#include <cstdio>
#include <omp.h>
#include <random>

#include "gammainv/pickrep.hpp"
#include "gammainv/sweep.hpp"

using namespace gammainv;

template <class F>
double seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int main() {
    std::mt19937 rng(20240611);
    std::uniform_real_distribution<double> re(-20.0, 20.0), im(0.01, 20.0);
    std::vector<Complex> w(4000);
    for (Complex& x : w) x = Complex(re(rng), im(rng));
    std::printf("threads: %d\n", omp_get_max_threads());
    for (int k : {-1, 1, 4}) {
        const BranchIndex b(k);
        inverse_branch(b, Complex(0.0, 1.0));  // build the per-branch cache outside the timing
        std::vector<Complex> serial, parallel;
        const double ts = seconds([&] { serial = inverse_grid(b, w, Execution::serial); });
        const double tp = seconds([&] { parallel = inverse_grid(b, w, Execution::parallel); });
        std::printf("inverse_grid k=%2d n=%zu serial %.3fs parallel %.3fs speedup %.2f identical %s\n", k, w.size(),
                    ts, tp, ts / tp, serial == parallel ? "yes" : "no");
    }
    for (int k : {1, 3}) {
        const BranchIndex b(k);
        const std::vector<double> t = density_nodes(b, 2048, GridScheme::endpoint_refined);
        std::vector<double> serial, parallel;
        const double ts = seconds([&] { serial = density_grid(b, t, Execution::serial); });
        const double tp = seconds([&] { parallel = density_grid(b, t, Execution::parallel); });
        std::printf("density_grid k=%d n=%zu serial %.3fs parallel %.3fs speedup %.2f identical %s\n", k, t.size(), ts,
                    tp, ts / tp, serial == parallel ? "yes" : "no");
    }
}
