#include "fcs/sweeps.hpp"

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace fcs;

struct BenchResult {
    double serial_ms = 0;
    double parallel_ms = 0;
    std::size_t rows = 0;
    bool identical = false;
};

bool rows_equal(const std::vector<VerificationRow>& a,
                const std::vector<VerificationRow>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].claim != b[i].claim || a[i].params != b[i].params ||
            a[i].lhs != b[i].lhs || a[i].rhs != b[i].rhs || a[i].equal != b[i].equal)
            return false;
    return true;
}

template <typename Fn>
BenchResult bench(Fn&& sweep_fn, SweepConfig cfg) {
    using clock = std::chrono::steady_clock;
    BenchResult r;

    cfg.exec = Exec::Serial;
    const auto s0 = clock::now();
    const Sweep serial = sweep_fn(cfg);
    r.serial_ms = std::chrono::duration<double, std::milli>(clock::now() - s0).count();

    cfg.exec = Exec::Parallel;
    const auto p0 = clock::now();
    const Sweep parallel = sweep_fn(cfg);
    r.parallel_ms = std::chrono::duration<double, std::milli>(clock::now() - p0).count();

    r.rows = serial.rows.size();
    r.identical = rows_equal(serial.rows, parallel.rows);
    return r;
}

}  // namespace

int main() {
    SweepConfig cfg;
    cfg.max_level = 5;
    cfg.seed = 1;

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not compiled in; parallel mode falls back to serial\n");
#endif
    std::printf("%-12s %10s %12s %12s %8s %s\n", "kernel", "rows", "serial_ms",
                "parallel_ms", "speedup", "rows_match");

    struct Kernel {
        const char* name;
        Sweep (*fn)(const SweepConfig&);
    };
    const Kernel kernels[] = {
        {"lemma1", sweep_lemma1},     {"lemma2", sweep_lemma2},
        {"lemma3", sweep_lemma3},     {"proposition", sweep_proposition},
        {"theorem", sweep_theorem},
    };

    bool all_match = true;
    for (const Kernel& k : kernels) {
        const BenchResult r = bench(k.fn, cfg);
        all_match = all_match && r.identical;
        std::printf("%-12s %10zu %12.1f %12.1f %7.2fx %s\n", k.name, r.rows, r.serial_ms,
                    r.parallel_ms,
                    r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0,
                    r.identical ? "yes" : "NO");
    }
    if (!all_match) {
        std::printf("serial and parallel sweeps disagree\n");
        return 1;
    }
    return 0;
}
