#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "twistrel/characters.hpp"
#include "twistrel/echelon.hpp"
#include "twistrel/qseries.hpp"

using namespace twistrel;

namespace {

double time_of(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %10.3fs %10.3fs %8.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) omp_set_num_threads(std::atoi(argv[1]));
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        auto f = chi5(1200);
        auto g = heisenberg_series(1200);
        TruncatedSeries a, b;
        double ts = time_of([&] { a = mul_serial(f, g); });
        double tp = time_of([&] { b = mul(f, g); });
        if (!(a == b)) std::fprintf(stderr, "mul mismatch!\n");
        row("series mul (order 1200)", ts, tp);
    }
    {
        auto cs = builtin_condition_set("a22-level5");
        TruncatedSeries a, b;
        double ts = time_of([&] { a = count_series_serial(cs, 44); });
        double tp = time_of([&] { b = count_series(cs, 44); });
        if (!(a == b)) std::fprintf(stderr, "count mismatch!\n");
        row("count_series a22 (N=44)", ts, tp);
    }
    {
        const int degree = 26, length = 4, maxPart = degree - 2 * (length - 1);
        auto descs = enumerate_descriptors(degree, length, maxPart);
        RelationMatrix a, b;
        double ts = time_of([&] { a = build_matrix(degree, length, maxPart, descs, 64, false); });
        double tp = time_of([&] { b = build_matrix(degree, length, maxPart, descs, 64, true); });
        bool same = a.rows.size() == b.rows.size();
        for (size_t i = 0; same && i < a.rows.size(); ++i) same = a.rows[i].coeffs == b.rows[i].coeffs;
        if (!same) std::fprintf(stderr, "matrix mismatch!\n");
        row("build_matrix (deg 26 len 4)", ts, tp);
    }
    return 0;
}
