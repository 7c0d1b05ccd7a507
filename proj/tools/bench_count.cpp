// Benchmark: OpenMP counting kernel against the serial reference on a cubic
// surface cone over growing extension fields.  Both paths must agree exactly.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include <omp.h>

#include "ffzeta/json_io.hpp"

using namespace ffz;

namespace {

template <typename F>
double timed(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

PolySystem fermat_cubic_surface() {
    // x0^3 + x1^3 + x2^3 + x3^3 over F_2
    FieldDesc f2 = make_field(2, 1);
    std::vector<Monomial> monos;
    for (int v = 0; v < 4; ++v) {
        std::vector<int> e(4, 0);
        e[v] = 3;
        monos.push_back({f2.one(), e});
    }
    return make_system(f2, 4, {make_polynomial(f2, 4, monos)}, true);
}

} // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    PolySystem sys = fermat_cubic_surface();
    CountOptions opts;
    opts.budget = u64(1) << 40;

    std::printf("%-6s %-12s %-10s %-10s %-8s\n", "s", "points", "serial[s]", "openmp[s]",
                "speedup");
    int max_s = quick ? 4 : 6;
    for (int s = 3; s <= max_s; ++s) {
        u64 count_par = 0, count_ser = 0;
        double t_ser = timed([&] { count_ser = count_affine_serial(sys, s, opts); });
        double t_par = timed([&] { count_par = count_affine(sys, s, opts); });
        if (count_par != count_ser) {
            std::printf("MISMATCH at s=%d: serial %llu vs openmp %llu\n", s,
                        static_cast<unsigned long long>(count_ser),
                        static_cast<unsigned long long>(count_par));
            return 1;
        }
        double points = std::pow(2.0, 4.0 * s);
        std::printf("%-6d %-12.0f %-10.3f %-10.3f %-8.2f\n", s, points, t_ser, t_par,
                    t_ser / t_par);
    }
    std::printf("threads: %d, counts agree on every size\n", omp_get_max_threads());
    return 0;
}
