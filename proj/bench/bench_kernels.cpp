// Compares the parallel kernels against their serial reference
// implementations: point counting by x-scan and the supersingular j-scan.
#include <chrono>
#include <cstdio>

#include "ordcert/supersingular.hpp"

using namespace ordcert;
using clk = std::chrono::steady_clock;

static double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

int main() {
    {
        FieldPtr F = ExtensionField::create(3, 10);  // 59049 elements
        WeierstrassCurve E = WeierstrassCurve::short_form(F, 1, 1, 2);
        auto t0 = clk::now();
        std::uint64_t n_par = point_count(E);
        double par = ms_since(t0);
        t0 = clk::now();
        std::uint64_t n_ser = point_count_serial(E);
        double ser = ms_since(t0);
        std::printf("point_count over F_3^10: parallel %.1f ms, serial %.1f ms (%s)\n", par, ser,
                    n_par == n_ser ? "agree" : "MISMATCH");
    }
    for (std::uint32_t p : {23u, 31u, 47u}) {
        auto t0 = clk::now();
        SupersingularSet s_par = supersingular_set(p);
        double par = ms_since(t0);
        t0 = clk::now();
        SupersingularSet s_ser = supersingular_set_serial(p);
        double ser = ms_since(t0);
        std::printf("supersingular_set(%u): parallel %.1f ms, serial %.1f ms (%s)\n", p, par, ser,
                    s_par.ss_poly == s_ser.ss_poly ? "agree" : "MISMATCH");
    }
    return 0;
}
