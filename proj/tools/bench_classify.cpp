// Benchmark: serial reference vs OpenMP range classification on the D10
// quintic, plus serial vs parallel table build.
#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "frobres/frob.hpp"

using namespace frobres;
using clock_type = std::chrono::steady_clock;

static double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

int main(int argc, char** argv) {
    long hi = argc > 1 ? std::atol(argv[1]) : 20000;

    IntPoly f({1, 0, 0, -3, 2, 1});
    PermGroup g = closure(5, parse_generators("(1,2,4,5,3);(2,3)(4,5)", 5));
    auto classes = conjugacy_classes(g);

    BuildOptions serial_opts;
    serial_opts.parallel = false;

    auto t0 = clock_type::now();
    RootSystem rs1 = certified_roots(f);
    GammaTable table = build_gamma(f, g, classes, IntPoly::monomial(1, 1), rs1, serial_opts);
    validate(table);
    double build_serial = seconds_since(t0);

    t0 = clock_type::now();
    RootSystem rs2 = certified_roots(f);
    GammaTable table_par = build_gamma(f, g, classes, IntPoly::monomial(1, 1), rs2);
    validate(table_par);
    double build_parallel = seconds_since(t0);

    if (table_to_json(table) != table_to_json(table_par)) {
        std::cerr << "parallel build does not match the serial build\n";
        return 1;
    }

    t0 = clock_type::now();
    auto serial = classify_range_serial(table, 2, hi);
    double classify_serial = seconds_since(t0);

    t0 = clock_type::now();
    auto parallel = classify_range(table, 2, hi);
    double classify_parallel = seconds_since(t0);

    for (size_t i = 0; i < serial.size(); ++i) {
        if (report_to_json_line(serial[i]) != report_to_json_line(parallel[i])) {
            std::cerr << "parallel classification diverges at index " << i << "\n";
            return 1;
        }
    }

#ifdef _OPENMP
    std::cout << "threads:            " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads:            1 (no OpenMP)\n";
#endif
    std::cout << "primes classified:  " << serial.size() << " (p < " << hi << ")\n"
              << "build serial:       " << build_serial << " s\n"
              << "build parallel:     " << build_parallel << " s\n"
              << "classify serial:    " << classify_serial << " s\n"
              << "classify parallel:  " << classify_parallel << " s\n"
              << "classify speedup:   " << classify_serial / classify_parallel << "x\n";
    return 0;
}
