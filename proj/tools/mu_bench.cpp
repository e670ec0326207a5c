// Compares the parallel and serial mu evaluations on random triangulations
// and checks they agree. Usage: mu-bench [extra-vertices] [rounds]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "corpus.hpp"
#include "pw/nesting.hpp"
#include "pw/walk_algebra.hpp"

using namespace pw;
using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
    int extra = argc > 1 ? std::atoi(argv[1]) : 8;
    int rounds = argc > 2 ? std::atoi(argv[2]) : 5;

    double total_par = 0, total_ser = 0;
    long checked = 0;
    for (int r = 0; r < rounds; ++r) {
        PlanarMap m = corpus::random_triangulation(extra, 1000 + r);
        std::vector<WalkClass> e = candidate_indecomposables(m.graph(), 3);
        std::vector<WalkClass> f = candidate_indecomposables(m.graph(), 4);
        if (f.empty()) f = e;

        for (const WalkClass& c : f) {
            ClosedWalk w = c.representative();
            auto t0 = Clock::now();
            long a = mu(m, e, w);
            total_par += ms_since(t0);
            t0 = Clock::now();
            long b = mu_serial(m, e, w);
            total_ser += ms_since(t0);
            if (a != b) {
                std::cerr << "MISMATCH: mu=" << a << " mu_serial=" << b << " (seed " << 1000 + r
                          << ")\n";
                return 1;
            }
            ++checked;
        }
    }
    std::cout << "checked " << checked << " cycles, |E|-pool per round ~ triangles\n";
    std::cout << "parallel " << total_par << " ms, serial " << total_ser << " ms\n";
    return 0;
}
