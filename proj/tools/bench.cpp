// Wall-clock comparison of the two sweep execution modes on the three-cusp
// fixture: sequential rows seeded by continuation vs OpenMP-parallel unseeded
// rows. Also times a single certification for reference.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cuspcert/filling.hpp"
#include "cuspcert/krawczyk.hpp"
#include "cuspcert/solver.hpp"

using namespace cuspcert;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

IdealTriangulation load(const char* name) {
    std::ifstream in(std::string(DATA_DIR) + "/" + name, std::ios::binary);
    if (!in) {
        std::cerr << "missing fixture " << name << "\n";
        std::exit(1);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return IdealTriangulation::parse(buf.str());
}

int certified_count(const SweepResult& r) {
    int c = 0;
    for (const auto& row : r.rows)
        if (row.status == SweepStatus::certified_geometric) ++c;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    int qmax = argc > 1 ? std::atoi(argv[1]) : 80;
    if (qmax < 3) qmax = 3;
    auto tri = load("borromean.tri");
    std::vector<Slope> family;
    for (int q = 3; q <= qmax; ++q) family.push_back(Slope::of(1, q));

    std::cout << "sweep benchmark: " << family.size() << " fillings of one cusp, "
              << tri.size() << " tetrahedra\n";
#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "openmp: not enabled in this build\n";
#endif

    // reference: one full certification
    auto t0 = std::chrono::steady_clock::now();
    auto sys = gluing_system(tri);
    auto cert = krawczyk_certify(sys, solve(sys).assignment);
    std::cout << "single certification: " << ms_since(t0) << " ms (boxes "
              << cert.boxes.size() << ")\n";

    t0 = std::chrono::steady_clock::now();
    SweepResult serial = sweep(tri, 0, family);
    double serial_ms = ms_since(t0);

    SweepOptions par;
    par.parallel = true;
    t0 = std::chrono::steady_clock::now();
    SweepResult parallel = sweep(tri, 0, family, {}, par);
    double parallel_ms = ms_since(t0);

    std::cout << "serial seeded:      " << serial_ms << " ms, certified "
              << certified_count(serial) << "/" << family.size() << "\n";
    std::cout << "parallel unseeded:  " << parallel_ms << " ms, certified "
              << certified_count(parallel) << "/" << family.size() << "\n";
    std::cout << "speedup: " << serial_ms / parallel_ms << "x\n";

    int disagree = 0;
    for (size_t i = 0; i < serial.rows.size(); ++i) {
        const auto& a = serial.rows[i];
        const auto& b = parallel.rows[i];
        if (a.status == SweepStatus::certified_geometric &&
            b.status == SweepStatus::certified_geometric &&
            std::fabs(a.volume - b.volume) > 1e-9)
            ++disagree;
    }
    if (disagree) {
        std::cout << "volume disagreement on " << disagree << " rows\n";
        return 1;
    }
    std::cout << "certified volumes agree across modes\n";
    return 0;
}
