// Compares the serial oracle kernels against their OpenMP counterparts on
// seeded random graphs and checks that both produce identical results.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "stpgc/topology.hpp"

using namespace stpgc;

namespace {

GraphView random_graph(int n, long long m, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    while (static_cast<long long>(edges.size()) < m) {
        int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        if (a != b) edges.emplace_back(a, b);
    }
    return view_from_edges(n, edges);
}

template <typename F>
double time_of(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    std::printf("%-28s %8s %10s %10s %8s\n", "kernel", "n", "serial_s", "omp_s", "match");
    for (int n : {500, 1000, 2000}) {
        GraphView g = random_graph(n, 8LL * n, 42);

        DominatedScan serial_scan, omp_scan;
        double ts = time_of([&] { serial_scan = brute_force_dominated_scan(g); });
        double tp = time_of([&] { omp_scan = brute_force_dominated_scan_parallel(g); });
        bool ok = serial_scan.nodes == omp_scan.nodes && serial_scan.edges == omp_scan.edges;
        std::printf("%-28s %8d %10.4f %10.4f %8s\n", "dominated_scan", n, ts, tp,
                    ok ? "yes" : "NO");

        std::vector<std::vector<int>> ds, dp;
        ts = time_of([&] { ds = all_pairs_distances(g); });
        tp = time_of([&] { dp = all_pairs_distances_parallel(g); });
        std::printf("%-28s %8d %10.4f %10.4f %8s\n", "all_pairs_distances", n, ts, tp,
                    ds == dp ? "yes" : "NO");
    }
    return 0;
}
