// Serial vs OpenMP timings for the enumeration search and the brute-force oracle.
#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "afsolve/bench.hpp"
#include "afsolve/oracle.hpp"
#include "afsolve/semantics.hpp"

using namespace afsolve;

namespace {

template <class F>
double time_ms(F&& f, std::size_t& out_count) {
    const auto start = std::chrono::steady_clock::now();
    out_count = f().size();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compare serial and parallel kernels", "bench_kernels"};
    std::string gen = "er:n=60,p=0.08,seed=1";
    std::string oracle_gen = "er:n=18,p=0.15,seed=1";
    int threads = 0;
    unsigned depth = 6;
    app.add_option("--gen", gen, "Instance for the search kernels")->capture_default_str();
    app.add_option("--oracle-gen", oracle_gen, "Instance for the oracle kernels")->capture_default_str();
    app.add_option("--threads", threads, "OpenMP threads (0: runtime default)");
    app.add_option("--depth", depth, "Split depth of the parallel search")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    const auto af = bench::generate(bench::parse_generator_spec(gen));
    const auto small = bench::generate(bench::parse_generator_spec(oracle_gen));
    std::printf("threads=%d\n", threads > 0 ? threads : omp_get_max_threads());
    std::printf("kernel,kind,serial_ms,parallel_ms,speedup,extensions,agree\n");

    for (const auto kind : all_semantics) {
        if (kind == SemanticsKind::cf || kind == SemanticsKind::adm) continue;  // exponential output
        std::size_t n1 = 0, n2 = 0;
        ExtensionSet a, b;
        const double ts = time_ms([&]() -> const ExtensionSet& { return a = enumerate(af, kind); }, n1);
        const double tp = time_ms([&]() -> const ExtensionSet& { return b = enumerate_parallel(af, kind, {}, depth, threads); }, n2);
        std::printf("search,%s,%.3f,%.3f,%.2f,%zu,%s\n", std::string(to_string(kind)).c_str(), ts, tp, ts / tp, n1,
                    a == b ? "yes" : "no");
    }
    for (const auto kind : all_semantics) {
        std::size_t n1 = 0, n2 = 0;
        ExtensionSet a, b;
        const double ts = time_ms([&]() -> const ExtensionSet& { return a = oracle::brute_force(small, kind); }, n1);
        const double tp =
            time_ms([&]() -> const ExtensionSet& { return b = oracle::brute_force_parallel(small, kind, oracle::default_cap, threads); }, n2);
        std::printf("oracle,%s,%.3f,%.3f,%.2f,%zu,%s\n", std::string(to_string(kind)).c_str(), ts, tp, ts / tp, n1,
                    a == b ? "yes" : "no");
    }
    return 0;
}
