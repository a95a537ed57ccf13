#pragma once

#include <string>
#include <vector>

#include "afsolve/bench.hpp"
#include "afsolve/io.hpp"

namespace fixtures {

inline const char* six_args_apx =
    "arg(a). arg(b). arg(c). arg(d). arg(e). arg(f).\n"
    "att(a,b). att(b,d). att(c,b). att(c,d). att(c,e). att(d,c). att(d,e). att(e,f).\n";

inline const char* three_cycle_apx = "arg(a). arg(b). arg(c).\natt(a,b). att(b,c). att(c,a).\n";

inline afsolve::ArgumentationFramework six_args() { return afsolve::io::parse_apx(six_args_apx).framework; }
inline afsolve::ArgumentationFramework three_cycle() { return afsolve::io::parse_apx(three_cycle_apx).framework; }

inline afsolve::ArgumentationFramework apx(const std::string& text) { return afsolve::io::parse_apx(text).framework; }

inline std::vector<afsolve::ArgumentSet> sets(const afsolve::ArgumentationFramework& af,
                                              std::initializer_list<std::initializer_list<std::string_view>> lists) {
    std::vector<afsolve::ArgumentSet> out;
    for (const auto& l : lists) out.push_back(afsolve::make_set(af, l));
    return out;
}

inline afsolve::ExtensionSet extension_set(const afsolve::ArgumentationFramework& af,
                                           std::initializer_list<std::initializer_list<std::string_view>> lists) {
    afsolve::ExtensionSet e;
    e.extensions = sets(af, lists);
    e.fingerprint = af.fingerprint();
    e.normalize();
    return e;
}

// Mixed corpus of small frameworks: ER at three densities, chains, ladders.
inline std::vector<afsolve::bench::GeneratorSpec> corpus(std::size_t count, std::size_t max_n, std::uint64_t seed) {
    using namespace afsolve::bench;
    std::vector<GeneratorSpec> out;
    const double ps[] = {0.1, 0.2, 0.4};
    for (std::size_t i = 0; out.size() < count; ++i) {
        const std::uint64_t s = seed + i;
        const std::size_t n = 1 + (s * 7919) % max_n;
        switch (i % 5) {
            case 0:
            case 1:
            case 2: out.push_back({ErdosRenyi{n, ps[i % 3]}, s}); break;
            case 3: out.push_back({Chain{n}, s}); break;
            default: {
                const std::size_t size = 1 + s % 4;
                const std::size_t blocks = std::max<std::size_t>(1, max_n / size - (s % 2));
                out.push_back({SccLadder{blocks, size, 0.3, 0.15}, s});
            }
        }
    }
    return out;
}

}  // namespace fixtures
