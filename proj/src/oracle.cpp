#include "afsolve/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include <omp.h>

#include "afsolve/error.hpp"

namespace afsolve::oracle {

namespace {

constexpr std::size_t hard_cap = 30;

struct Subset {
    ArgumentSet set;
    ArgumentSet range;
};

bool admissible_by_definition(const ArgumentationFramework& af, const ArgumentSet& s) {
    bool ok = true;
    s.for_each([&](ArgumentId a) {
        if (ok && !defends(af, s, a)) ok = false;
    });
    return ok;
}

void check_cap(const ArgumentationFramework& af, std::size_t cap) {
    if (af.size() > cap || af.size() > hard_cap)
        throw OracleCapExceeded("oracle limited to " + std::to_string(std::min(cap, hard_cap)) + " arguments, got " +
                                std::to_string(af.size()));
}

ExtensionSet run(const ArgumentationFramework& af, SemanticsKind kind, std::size_t cap, bool parallel, int threads) {
    check_cap(af, cap);
    const std::size_t n = af.size();
    const std::uint64_t total = std::uint64_t{1} << n;
    const bool need_adm = kind == SemanticsKind::adm || kind == SemanticsKind::prf || kind == SemanticsKind::sem;
    if (threads <= 0) threads = omp_get_max_threads();

    // Conflict-free (or admissible) subsets, with their ranges.
    std::vector<std::vector<Subset>> per_thread(static_cast<std::size_t>(parallel ? threads : 1));
#pragma omp parallel num_threads(threads) if (parallel)
    {
        auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (std::int64_t m = 0; m < static_cast<std::int64_t>(total); ++m) {
            ArgumentSet s = ArgumentSet::from_mask(n, static_cast<std::uint64_t>(m));
            if (!is_conflict_free(af, s)) continue;
            if (need_adm && !admissible_by_definition(af, s)) continue;
            ArgumentSet r = range_of(af, s);
            local.push_back({std::move(s), std::move(r)});
        }
    }
    std::vector<Subset> base;
    for (auto& v : per_thread)
        for (auto& s : v) base.push_back(std::move(s));

    const ArgumentSet all = af.all();
    std::vector<char> keep(base.size(), 0);
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads) if (parallel)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(base.size()); ++i) {
        const Subset& s = base[static_cast<std::size_t>(i)];
        bool ok = true;
        switch (kind) {
            case SemanticsKind::cf:
            case SemanticsKind::adm:
                break;
            case SemanticsKind::stb:
                ok = s.range == all;
                break;
            case SemanticsKind::prf:
                for (const auto& t : base)
                    if (s.set.is_proper_subset_of(t.set)) { ok = false; break; }
                break;
            case SemanticsKind::sem:
            case SemanticsKind::stg:
                for (const auto& t : base)
                    if (s.range.is_proper_subset_of(t.range)) { ok = false; break; }
                break;
        }
        keep[static_cast<std::size_t>(i)] = ok ? 1 : 0;
    }

    ExtensionSet out;
    out.fingerprint = af.fingerprint();
    for (std::size_t i = 0; i < base.size(); ++i)
        if (keep[i]) out.extensions.push_back(std::move(base[i].set));
    out.normalize();
    return out;
}

}  // namespace

ExtensionSet brute_force(const ArgumentationFramework& af, SemanticsKind kind, std::size_t cap) {
    return run(af, kind, cap, false, 1);
}

ExtensionSet brute_force_parallel(const ArgumentationFramework& af, SemanticsKind kind, std::size_t cap,
                                  int threads) {
    return run(af, kind, cap, true, threads);
}

bool check_equivalence(const ArgumentationFramework& af, SemanticsKind kind, std::size_t cap,
                       const SearchOptions& options) {
    return brute_force(af, kind, cap) == enumerate(af, kind, options);
}

}  // namespace afsolve::oracle
