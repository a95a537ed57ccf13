#include <exception>

#include <omp.h>

#include "afsolve/semantics.hpp"
#include "labelling_search.hpp"

namespace afsolve {

ExtensionSet enumerate_parallel(const ArgumentationFramework& af, SemanticsKind kind, const SearchOptions& options,
                                unsigned split_depth, int threads) {
    SearchOptions local = options;
    local.on_leaf = nullptr;
    if (threads <= 0) threads = omp_get_max_threads();

    detail::NodeCounter counter(local);
    detail::LabellingSearch search(af, kind, counter, local);
    std::vector<detail::SearchNode> parts;
    search.split(search.root(), split_depth, parts);

    const bool maximal = kind == SemanticsKind::prf || kind == SemanticsKind::sem || kind == SemanticsKind::stg;
    detail::SharedFilter shared(af, kind);
    std::vector<std::vector<ArgumentSet>> found(parts.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < parts.size(); ++i) {
        try {
            detail::CandidateFilter filter(af, kind, maximal ? &shared : nullptr);
            search.run(parts[i], filter);
            found[i] = filter.candidates();
        } catch (...) {
#pragma omp critical(afsolve_enumerate_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);

    // Subtrees are in DFS order, so concatenation preserves the serial discovery order.
    std::vector<ArgumentSet> merged;
    for (auto& part : found)
        for (auto& s : part) merged.push_back(std::move(s));

    if (!maximal) return detail::finish(af, kind, std::move(merged), local);

    detail::CandidateFilter filter(af, kind);
    for (const auto& c : merged) filter.offer(c);
    std::vector<ArgumentSet> candidates = filter.candidates();

    std::vector<char> keep(candidates.size(), 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        try {
            keep[i] = satisfies(af, candidates[i], kind, local) ? 1 : 0;
        } catch (...) {
#pragma omp critical(afsolve_enumerate_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);

    ExtensionSet result;
    result.fingerprint = af.fingerprint();
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (keep[i]) result.extensions.push_back(std::move(candidates[i]));
    result.normalize();
    return result;
}

}  // namespace afsolve
