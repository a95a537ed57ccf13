#include "afsolve/semantics.hpp"
#include "labelling_search.hpp"

namespace afsolve {

namespace detail {

ExtensionSet finish(const ArgumentationFramework& af, SemanticsKind kind, std::vector<ArgumentSet> candidates,
                    const SearchOptions& options) {
    ExtensionSet result;
    result.fingerprint = af.fingerprint();

    if (kind == SemanticsKind::prf || kind == SemanticsKind::sem || kind == SemanticsKind::stg) {
        // Candidates may come from independently searched subtrees; re-filter in order.
        CandidateFilter filter(af, kind);
        for (const auto& c : candidates) filter.offer(c);
        candidates = filter.candidates();
        std::erase_if(candidates, [&](const ArgumentSet& s) { return !satisfies(af, s, kind, options); });
    }
    result.extensions = std::move(candidates);
    result.normalize();
    return result;
}

}  // namespace detail

ExtensionSet enumerate(const ArgumentationFramework& af, SemanticsKind kind, const SearchOptions& options) {
    detail::NodeCounter counter(options);
    detail::LabellingSearch search(af, kind, counter, options);
    detail::CandidateFilter filter(af, kind);
    search.run(search.root(), filter);
    return detail::finish(af, kind, filter.candidates(), options);
}

}  // namespace afsolve
