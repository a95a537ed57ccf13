#include <algorithm>

#include "afsolve/error.hpp"
#include "afsolve/semantics.hpp"
#include "node_counter.hpp"
#include "set_search.hpp"

namespace afsolve {

namespace {

void require_argument(const ArgumentationFramework& af, ArgumentId a) {
    if (a >= af.size()) throw FrameworkError("argument id " + std::to_string(a) + " out of range");
}

}  // namespace

bool credulous(const ArgumentationFramework& af, ArgumentId a, SemanticsKind kind, const SearchOptions& options) {
    require_argument(af, a);
    switch (kind) {
        case SemanticsKind::cf:
            return !af.self_attacking().contains(a);
        case SemanticsKind::adm:
        case SemanticsKind::prf: {
            // Every admissible set extends to a preferred one.
            detail::NodeCounter counter(options);
            detail::SetQuery query{ArgumentSet::of(af.size(), {a}), af.none(), af.all(), true};
            return detail::find_set(af, query, counter).has_value();
        }
        default: {
            const ExtensionSet exts = enumerate(af, kind, options);
            return std::any_of(exts.begin(), exts.end(), [&](const ArgumentSet& e) { return e.contains(a); });
        }
    }
}

bool skeptical(const ArgumentationFramework& af, ArgumentId a, SemanticsKind kind, const SearchOptions& options) {
    require_argument(af, a);
    // The empty set is always conflict-free and admissible.
    if (kind == SemanticsKind::cf || kind == SemanticsKind::adm) return false;
    const ExtensionSet exts = enumerate(af, kind, options);
    return std::all_of(exts.begin(), exts.end(), [&](const ArgumentSet& e) { return e.contains(a); });
}

}  // namespace afsolve
