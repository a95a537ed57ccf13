#include <algorithm>

#include "afsolve/error.hpp"
#include "afsolve/semantics.hpp"
#include "node_counter.hpp"
#include "set_search.hpp"

namespace afsolve {

std::string_view to_string(SemanticsKind kind) noexcept {
    switch (kind) {
        case SemanticsKind::cf: return "cf";
        case SemanticsKind::adm: return "adm";
        case SemanticsKind::stb: return "stb";
        case SemanticsKind::prf: return "prf";
        case SemanticsKind::sem: return "sem";
        case SemanticsKind::stg: return "stg";
    }
    return "?";
}

std::optional<SemanticsKind> parse_semantics(std::string_view text) noexcept {
    for (auto k : all_semantics)
        if (to_string(k) == text) return k;
    return std::nullopt;
}

bool ExtensionSet::contains(const ArgumentSet& s) const {
    return std::binary_search(extensions.begin(), extensions.end(), s, LexLess{});
}

void ExtensionSet::normalize() {
    std::sort(extensions.begin(), extensions.end(), LexLess{});
    extensions.erase(std::unique(extensions.begin(), extensions.end()), extensions.end());
}

bool is_admissible(const ArgumentationFramework& af, const ArgumentSet& s) {
    if (!is_conflict_free(af, s)) return false;
    bool ok = true;
    s.for_each([&](ArgumentId a) {
        if (ok && !defends(af, s, a)) ok = false;
    });
    return ok;
}

bool is_stable(const ArgumentationFramework& af, const ArgumentSet& s) {
    return is_conflict_free(af, s) && range_of(af, s) == af.all();
}

namespace {

void require_base(SemanticsKind base) {
    if (base != SemanticsKind::cf && base != SemanticsKind::adm)
        throw PreconditionError("base semantics must be cf or adm");
}

bool satisfies_base(const ArgumentationFramework& af, const ArgumentSet& s, SemanticsKind base) {
    return base == SemanticsKind::adm ? is_admissible(af, s) : is_conflict_free(af, s);
}

void require_satisfies_base(const ArgumentationFramework& af, const ArgumentSet& s, SemanticsKind base) {
    require_base(base);
    if (!satisfies_base(af, s, base))
        throw PreconditionError(base == SemanticsKind::adm ? "set is not admissible" : "set is not conflict-free");
}

// Include/exclude over `free` in index order, keeping chosen | fixed conflict-free.
// `leaf` sees each conflict-free completion; `viable` may cut a partial assignment.
template <class Viable, class Leaf>
bool search_extensions(const ArgumentationFramework& af, const ArgumentSet& fixed, const ArgumentSet& free,
                       detail::NodeCounter& counter, Viable&& viable, Leaf&& leaf) {
    struct Frame {
        ArgumentSet chosen;
        ArgumentSet open;  // still undecided and compatible with `chosen`
    };
    auto rec = [&](auto&& self, Frame f) -> bool {
        counter.tick();
        if (!viable(f.chosen, f.open)) return false;
        const std::size_t x = f.open.first();
        if (x == ArgumentSet::npos) return leaf(f.chosen);
        const auto id = static_cast<ArgumentId>(x);
        f.open.erase(id);
        Frame with{f.chosen, f.open - af.targets_mask(id) - af.attackers_mask(id)};
        with.chosen.insert(id);
        if (self(self, std::move(with))) return true;
        return self(self, std::move(f));
    };
    const ArgumentSet open = free - fixed - af.self_attacking() - af.successors(fixed) - af.predecessors(fixed);
    return rec(rec, Frame{fixed, open});
}

}  // namespace

bool is_preferred_by_maximality(const ArgumentationFramework& af, const ArgumentSet& s, const SearchOptions& options) {
    if (!is_admissible(af, s)) return false;
    detail::NodeCounter counter(options);
    const bool larger_exists = search_extensions(
        af, s, af.all(), counter, [](const ArgumentSet&, const ArgumentSet&) { return true; },
        [&](const ArgumentSet& t) { return t != s && is_admissible(af, t); });
    return !larger_exists;
}

bool is_preferred_by_witness(const ArgumentationFramework& af, const ArgumentSet& s, const SearchOptions& options) {
    if (!is_admissible(af, s)) throw PreconditionError("set is not admissible");
    detail::NodeCounter counter(options);
    // A witness e must satisfy e | s conflict-free, so it only uses s and arguments
    // not in conflict with s.
    detail::SetQuery query{af.none(), af.none(),
                           af.all() - af.self_attacking() - af.successors(s) - af.predecessors(s), true};
    const ArgumentSet outside = query.pool - s;
    for (std::size_t x = outside.first(); x != ArgumentSet::npos; x = outside.next(x + 1)) {
        const auto id = static_cast<ArgumentId>(x);
        query.must_include = af.none();
        query.must_include.insert(id);
        if (detail::find_set(af, query, counter)) return false;
        // No admissible set compatible with s contains x, so no later witness does either.
        query.pool.erase(id);
    }
    return true;
}

bool is_range_supreme_by_superset(const ArgumentationFramework& af, const ArgumentSet& s, SemanticsKind base,
                                  const SearchOptions& options) {
    require_satisfies_base(af, s, base);
    detail::NodeCounter counter(options);
    const ArgumentSet range = range_of(af, s);
    const bool larger_exists = search_extensions(
        af, af.none(), af.all(), counter,
        [&](const ArgumentSet& chosen, const ArgumentSet& open) {
            const ArgumentSet reachable = range_of(af, chosen) | range_of(af, open);
            return range.is_proper_subset_of(reachable);
        },
        [&](const ArgumentSet& t) {
            return range.is_proper_subset_of(range_of(af, t)) && satisfies_base(af, t, base);
        });
    return !larger_exists;
}

bool exists_cover_with_property(const ArgumentationFramework& af, const ArgumentSet& target, SemanticsKind base,
                                const SearchOptions& options) {
    require_base(base);
    detail::NodeCounter counter(options);
    const detail::SetQuery query{af.none(), target, af.all(), base == SemanticsKind::adm};
    return detail::find_set(af, query, counter).has_value();
}

bool is_range_supreme_by_cover(const ArgumentationFramework& af, const ArgumentSet& s, SemanticsKind base,
                               const SearchOptions& options) {
    require_satisfies_base(af, s, base);
    const ArgumentSet range = range_of(af, s);
    if (range == af.all()) return true;
    detail::NodeCounter counter(options);
    detail::SetQuery query{af.none(), range, af.all(), base == SemanticsKind::adm};
    const ArgumentSet outside = af.all() - range;
    for (std::size_t a = outside.first(); a != ArgumentSet::npos; a = outside.next(a + 1)) {
        query.target.insert(static_cast<ArgumentId>(a));
        if (detail::find_set(af, query, counter)) return false;
        query.target.erase(static_cast<ArgumentId>(a));
    }
    return true;
}

bool satisfies(const ArgumentationFramework& af, const ArgumentSet& s, SemanticsKind kind,
               const SearchOptions& options) {
    switch (kind) {
        case SemanticsKind::cf: return is_conflict_free(af, s);
        case SemanticsKind::adm: return is_admissible(af, s);
        case SemanticsKind::stb: return is_stable(af, s);
        case SemanticsKind::prf: return is_admissible(af, s) && is_preferred_by_witness(af, s, options);
        case SemanticsKind::sem:
            return is_admissible(af, s) && is_range_supreme_by_cover(af, s, SemanticsKind::adm, options);
        case SemanticsKind::stg:
            return is_conflict_free(af, s) && is_range_supreme_by_cover(af, s, SemanticsKind::cf, options);
    }
    return false;
}

}  // namespace afsolve
