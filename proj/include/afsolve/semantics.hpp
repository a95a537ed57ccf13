#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "afsolve/argument_set.hpp"
#include "afsolve/framework.hpp"
#include "afsolve/labelling.hpp"

namespace afsolve {

enum class SemanticsKind { cf, adm, stb, prf, sem, stg };

inline constexpr std::array<SemanticsKind, 6> all_semantics = {
    SemanticsKind::cf, SemanticsKind::adm, SemanticsKind::stb,
    SemanticsKind::prf, SemanticsKind::sem, SemanticsKind::stg,
};

std::string_view to_string(SemanticsKind kind) noexcept;
std::optional<SemanticsKind> parse_semantics(std::string_view text) noexcept;

// A set of extensions of one framework, ordered by lex_less and duplicate-free.
struct ExtensionSet {
    std::vector<ArgumentSet> extensions;
    std::uint64_t fingerprint = 0;

    std::size_t size() const noexcept { return extensions.size(); }
    bool empty() const noexcept { return extensions.empty(); }
    bool contains(const ArgumentSet& s) const;
    auto begin() const noexcept { return extensions.begin(); }
    auto end() const noexcept { return extensions.end(); }

    // Sorts and deduplicates.
    void normalize();

    friend bool operator==(const ExtensionSet& a, const ExtensionSet& b) {
        return a.fingerprint == b.fingerprint && a.extensions == b.extensions;
    }
};

struct SearchOptions {
    /// Maximum number of search nodes per call; exceeding it throws BudgetExceeded.
    std::uint64_t node_budget = 100'000'000;
    /// Polled every few hundred nodes; returning true throws SearchCancelled.
    /// Must be thread-safe when used with enumerate_parallel.
    std::function<bool()> should_stop;
    /// Called with the labelling of every complete leaf the enumeration search reaches.
    /// Serial enumeration only.
    std::function<void(const Labelling&)> on_leaf;
};

/// sigma(F) for the given semantics, in lex_less order.
///
/// Depth-first labelling search in argument-index order (IN before OUT) with
/// conflict and defense propagation. Preferred candidates are confirmed with
/// is_preferred_by_witness, semi-stable and stage candidates with
/// is_range_supreme_by_cover.
ExtensionSet enumerate(const ArgumentationFramework& af, SemanticsKind kind, const SearchOptions& options = {});

/// Same result as enumerate. The search tree is cut after `split_depth` branching
/// decisions and the subtrees run as OpenMP tasks; `threads` <= 0 uses the runtime default.
ExtensionSet enumerate_parallel(const ArgumentationFramework& af, SemanticsKind kind,
                                const SearchOptions& options = {}, unsigned split_depth = 6, int threads = 0);

bool is_admissible(const ArgumentationFramework& af, const ArgumentSet& s);
bool is_stable(const ArgumentationFramework& af, const ArgumentSet& s);

/// Admissible and no admissible proper superset exists (direct superset search).
bool is_preferred_by_maximality(const ArgumentationFramework& af, const ArgumentSet& s,
                                const SearchOptions& options = {});

/// For admissible s: no admissible e with e not a subset of s and e | s conflict-free.
/// Witnesses are grown from one argument outside s. Throws PreconditionError if s is not admissible.
bool is_preferred_by_witness(const ArgumentationFramework& af, const ArgumentSet& s,
                             const SearchOptions& options = {});

/// No base-satisfying t has range(t) strictly larger than range(s). `base` is cf or adm.
/// Throws PreconditionError if s does not satisfy `base`.
bool is_range_supreme_by_superset(const ArgumentationFramework& af, const ArgumentSet& s, SemanticsKind base,
                                  const SearchOptions& options = {});

/// Same question answered through covers: s is stable, or for every a outside range(s)
/// no base-satisfying cover of range(s) | {a} exists.
bool is_range_supreme_by_cover(const ArgumentationFramework& af, const ArgumentSet& s, SemanticsKind base,
                               const SearchOptions& options = {});

/// Some conflict-free (resp. admissible) e covers `target`.
bool exists_cover_with_property(const ArgumentationFramework& af, const ArgumentSet& target, SemanticsKind base,
                                const SearchOptions& options = {});

bool credulous(const ArgumentationFramework& af, ArgumentId a, SemanticsKind kind, const SearchOptions& options = {});
bool skeptical(const ArgumentationFramework& af, ArgumentId a, SemanticsKind kind, const SearchOptions& options = {});

/// Verifier: s is an extension under `kind`, decided without enumerating.
bool satisfies(const ArgumentationFramework& af, const ArgumentSet& s, SemanticsKind kind,
               const SearchOptions& options = {});

}  // namespace afsolve
