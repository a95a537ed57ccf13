#pragma once

#include <cstddef>

#include "afsolve/semantics.hpp"

// Reference semantics by exhaustive subset enumeration. Only the primitive
// predicates of framework.hpp are used; nothing is shared with the search engines.
namespace afsolve::oracle {

inline constexpr std::size_t default_cap = 20;

/// Exact sigma(F) from the definitions over all 2^|A| subsets.
/// Throws OracleCapExceeded when |A| > cap.
ExtensionSet brute_force(const ArgumentationFramework& af, SemanticsKind kind, std::size_t cap = default_cap);

/// Same, with the subset scan and the maximality filter split across OpenMP threads.
ExtensionSet brute_force_parallel(const ArgumentationFramework& af, SemanticsKind kind,
                                  std::size_t cap = default_cap, int threads = 0);

/// brute_force(af, kind) == enumerate(af, kind).
bool check_equivalence(const ArgumentationFramework& af, SemanticsKind kind, std::size_t cap = default_cap,
                       const SearchOptions& options = {});

}  // namespace afsolve::oracle
