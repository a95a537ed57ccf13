#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "afsolve/argument_set.hpp"

namespace afsolve {

struct Attack {
    ArgumentId from;
    ArgumentId to;
    friend auto operator<=>(const Attack&, const Attack&) = default;
};

enum class EndpointPolicy {
    strict,   // every attack endpoint must be declared
    lenient,  // undeclared endpoints are appended as new arguments
};

/// Immutable argumentation framework (A, R) with interned argument names.
///
/// Argument ids follow first appearance in the input names; attacks are kept
/// sorted by (from, to) and deduplicated. Self-attacks are allowed.
class ArgumentationFramework {
public:
    ArgumentationFramework() = default;

    /// Throws FrameworkError on a duplicate name or, under the strict policy,
    /// on an attack endpoint missing from `names`. Under the lenient policy the
    /// auto-declared names are appended (in order of first appearance among the
    /// attacks) and reported through `auto_declared` when non-null.
    static ArgumentationFramework build(std::span<const std::string> names,
                                        std::span<const std::pair<std::string, std::string>> attacks,
                                        EndpointPolicy policy = EndpointPolicy::strict,
                                        std::vector<std::string>* auto_declared = nullptr);

    /// Same, over already-interned ids.
    static ArgumentationFramework from_ids(std::vector<std::string> names, std::vector<Attack> attacks);

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }

    const std::string& name(ArgumentId id) const { return names_.at(id); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<ArgumentId> find(std::string_view name) const;

    std::span<const Attack> attacks() const noexcept { return attacks_; }
    std::span<const ArgumentId> attackers_of(ArgumentId id) const { return attackers_of_.at(id); }
    std::span<const ArgumentId> attacked_by(ArgumentId id) const { return attacked_by_.at(id); }

    const ArgumentSet& attackers_mask(ArgumentId id) const { return attackers_mask_[id]; }
    const ArgumentSet& targets_mask(ArgumentId id) const { return targets_mask_[id]; }
    const ArgumentSet& self_attacking() const noexcept { return self_attacking_; }
    bool attacks(ArgumentId from, ArgumentId to) const { return targets_mask_.at(from).contains(to); }

    ArgumentSet none() const { return ArgumentSet(size()); }
    ArgumentSet all() const { return ArgumentSet::full(size()); }

    /// Arguments attacked by some member of `s`.
    ArgumentSet successors(const ArgumentSet& s) const;
    /// Arguments attacking some member of `s`.
    ArgumentSet predecessors(const ArgumentSet& s) const;

    /// Stable content hash over names and attacks.
    std::uint64_t fingerprint() const noexcept { return fingerprint_; }

    friend bool operator==(const ArgumentationFramework& a, const ArgumentationFramework& b) {
        return a.names_ == b.names_ && a.attacks_ == b.attacks_;
    }

private:
    void index();

    std::vector<std::string> names_;
    std::unordered_map<std::string, ArgumentId> ids_;
    std::vector<Attack> attacks_;
    std::vector<std::vector<ArgumentId>> attackers_of_;
    std::vector<std::vector<ArgumentId>> attacked_by_;
    std::vector<ArgumentSet> attackers_mask_;
    std::vector<ArgumentSet> targets_mask_;
    ArgumentSet self_attacking_;
    std::uint64_t fingerprint_ = 0;
};

// Primitive predicates every semantics is assembled from.

/// No attack has both endpoints in `s`.
bool is_conflict_free(const ArgumentationFramework& af, const ArgumentSet& s);

/// Every attacker of `a` is attacked by some member of `s`.
bool defends(const ArgumentationFramework& af, const ArgumentSet& s, ArgumentId a);

/// s together with everything s attacks.
ArgumentSet range_of(const ArgumentationFramework& af, const ArgumentSet& s);

/// target is a subset of range_of(e), i.e. e covers target.
bool is_cover(const ArgumentationFramework& af, const ArgumentSet& e, const ArgumentSet& target);

/// Convenience for tests and tools: names -> set. Throws FrameworkError on unknown names.
ArgumentSet make_set(const ArgumentationFramework& af, std::initializer_list<std::string_view> names);

}  // namespace afsolve
