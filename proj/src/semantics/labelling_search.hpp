#pragma once

#include <mutex>
#include <shared_mutex>
#include <vector>

#include "afsolve/semantics.hpp"
#include "node_counter.hpp"

namespace afsolve::detail {

// Partial labelling. Members of `in` are IN; `out` holds arguments labelled OUT by a
// branching decision or by propagation. Arguments attacked by or attacking `in`
// are OUT implicitly; whatever remains undecided and compatible is a candidate.
struct SearchNode {
    ArgumentSet in;
    ArgumentSet out;
    ArgumentSet range;    // in | successors(in)
    ArgumentSet threats;  // predecessors(in)
};

// Collects leaves in discovery order and decides which subtrees cannot
// contribute anything new.
class SharedFilter;

class CandidateFilter {
public:
    CandidateFilter(const ArgumentationFramework& af, SemanticsKind kind, SharedFilter* shared = nullptr)
        : af_(af), kind_(kind), shared_(shared) {}

    // Leaf in discovery order.
    void offer(const ArgumentSet& s);
    // True if no leaf below a node with these bounds can be kept.
    bool prunes(const ArgumentSet& possible_members, const ArgumentSet& possible_range) const;
    // Kept candidates (discovery order for cf/adm/stb/prf, frontier order for sem/stg).
    std::vector<ArgumentSet> candidates() const;

private:
    struct Ranged {
        ArgumentSet set;
        ArgumentSet range;
    };
    void offer_ranged(const ArgumentSet& s);

    const ArgumentationFramework& af_;
    SemanticsKind kind_;
    SharedFilter* shared_;
    std::vector<ArgumentSet> kept_;   // cf/adm/stb leaves, or subset-maximal leaves for prf/sem
    std::vector<Ranged> frontier_;    // range-maximal so far (sem/stg)
};

// Leaves from concurrently searched subtrees. Offer order is arbitrary, so it is
// only consulted for pruning, never for the final candidate list.
class SharedFilter {
public:
    SharedFilter(const ArgumentationFramework& af, SemanticsKind kind) : filter_(af, kind) {}

    void offer(const ArgumentSet& s) {
        std::unique_lock lock(mutex_);
        filter_.offer(s);
    }
    bool prunes(const ArgumentSet& possible_members, const ArgumentSet& possible_range) const {
        std::shared_lock lock(mutex_);
        return filter_.prunes(possible_members, possible_range);
    }

private:
    mutable std::shared_mutex mutex_;
    CandidateFilter filter_;
};

class LabellingSearch {
public:
    LabellingSearch(const ArgumentationFramework& af, SemanticsKind kind, NodeCounter& counter,
                    const SearchOptions& options);

    SearchNode root() const;

    // Depth-first search below `node`, feeding leaves to `filter`.
    void run(SearchNode node, CandidateFilter& filter);

    // Subproblems left after `depth` branching decisions, in DFS order.
    void split(SearchNode node, unsigned depth, std::vector<SearchNode>& out);

private:
    enum class Mode { conflict_free, admissible, stable };

    ArgumentSet candidates(const SearchNode& node) const;
    void add_in(SearchNode& node, ArgumentId id) const;
    // Unit propagation to fixpoint. False on a dead end; `cand` receives the final candidates.
    bool propagate(SearchNode& node, ArgumentSet& cand) const;
    bool propagate_defense(SearchNode& node, const ArgumentSet& cand, bool& changed) const;
    bool propagate_coverage(SearchNode& node, const ArgumentSet& cand, bool& changed) const;
    void leaf(const SearchNode& node, CandidateFilter& filter) const;

    const ArgumentationFramework& af_;
    SemanticsKind kind_;
    Mode mode_;
    NodeCounter& counter_;
    const SearchOptions& options_;
    ArgumentSet all_;
};

// Final filtering of merged candidates: drops dominated ones and keeps those the
// witness (prf) or cover (sem, stg) check confirms. Result is normalized.
ExtensionSet finish(const ArgumentationFramework& af, SemanticsKind kind, std::vector<ArgumentSet> candidates,
                    const SearchOptions& options);

}  // namespace afsolve::detail
