#include "labelling_search.hpp"

#include <algorithm>

namespace afsolve::detail {

void CandidateFilter::offer(const ArgumentSet& s) {
    if (shared_) shared_->offer(s);
    switch (kind_) {
        case SemanticsKind::cf:
        case SemanticsKind::adm:
        case SemanticsKind::stb:
            kept_.push_back(s);
            return;
        case SemanticsKind::prf:
        case SemanticsKind::sem:
            // Leaves arrive IN-branch first, so a superset of s is always offered before s.
            for (const auto& k : kept_)
                if (s.is_subset_of(k)) return;
            kept_.push_back(s);
            if (kind_ == SemanticsKind::sem) offer_ranged(s);
            return;
        case SemanticsKind::stg:
            offer_ranged(s);
            return;
    }
}

void CandidateFilter::offer_ranged(const ArgumentSet& s) {
    ArgumentSet range = range_of(af_, s);
    for (const auto& f : frontier_)
        if (range.is_proper_subset_of(f.range)) return;
    std::erase_if(frontier_, [&](const Ranged& f) { return f.range.is_proper_subset_of(range); });
    frontier_.push_back({s, std::move(range)});
}

bool CandidateFilter::prunes(const ArgumentSet& possible_members, const ArgumentSet& possible_range) const {
    if (kind_ == SemanticsKind::prf || kind_ == SemanticsKind::sem) {
        for (const auto& k : kept_)
            if (possible_members.is_subset_of(k)) return true;
    }
    if (kind_ == SemanticsKind::sem || kind_ == SemanticsKind::stg) {
        for (const auto& f : frontier_)
            if (possible_range.is_proper_subset_of(f.range)) return true;
    }
    return shared_ && shared_->prunes(possible_members, possible_range);
}

std::vector<ArgumentSet> CandidateFilter::candidates() const {
    if (kind_ == SemanticsKind::sem || kind_ == SemanticsKind::stg) {
        std::vector<ArgumentSet> out;
        out.reserve(frontier_.size());
        for (const auto& f : frontier_) out.push_back(f.set);
        return out;
    }
    return kept_;
}

LabellingSearch::LabellingSearch(const ArgumentationFramework& af, SemanticsKind kind, NodeCounter& counter,
                                 const SearchOptions& options)
    : af_(af), kind_(kind), counter_(counter), options_(options), all_(af.all()) {
    switch (kind) {
        case SemanticsKind::cf:
        case SemanticsKind::stg: mode_ = Mode::conflict_free; break;
        case SemanticsKind::adm:
        case SemanticsKind::prf:
        case SemanticsKind::sem: mode_ = Mode::admissible; break;
        case SemanticsKind::stb: mode_ = Mode::stable; break;
    }
}

SearchNode LabellingSearch::root() const {
    return {af_.none(), af_.none(), af_.none(), af_.none()};
}

ArgumentSet LabellingSearch::candidates(const SearchNode& node) const {
    ArgumentSet cand = all_;
    cand -= node.in;
    cand -= node.out;
    cand -= node.range;
    cand -= node.threats;
    cand -= af_.self_attacking();
    return cand;
}

void LabellingSearch::add_in(SearchNode& node, ArgumentId id) const {
    node.in.insert(id);
    node.range.insert(id);
    node.range |= af_.targets_mask(id);
    node.threats |= af_.attackers_mask(id);
}

bool LabellingSearch::propagate_defense(SearchNode& node, const ArgumentSet& cand, bool& changed) const {
    // Every attacker of IN needs a counter-attacker among IN or the candidates.
    const ArgumentSet open = node.threats - node.range;
    for (std::size_t y = open.first(); y != ArgumentSet::npos; y = open.next(y + 1)) {
        const ArgumentSet defenders = af_.attackers_mask(static_cast<ArgumentId>(y)) & cand;
        const std::size_t first = defenders.first();
        if (first == ArgumentSet::npos) return false;
        if (defenders.next(first + 1) == ArgumentSet::npos) {
            add_in(node, static_cast<ArgumentId>(first));
            changed = true;
            return true;
        }
    }
    // A candidate with an attacker nobody can still counter can never be IN.
    ArgumentSet undefendable = af_.none();
    cand.for_each([&](ArgumentId x) {
        for (ArgumentId y : af_.attackers_of(x)) {
            if (!node.range.contains(y) && !af_.attackers_mask(y).intersects(cand)) {
                undefendable.insert(x);
                return;
            }
        }
    });
    if (!undefendable.empty()) {
        node.out |= undefendable;
        changed = true;
    }
    return true;
}

bool LabellingSearch::propagate_coverage(SearchNode& node, const ArgumentSet& cand, bool& changed) const {
    // Every argument outside the range must still be reachable: IN itself or attacked from IN.
    const ArgumentSet uncovered = all_ - node.range;
    for (std::size_t u = uncovered.first(); u != ArgumentSet::npos; u = uncovered.next(u + 1)) {
        const auto id = static_cast<ArgumentId>(u);
        ArgumentSet options = af_.attackers_mask(id) & cand;
        if (cand.contains(id)) options.insert(id);
        const std::size_t first = options.first();
        if (first == ArgumentSet::npos) return false;
        if (options.next(first + 1) == ArgumentSet::npos) {
            add_in(node, static_cast<ArgumentId>(first));
            changed = true;
            return true;
        }
    }
    return true;
}

bool LabellingSearch::propagate(SearchNode& node, ArgumentSet& cand) const {
    while (true) {
        cand = candidates(node);
        bool changed = false;
        if (mode_ == Mode::admissible && !propagate_defense(node, cand, changed)) return false;
        if (mode_ == Mode::stable && !propagate_coverage(node, cand, changed)) return false;
        if (!changed) return true;
    }
}

void LabellingSearch::leaf(const SearchNode& node, CandidateFilter& filter) const {
    if (options_.on_leaf) {
        const ArgumentSet out = node.out | (node.range - node.in) | node.threats | af_.self_attacking();
        options_.on_leaf(Labelling::from_sets(node.in, out - node.in));
    }
    if (kind_ == SemanticsKind::stg) {
        // Stage extensions are maximal conflict-free sets: skip a leaf that left out a compatible argument.
        const ArgumentSet addable = all_ - node.range - node.threats - af_.self_attacking();
        if (!addable.empty()) return;
    }
    filter.offer(node.in);
}

void LabellingSearch::run(SearchNode node, CandidateFilter& filter) {
    counter_.tick();
    ArgumentSet cand;
    if (!propagate(node, cand)) return;

    if (kind_ == SemanticsKind::prf || kind_ == SemanticsKind::sem || kind_ == SemanticsKind::stg) {
        const ArgumentSet members = node.in | cand;
        ArgumentSet reach = node.range;
        if (kind_ != SemanticsKind::prf) reach |= range_of(af_, cand);
        if (filter.prunes(members, reach)) return;
    }

    const std::size_t x = cand.first();
    if (x == ArgumentSet::npos) {
        leaf(node, filter);
        return;
    }
    SearchNode with = node;
    add_in(with, static_cast<ArgumentId>(x));
    run(std::move(with), filter);
    node.out.insert(static_cast<ArgumentId>(x));
    run(std::move(node), filter);
}

void LabellingSearch::split(SearchNode node, unsigned depth, std::vector<SearchNode>& out) {
    counter_.tick();
    ArgumentSet cand;
    if (!propagate(node, cand)) return;
    const std::size_t x = cand.first();
    if (x == ArgumentSet::npos || depth == 0) {
        out.push_back(std::move(node));
        return;
    }
    SearchNode with = node;
    add_in(with, static_cast<ArgumentId>(x));
    split(std::move(with), depth - 1, out);
    node.out.insert(static_cast<ArgumentId>(x));
    split(std::move(node), depth - 1, out);
}

}  // namespace afsolve::detail
