#include "set_search.hpp"

namespace afsolve::detail {

namespace {

struct State {
    ArgumentSet members;
    ArgumentSet succ;     // attacked by members
    ArgumentSet pred;     // attacking members
    ArgumentSet allowed;  // pool minus arguments ruled out by earlier siblings

    void add(const ArgumentationFramework& af, ArgumentId id) {
        members.insert(id);
        succ |= af.targets_mask(id);
        pred |= af.attackers_mask(id);
    }
};

class SetSearch {
public:
    SetSearch(const ArgumentationFramework& af, const SetQuery& query, NodeCounter& counter)
        : af_(af), query_(query), counter_(counter) {}

    std::optional<ArgumentSet> run(State state) {
        if (dfs(state)) return std::move(state.members);
        return std::nullopt;
    }

private:
    // On success `state` holds the found set.
    bool dfs(State& state) {
        counter_.tick();
        const ArgumentSet compat = state.allowed - state.members - state.succ - state.pred - af_.self_attacking();

        ArgumentSet best;
        std::size_t best_size = ArgumentSet::npos;
        auto consider = [&](ArgumentSet&& opts) {
            const std::size_t sz = opts.size();
            if (sz < best_size) {
                best_size = sz;
                best = std::move(opts);
            }
            return sz == 0;
        };

        const ArgumentSet uncovered = query_.target - state.members - state.succ;
        for (std::size_t t = uncovered.first(); t != ArgumentSet::npos; t = uncovered.next(t + 1)) {
            const auto id = static_cast<ArgumentId>(t);
            ArgumentSet opts = af_.attackers_mask(id) & compat;
            if (compat.contains(id)) opts.insert(id);
            if (consider(std::move(opts))) return false;
        }
        if (query_.admissible) {
            const ArgumentSet open = state.pred - state.succ;
            for (std::size_t y = open.first(); y != ArgumentSet::npos; y = open.next(y + 1)) {
                if (consider(af_.attackers_mask(static_cast<ArgumentId>(y)) & compat)) return false;
            }
        }
        if (best_size == ArgumentSet::npos) return true;  // nothing left to discharge

        // Branch "z in" for each option; later siblings exclude the earlier options.
        ArgumentSet allowed = state.allowed;
        for (std::size_t z = best.first(); z != ArgumentSet::npos; z = best.next(z + 1)) {
            State child{state.members, state.succ, state.pred, allowed};
            child.add(af_, static_cast<ArgumentId>(z));
            if (dfs(child)) {
                state = std::move(child);
                return true;
            }
            allowed.erase(static_cast<ArgumentId>(z));
        }
        return false;
    }

    const ArgumentationFramework& af_;
    const SetQuery& query_;
    NodeCounter& counter_;
};

}  // namespace

std::optional<ArgumentSet> find_set(const ArgumentationFramework& af, const SetQuery& query, NodeCounter& counter) {
    if (!query.must_include.is_subset_of(query.pool) || !is_conflict_free(af, query.must_include)) return std::nullopt;
    State state{af.none(), af.none(), af.none(), query.pool};
    query.must_include.for_each([&](ArgumentId id) { state.add(af, id); });
    return SetSearch(af, query, counter).run(std::move(state));
}

}  // namespace afsolve::detail
