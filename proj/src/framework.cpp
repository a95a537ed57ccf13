#include "afsolve/framework.hpp"

#include <algorithm>

#include "afsolve/error.hpp"

namespace afsolve {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::string_view bytes) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace

ArgumentationFramework ArgumentationFramework::build(std::span<const std::string> names,
                                                     std::span<const std::pair<std::string, std::string>> attacks,
                                                     EndpointPolicy policy, std::vector<std::string>* auto_declared) {
    std::vector<std::string> all_names(names.begin(), names.end());
    std::unordered_map<std::string, ArgumentId> ids;
    ids.reserve(all_names.size());
    for (std::size_t i = 0; i < all_names.size(); ++i) {
        if (!ids.emplace(all_names[i], static_cast<ArgumentId>(i)).second)
            throw FrameworkError("duplicate argument name '" + all_names[i] + "'");
    }

    auto resolve = [&](const std::string& n) -> ArgumentId {
        if (auto it = ids.find(n); it != ids.end()) return it->second;
        if (policy == EndpointPolicy::strict)
            throw FrameworkError("attack endpoint '" + n + "' is not a declared argument");
        const auto id = static_cast<ArgumentId>(all_names.size());
        all_names.push_back(n);
        ids.emplace(n, id);
        if (auto_declared) auto_declared->push_back(n);
        return id;
    };

    std::vector<Attack> resolved;
    resolved.reserve(attacks.size());
    for (const auto& [from, to] : attacks) {
        const ArgumentId f = resolve(from);
        const ArgumentId t = resolve(to);
        resolved.push_back({f, t});
    }
    return from_ids(std::move(all_names), std::move(resolved));
}

ArgumentationFramework ArgumentationFramework::from_ids(std::vector<std::string> names, std::vector<Attack> attacks) {
    ArgumentationFramework af;
    af.names_ = std::move(names);
    af.ids_.reserve(af.names_.size());
    for (std::size_t i = 0; i < af.names_.size(); ++i) {
        if (!af.ids_.emplace(af.names_[i], static_cast<ArgumentId>(i)).second)
            throw FrameworkError("duplicate argument name '" + af.names_[i] + "'");
    }
    for (const auto& a : attacks) {
        if (a.from >= af.names_.size() || a.to >= af.names_.size())
            throw FrameworkError("attack endpoint id out of range");
    }
    std::sort(attacks.begin(), attacks.end());
    attacks.erase(std::unique(attacks.begin(), attacks.end()), attacks.end());
    af.attacks_ = std::move(attacks);
    af.index();
    return af;
}

void ArgumentationFramework::index() {
    const std::size_t n = names_.size();
    attackers_of_.assign(n, {});
    attacked_by_.assign(n, {});
    attackers_mask_.assign(n, ArgumentSet(n));
    targets_mask_.assign(n, ArgumentSet(n));
    self_attacking_ = ArgumentSet(n);
    for (const auto& [from, to] : attacks_) {
        attackers_of_[to].push_back(from);
        attacked_by_[from].push_back(to);
        attackers_mask_[to].insert(from);
        targets_mask_[from].insert(to);
        if (from == to) self_attacking_.insert(from);
    }
    // attacks_ is sorted by (from, to), so attacked_by_ lists are ascending; attackers_of_ too
    // because `from` increases monotonically while filling each target's list.

    std::uint64_t h = 0xcbf29ce484222325ull;
    h = fnv1a(h, n);
    for (const auto& name : names_) {
        h = fnv1a(h, name);
        h = fnv1a(h, std::string_view("\0", 1));
    }
    for (const auto& [from, to] : attacks_) h = fnv1a(fnv1a(h, from), to);
    fingerprint_ = h;
}

std::optional<ArgumentId> ArgumentationFramework::find(std::string_view name) const {
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    return std::nullopt;
}

ArgumentSet ArgumentationFramework::successors(const ArgumentSet& s) const {
    ArgumentSet out(size());
    s.for_each([&](ArgumentId id) { out |= targets_mask_[id]; });
    return out;
}

ArgumentSet ArgumentationFramework::predecessors(const ArgumentSet& s) const {
    ArgumentSet out(size());
    s.for_each([&](ArgumentId id) { out |= attackers_mask_[id]; });
    return out;
}

bool is_conflict_free(const ArgumentationFramework& af, const ArgumentSet& s) {
    bool ok = true;
    s.for_each([&](ArgumentId id) {
        if (ok && af.targets_mask(id).intersects(s)) ok = false;
    });
    return ok;
}

bool defends(const ArgumentationFramework& af, const ArgumentSet& s, ArgumentId a) {
    for (ArgumentId attacker : af.attackers_of(a)) {
        if (!af.attackers_mask(attacker).intersects(s)) return false;
    }
    return true;
}

ArgumentSet range_of(const ArgumentationFramework& af, const ArgumentSet& s) {
    return s | af.successors(s);
}

bool is_cover(const ArgumentationFramework& af, const ArgumentSet& e, const ArgumentSet& target) {
    return target.is_subset_of(range_of(af, e));
}

ArgumentSet make_set(const ArgumentationFramework& af, std::initializer_list<std::string_view> names) {
    ArgumentSet s = af.none();
    for (auto n : names) {
        const auto id = af.find(n);
        if (!id) throw FrameworkError("unknown argument '" + std::string(n) + "'");
        s.insert(*id);
    }
    return s;
}

}  // namespace afsolve
