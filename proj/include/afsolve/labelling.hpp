#pragma once

#include <cstdint>
#include <vector>

#include "afsolve/argument_set.hpp"

namespace afsolve {

enum class Label : std::uint8_t { undec, in, out };

// Per-argument in/out/undecided assignment. A finished search labelling has no
// undecided argument, so its IN and OUT sets partition the arguments.
class Labelling {
public:
    Labelling() = default;
    explicit Labelling(std::size_t n) : labels_(n, Label::undec) {}

    static Labelling from_sets(const ArgumentSet& in, const ArgumentSet& out) {
        Labelling l(in.universe());
        out.for_each([&](ArgumentId id) { l.labels_[id] = Label::out; });
        in.for_each([&](ArgumentId id) { l.labels_[id] = Label::in; });
        return l;
    }

    std::size_t size() const noexcept { return labels_.size(); }
    Label operator[](ArgumentId id) const { return labels_.at(id); }
    void set(ArgumentId id, Label label) { labels_.at(id) = label; }

    ArgumentSet with(Label label) const {
        ArgumentSet s(labels_.size());
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) s.insert(static_cast<ArgumentId>(i));
        return s;
    }
    ArgumentSet in_set() const { return with(Label::in); }
    ArgumentSet out_set() const { return with(Label::out); }

    bool complete() const noexcept {
        for (auto l : labels_)
            if (l == Label::undec) return false;
        return true;
    }

private:
    std::vector<Label> labels_;
};

}  // namespace afsolve
