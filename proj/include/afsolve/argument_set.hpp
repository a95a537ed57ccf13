#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace afsolve {

using ArgumentId = std::uint32_t;

// Dense set over the argument ids [0, universe) of one framework.
// Bits past `universe` in the last word are always zero.
class ArgumentSet {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    ArgumentSet() = default;
    explicit ArgumentSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static ArgumentSet full(std::size_t universe) {
        ArgumentSet s(universe);
        std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
        s.trim();
        return s;
    }

    static ArgumentSet of(std::size_t universe, std::initializer_list<ArgumentId> ids) {
        ArgumentSet s(universe);
        for (auto id : ids) s.insert(id);
        return s;
    }

    static ArgumentSet of(std::size_t universe, std::span<const ArgumentId> ids) {
        ArgumentSet s(universe);
        for (auto id : ids) s.insert(id);
        return s;
    }

    // Low `universe` bits of `mask` (universe <= 64).
    static ArgumentSet from_mask(std::size_t universe, std::uint64_t mask) {
        assert(universe <= 64);
        ArgumentSet s(universe);
        if (!s.words_.empty()) s.words_[0] = mask;
        s.trim();
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(ArgumentId id) const noexcept {
        assert(id < universe_);
        return (words_[id >> 6] >> (id & 63)) & 1u;
    }
    void insert(ArgumentId id) noexcept {
        assert(id < universe_);
        words_[id >> 6] |= std::uint64_t{1} << (id & 63);
    }
    void erase(ArgumentId id) noexcept {
        assert(id < universe_);
        words_[id >> 6] &= ~(std::uint64_t{1} << (id & 63));
    }
    void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

    std::size_t size() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

    bool is_subset_of(const ArgumentSet& other) const noexcept {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }
    bool is_proper_subset_of(const ArgumentSet& other) const noexcept {
        return is_subset_of(other) && words_ != other.words_;
    }
    bool intersects(const ArgumentSet& other) const noexcept {
        assert(universe_ == other.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    ArgumentSet& operator|=(const ArgumentSet& o) noexcept {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    ArgumentSet& operator&=(const ArgumentSet& o) noexcept {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // Set difference.
    ArgumentSet& operator-=(const ArgumentSet& o) noexcept {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend ArgumentSet operator|(ArgumentSet a, const ArgumentSet& b) { return a |= b; }
    friend ArgumentSet operator&(ArgumentSet a, const ArgumentSet& b) { return a &= b; }
    friend ArgumentSet operator-(ArgumentSet a, const ArgumentSet& b) { return a -= b; }

    friend bool operator==(const ArgumentSet&, const ArgumentSet&) = default;

    // Smallest member >= from, or npos.
    std::size_t next(std::size_t from) const noexcept {
        if (from >= universe_) return npos;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return npos;
            w = words_[wi];
        }
    }
    std::size_t first() const noexcept { return next(0); }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(w));
                fn(static_cast<ArgumentId>((wi << 6) + bit));
                w &= w - 1;
            }
        }
    }

    std::vector<ArgumentId> members() const {
        std::vector<ArgumentId> out;
        out.reserve(size());
        for_each([&](ArgumentId id) { out.push_back(id); });
        return out;
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    std::size_t hash() const noexcept {
        std::size_t h = universe_;
        for (auto w : words_) h = h * 0x9E3779B97F4A7C15ull ^ std::hash<std::uint64_t>{}(w);
        return h;
    }

private:
    void trim() noexcept {
        if (universe_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

// Lexicographic order over the ascending member lists: [] < [a] < [a,c] < [a,c,f] < [a,d].
inline bool lex_less(const ArgumentSet& a, const ArgumentSet& b) noexcept {
    assert(a.universe() == b.universe());
    const auto wa = a.words();
    const auto wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) {
        const std::uint64_t diff = wa[i] ^ wb[i];
        if (!diff) continue;
        const auto pos = (i << 6) + static_cast<std::size_t>(std::countr_zero(diff));
        // The set holding `pos` is smaller unless the other one has nothing left past pos.
        const ArgumentSet& other = a.contains(static_cast<ArgumentId>(pos)) ? b : a;
        const bool other_continues = other.next(pos + 1) != ArgumentSet::npos;
        return a.contains(static_cast<ArgumentId>(pos)) ? other_continues : !other_continues;
    }
    return false;
}

struct LexLess {
    bool operator()(const ArgumentSet& a, const ArgumentSet& b) const noexcept { return lex_less(a, b); }
};

struct ArgumentSetHash {
    std::size_t operator()(const ArgumentSet& s) const noexcept { return s.hash(); }
};

}  // namespace afsolve
