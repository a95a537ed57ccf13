#include <charconv>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "afsolve/bench.hpp"
#include "afsolve/error.hpp"

namespace afsolve::bench {

namespace {

// std::mt19937_64 is fully specified; the distributions are not, so draw uniforms by hand.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
    return names;
}

std::map<std::string, std::string, std::less<>> key_values(std::string_view body, std::string_view spec) {
    std::map<std::string, std::string, std::less<>> kv;
    std::size_t start = 0;
    while (start < body.size()) {
        std::size_t end = body.find(',', start);
        if (end == std::string_view::npos) end = body.size();
        const std::string_view item = body.substr(start, end - start);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw Error("generator spec '" + std::string(spec) + "': expected key=value, got '" + std::string(item) + "'");
        if (!kv.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1))).second)
            throw Error("generator spec '" + std::string(spec) + "': repeated key '" + std::string(item.substr(0, eq)) + "'");
        start = end + 1;
    }
    return kv;
}

class SpecReader {
public:
    SpecReader(std::map<std::string, std::string, std::less<>> kv, std::string_view spec)
        : kv_(std::move(kv)), spec_(spec) {}

    std::uint64_t integer(std::string_view key, std::optional<std::uint64_t> fallback = std::nullopt) {
        const auto it = kv_.find(key);
        if (it == kv_.end()) {
            if (fallback) return *fallback;
            fail("missing '" + std::string(key) + "'");
        }
        std::uint64_t v = 0;
        const auto& s = it->second;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) fail("'" + std::string(key) + "' is not an integer");
        kv_.erase(it);
        return v;
    }

    double real(std::string_view key) {
        const auto it = kv_.find(key);
        if (it == kv_.end()) fail("missing '" + std::string(key) + "'");
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(it->second, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != it->second.size()) fail("'" + std::string(key) + "' is not a number");
        kv_.erase(it);
        return v;
    }

    void done() {
        if (!kv_.empty()) fail("unknown key '" + kv_.begin()->first + "'");
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error("generator spec '" + std::string(spec_) + "': " + what);
    }

private:
    std::map<std::string, std::string, std::less<>> kv_;
    std::string_view spec_;
};

bool probability(double p) { return p >= 0.0 && p <= 1.0; }

constexpr std::size_t kMaxArguments = 1'000'000;

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view model = text.substr(0, colon);
    const std::string_view body = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    SpecReader r(key_values(body, text), text);

    GeneratorSpec spec;
    if (model == "er") {
        spec.model = ErdosRenyi{r.integer("n"), r.real("p")};
    } else if (model == "chain") {
        spec.model = Chain{r.integer("n")};
    } else if (model == "grid") {
        const auto w = r.integer("w");
        spec.model = Grid{w, r.integer("h")};
    } else if (model == "ladder") {
        SccLadder l;
        l.blocks = r.integer("k");
        l.block_size = r.integer("size");
        l.p_intra = r.real("pin");
        l.p_inter = r.real("pout");
        spec.model = l;
    } else {
        r.fail("unknown model '" + std::string(model) + "' (expected er, chain, grid or ladder)");
    }
    spec.seed = r.integer("seed", 0);
    r.done();
    validate(spec);
    return spec;
}

void validate(const GeneratorSpec& spec) {
    auto fail = [&](const std::string& what) { throw Error("invalid generator spec " + to_string(spec) + ": " + what); };
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ErdosRenyi>) {
                if (m.n > kMaxArguments) fail("n too large");
                if (!probability(m.p)) fail("p must lie in [0,1]");
            } else if constexpr (std::is_same_v<T, Chain>) {
                if (m.n > kMaxArguments) fail("n too large");
            } else if constexpr (std::is_same_v<T, Grid>) {
                if (m.width > kMaxArguments || m.height > kMaxArguments || m.width * m.height > kMaxArguments)
                    fail("grid too large");
            } else {
                if (m.blocks == 0 || m.block_size == 0) fail("k and size must be positive");
                if (m.blocks > kMaxArguments || m.block_size > kMaxArguments ||
                    m.blocks * m.block_size > kMaxArguments)
                    fail("ladder too large");
                if (!probability(m.p_intra) || !probability(m.p_inter)) fail("pin and pout must lie in [0,1]");
            }
        },
        spec.model);
}

std::string to_string(const GeneratorSpec& spec) {
    std::ostringstream os;
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ErdosRenyi>) os << "er:n=" << m.n << ",p=" << m.p;
            else if constexpr (std::is_same_v<T, Chain>) os << "chain:n=" << m.n;
            else if constexpr (std::is_same_v<T, Grid>) os << "grid:w=" << m.width << ",h=" << m.height;
            else
                os << "ladder:k=" << m.blocks << ",size=" << m.block_size << ",pin=" << m.p_intra
                   << ",pout=" << m.p_inter;
        },
        spec.model);
    os << ",seed=" << spec.seed;
    return os.str();
}

ArgumentationFramework generate(const GeneratorSpec& spec) {
    validate(spec);
    Rng rng(spec.seed);
    std::vector<Attack> attacks;
    std::size_t n = 0;

    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ErdosRenyi>) {
                n = m.n;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        if (rng.bernoulli(m.p))
                            attacks.push_back({static_cast<ArgumentId>(i), static_cast<ArgumentId>(j)});
            } else if constexpr (std::is_same_v<T, Chain>) {
                n = m.n;
                for (std::size_t i = 0; i + 1 < n; ++i)
                    attacks.push_back({static_cast<ArgumentId>(i), static_cast<ArgumentId>(i + 1)});
            } else if constexpr (std::is_same_v<T, Grid>) {
                n = m.width * m.height;
                auto link = [&](std::size_t a, std::size_t b) {
                    const double u = rng.uniform();
                    const auto x = static_cast<ArgumentId>(a);
                    const auto y = static_cast<ArgumentId>(b);
                    if (u < 2.0 / 3.0) attacks.push_back({x, y});
                    if (u >= 1.0 / 3.0) attacks.push_back({y, x});
                };
                for (std::size_t r = 0; r < m.height; ++r) {
                    for (std::size_t c = 0; c < m.width; ++c) {
                        const std::size_t id = r * m.width + c;
                        if (c + 1 < m.width) link(id, id + 1);
                        if (r + 1 < m.height) link(id, id + m.width);
                    }
                }
            } else {
                n = m.blocks * m.block_size;
                for (std::size_t b = 0; b < m.blocks; ++b) {
                    const std::size_t base = b * m.block_size;
                    if (m.block_size > 1) {
                        for (std::size_t i = 0; i < m.block_size; ++i)
                            attacks.push_back({static_cast<ArgumentId>(base + i),
                                               static_cast<ArgumentId>(base + (i + 1) % m.block_size)});
                    }
                    for (std::size_t i = 0; i < m.block_size; ++i)
                        for (std::size_t j = 0; j < m.block_size; ++j)
                            if (i != j && rng.bernoulli(m.p_intra))
                                attacks.push_back({static_cast<ArgumentId>(base + i), static_cast<ArgumentId>(base + j)});
                }
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t v = (u / m.block_size + 1) * m.block_size; v < n; ++v)
                        if (rng.bernoulli(m.p_inter))
                            attacks.push_back({static_cast<ArgumentId>(u), static_cast<ArgumentId>(v)});
            }
        },
        spec.model);

    return ArgumentationFramework::from_ids(default_names(n), std::move(attacks));
}

std::size_t count_sccs(const ArgumentationFramework& af) {
    // Iterative Tarjan.
    const std::size_t n = af.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0), edge_pos(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<ArgumentId> stack, call;
    std::size_t next_index = 0, components = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.push_back(static_cast<ArgumentId>(root));
        while (!call.empty()) {
            const ArgumentId v = call.back();
            if (index[v] == unvisited) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            const auto succ = af.attacked_by(v);
            if (edge_pos[v] < succ.size()) {
                const ArgumentId w = succ[edge_pos[v]++];
                if (index[w] == unvisited) call.push_back(w);
                else if (on_stack[w]) low[v] = std::min(low[v], index[w]);
                continue;
            }
            call.pop_back();
            if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
            if (low[v] == index[v]) {
                ++components;
                while (true) {
                    const ArgumentId w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    if (w == v) break;
                }
            }
        }
    }
    return components;
}

}  // namespace afsolve::bench
