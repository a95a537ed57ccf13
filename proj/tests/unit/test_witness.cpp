#include <doctest.h>

#include "afsolve/error.hpp"
#include "afsolve/semantics.hpp"
#include "../fixtures.hpp"
#include "../reference.hpp"

using namespace afsolve;
using K = SemanticsKind;

namespace {

ArgumentSet from_mask(const ArgumentationFramework& af, reference::Mask m) {
    ArgumentSet s(af.size());
    for (ArgumentId i = 0; i < af.size(); ++i)
        if (m >> i & 1) s.insert(i);
    return s;
}

bool in(const std::vector<reference::Mask>& v, reference::Mask m) { return std::find(v.begin(), v.end(), m) != v.end(); }

}  // namespace

TEST_CASE("witness check on six-argument framework") {
    const auto af = fixtures::six_args();
    CHECK(is_preferred_by_witness(af, make_set(af, {"a", "c", "f"})));
    CHECK(is_preferred_by_witness(af, make_set(af, {"a", "d", "f"})));
    // {c} is a witness: {a,c} is conflict-free and {c} is not inside {a}.
    CHECK_FALSE(is_preferred_by_witness(af, make_set(af, {"a"})));
    CHECK_FALSE(is_preferred_by_witness(af, af.none()));
    CHECK_THROWS_AS(is_preferred_by_witness(af, make_set(af, {"b"})), PreconditionError);
}

TEST_CASE("range checks on small examples") {
    const auto af = fixtures::six_args();
    CHECK(is_range_supreme_by_cover(af, make_set(af, {"a", "c", "f"}), K::adm));
    CHECK(is_range_supreme_by_cover(af, make_set(af, {"a", "d", "f"}), K::adm));
    CHECK_FALSE(is_range_supreme_by_cover(af, make_set(af, {"a", "c"}), K::adm));
    CHECK(exists_cover_with_property(af, af.all(), K::cf));
    CHECK(exists_cover_with_property(af, make_set(af, {"b"}), K::adm));  // {a} attacks b
    CHECK_FALSE(exists_cover_with_property(fixtures::three_cycle(), make_set(fixtures::three_cycle(), {"a"}), K::adm));

    const auto cycle = fixtures::three_cycle();
    CHECK(is_range_supreme_by_superset(cycle, make_set(cycle, {"a"}), K::cf));
    CHECK(is_range_supreme_by_cover(cycle, make_set(cycle, {"a"}), K::cf));
    CHECK(is_range_supreme_by_cover(cycle, cycle.none(), K::adm));
    CHECK(is_range_supreme_by_superset(cycle, cycle.none(), K::adm));
    CHECK_FALSE(is_range_supreme_by_cover(cycle, cycle.none(), K::cf));

    CHECK_THROWS_AS(is_range_supreme_by_cover(af, make_set(af, {"c", "d"}), K::cf), PreconditionError);
    CHECK_THROWS_AS(is_range_supreme_by_cover(af, make_set(af, {"b"}), K::adm), PreconditionError);
    CHECK_THROWS_AS(is_range_supreme_by_cover(af, af.none(), K::prf), PreconditionError);
}

TEST_CASE("witness check equals maximality on every admissible set") {
    for (const auto& spec : fixtures::corpus(120, 10, 4242)) {
        const auto af = bench::generate(spec);
        const reference::Graph g(af);
        const auto prf = reference::extensions(g, K::prf);
        for (auto m : reference::extensions(g, K::adm)) {
            const auto s = from_mask(af, m);
            INFO(bench::to_string(spec), " S=", m);
            const bool w = is_preferred_by_witness(af, s);
            CHECK(w == is_preferred_by_maximality(af, s));
            CHECK(w == in(prf, m));
        }
    }
}

TEST_CASE("range maximality: superset search, cover search and brute force agree") {
    for (const auto& spec : fixtures::corpus(80, 9, 31337)) {
        const auto af = bench::generate(spec);
        const reference::Graph g(af);
        for (auto [base, target] : {std::pair{K::cf, K::stg}, std::pair{K::adm, K::sem}}) {
            const auto truth = reference::extensions(g, target);
            for (auto m : reference::extensions(g, base)) {
                const auto s = from_mask(af, m);
                INFO(bench::to_string(spec), " ", to_string(target), " S=", m);
                const bool a = is_range_supreme_by_superset(af, s, base);
                const bool b = is_range_supreme_by_cover(af, s, base);
                CHECK(a == b);
                CHECK(b == in(truth, m));
            }
        }
    }
}
