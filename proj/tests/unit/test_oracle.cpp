#include <doctest.h>

#include "afsolve/error.hpp"
#include "afsolve/oracle.hpp"
#include "../fixtures.hpp"
#include "../reference.hpp"

using namespace afsolve;

TEST_CASE("oracle on six-argument framework") {
    const auto af = fixtures::six_args();
    CHECK(oracle::brute_force(af, SemanticsKind::prf) == fixtures::extension_set(af, {{"a", "c", "f"}, {"a", "d", "f"}}));
    CHECK(oracle::brute_force(af, SemanticsKind::adm).size() == 8);
    for (auto k : all_semantics) CHECK(oracle::check_equivalence(af, k));
}

TEST_CASE("oracle agrees with the reference and with its parallel path") {
    for (const auto& spec : fixtures::corpus(100, 12, 7)) {
        const auto af = bench::generate(spec);
        const reference::Graph g(af);
        for (auto k : all_semantics) {
            INFO(bench::to_string(spec), " ", to_string(k));
            const auto serial = oracle::brute_force(af, k);
            CHECK(reference::to_masks(serial) == reference::extensions(g, k));
            CHECK(oracle::brute_force_parallel(af, k) == serial);
        }
    }
}

TEST_CASE("oracle cap") {
    const auto af = bench::generate(bench::parse_generator_spec("chain:n=21"));
    CHECK_THROWS_AS(oracle::brute_force(af, SemanticsKind::cf), OracleCapExceeded);
    const auto big = bench::generate(bench::parse_generator_spec("chain:n=31"));
    CHECK_THROWS_AS(oracle::brute_force(big, SemanticsKind::cf, 40), OracleCapExceeded);
    CHECK(oracle::brute_force(af, SemanticsKind::stb, 21).size() == 1);
}
