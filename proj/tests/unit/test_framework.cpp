#include <doctest.h>

#include "afsolve/error.hpp"
#include "afsolve/framework.hpp"
#include "../fixtures.hpp"

using namespace afsolve;

TEST_CASE("six-argument framework has 6 arguments and 8 attacks") {
    const auto af = fixtures::six_args();
    CHECK(af.size() == 6);
    CHECK(af.attacks().size() == 8);
    CHECK(af.attacks(*af.find("a"), *af.find("b")));
    CHECK_FALSE(af.attacks(*af.find("b"), *af.find("a")));
    CHECK(af.attackers_of(*af.find("e")).size() == 2);
}

TEST_CASE("build rejects duplicates and undeclared endpoints") {
    const std::vector<std::string> names{"a", "b"};
    const std::vector<std::pair<std::string, std::string>> bad{{"a", "z"}};
    CHECK_THROWS_AS(ArgumentationFramework::build(std::vector<std::string>{"a", "a"}, {}), FrameworkError);
    CHECK_THROWS_AS(ArgumentationFramework::build(names, bad), FrameworkError);

    std::vector<std::string> added;
    const auto af = ArgumentationFramework::build(names, bad, EndpointPolicy::lenient, &added);
    CHECK(af.size() == 3);
    CHECK(af.name(2) == "z");
    CHECK(added == std::vector<std::string>{"z"});
}

TEST_CASE("attacks are sorted and deduplicated") {
    const auto af = ArgumentationFramework::from_ids({"a", "b"}, {{1, 0}, {0, 1}, {1, 0}, {0, 0}});
    REQUIRE(af.attacks().size() == 3);
    CHECK(af.attacks()[0] == Attack{0, 0});
    CHECK(af.attacks()[2] == Attack{1, 0});
    CHECK(af.self_attacking().contains(0));
}

TEST_CASE("empty framework") {
    const auto af = ArgumentationFramework::from_ids({}, {});
    CHECK(af.empty());
    CHECK(is_conflict_free(af, af.none()));
}

TEST_CASE("primitive predicates on six-argument framework") {
    const auto af = fixtures::six_args();
    CHECK(is_conflict_free(af, make_set(af, {"a", "c", "f"})));
    CHECK_FALSE(is_conflict_free(af, make_set(af, {"c", "d"})));

    CHECK(defends(af, make_set(af, {"a"}), *af.find("a")));
    // b attacks d and nothing in the empty set attacks b.
    CHECK_FALSE(defends(af, af.none(), *af.find("d")));

    CHECK(range_of(af, make_set(af, {"a", "d", "f"})) == af.all());
    CHECK(range_of(af, make_set(af, {"a"})) == make_set(af, {"a", "b"}));

    CHECK(is_cover(af, make_set(af, {"a", "c", "f"}), af.all()));
    CHECK_FALSE(is_cover(af, make_set(af, {"a"}), make_set(af, {"a", "c"})));
}

TEST_CASE("successors and predecessors") {
    const auto af = fixtures::six_args();
    CHECK(af.successors(make_set(af, {"c"})) == make_set(af, {"b", "d", "e"}));
    CHECK(af.predecessors(make_set(af, {"e"})) == make_set(af, {"c", "d"}));
}

TEST_CASE("fingerprint and equality depend on content only") {
    const auto a = fixtures::six_args();
    const auto b = fixtures::apx("att(a,b). arg(f). arg(e). arg(a). arg(b). arg(c). arg(d).");
    CHECK(a.fingerprint() == fixtures::six_args().fingerprint());
    CHECK_FALSE(a == b);
    CHECK(a.fingerprint() != b.fingerprint());
}

TEST_CASE("argument sets") {
    ArgumentSet s(130);
    s.insert(0);
    s.insert(64);
    s.insert(129);
    CHECK(s.size() == 3);
    CHECK(s.members() == std::vector<ArgumentId>{0, 64, 129});
    ArgumentSet t = s;
    t.erase(64);
    CHECK(t.is_proper_subset_of(s));
    CHECK((s - t).members() == std::vector<ArgumentId>{64});
    CHECK(ArgumentSet::full(130).size() == 130);
    CHECK(lex_less(t, s) == false);  // [0,129] vs [0,64,129]
    CHECK(lex_less(s, t));
}
