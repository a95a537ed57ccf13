#include <cstdlib>
#include <doctest.h>
#include <sstream>

#include "afsolve/encodings.hpp"
#include "afsolve/error.hpp"
#include "../fixtures.hpp"

using namespace afsolve;
using namespace afsolve::encodings;

namespace {

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("encodings match the golden files") {
    for (auto name : {EncodingName::cf, EncodingName::def, EncodingName::adm, EncodingName::range, EncodingName::satpref2,
                      EncodingName::satsemi2, EncodingName::pref2, EncodingName::semi2, EncodingName::stage2}) {
        const std::string path = std::string(AFSOLVE_SOURCE_DIR) + "/tests/golden/encodings/" +
                                 std::string(to_string(name)) + ".lp";
        INFO(path);
        CHECK(emit_encoding(name) == io::read_file(path));
        CHECK(parse_encoding(to_string(name)) == name);
    }
}

TEST_CASE("rule counts and composition") {
    const auto cf = lines(emit_encoding(EncodingName::cf));
    REQUIRE(cf.size() == 3);
    CHECK(cf.back() == ":- att(X,Y), in(X), in(Y).");
    const auto semi = lines(emit_encoding(EncodingName::satsemi2));
    REQUIRE(semi.size() == 8);
    CHECK(semi.back() == ":- not spoil, unstable.");
    CHECK(lines(emit_encoding(EncodingName::pref2)).size() == 13);
    CHECK(lines(emit_encoding(EncodingName::semi2)).size() == 18);

    const auto stage = lines(emit_encoding(EncodingName::stage2));
    CHECK(stage.size() == 14);
    CHECK(std::find(stage.begin(), stage.end(), admissible_cover_rule()) == stage.end());
    CHECK(std::find(semi.begin(), semi.end(), admissible_cover_rule()) != semi.end());
    CHECK(emit_encoding(EncodingName::adm) == emit_encoding(EncodingName::cf) + emit_encoding(EncodingName::def));

    CHECK(encoding_for(SemanticsKind::prf) == EncodingName::pref2);
    CHECK(encoding_for(SemanticsKind::sem) == EncodingName::semi2);
    CHECK(encoding_for(SemanticsKind::stg) == EncodingName::stage2);
    CHECK_FALSE(encoding_for(SemanticsKind::stb).has_value());
}

TEST_CASE("facts") {
    const auto af = fixtures::six_args();
    const auto facts = lines(emit_apx_facts(af));
    REQUIRE(facts.size() == 14);
    CHECK(facts[0] == "arg(a).");
    CHECK(facts[6] == "att(a,b).");
    CHECK(facts[13] == "att(e,f).");
    CHECK(io::parse_apx(emit_apx_facts(af)).framework == af);

    const auto bad = ArgumentationFramework::from_ids({"Upper"}, {});
    CHECK_THROWS_AS(emit_apx_facts(bad), FrameworkError);
}

TEST_CASE("constants") {
    CHECK(is_asp_constant("a"));
    CHECK(is_asp_constant("a1_B"));
    CHECK(is_asp_constant("\"any text\""));
    CHECK_FALSE(is_asp_constant("A"));
    CHECK_FALSE(is_asp_constant("1a"));
    CHECK_FALSE(is_asp_constant(""));
    CHECK_FALSE(is_asp_constant("a-b"));
}

TEST_CASE("answer set projection") {
    const auto atoms = split_atoms("arg(a) in(c) out(b) in(a) witness(f(x,y)) in(\"q r\")");
    REQUIRE(atoms.size() == 6);
    CHECK(atoms[4] == "witness(f(x,y))");
    const auto p = project_answer_set(atoms);
    CHECK(p.in_atoms == std::vector<std::string>{"\"q r\"", "a", "c"});
    CHECK(p.raw_atoms == atoms);
    CHECK_THROWS_AS(project_answer_set({"in(a"}), ParseError);

    const auto models = parse_solver_output("clingo version 5\nSolving...\nAnswer: 1\nin(a) in(c)\nAnswer: 2\n\nSATISFIABLE\n");
    REQUIRE(models.size() == 2);
    CHECK(models[0] == std::vector<std::string>{"in(a)", "in(c)"});
    CHECK(models[1].empty());
    CHECK(parse_solver_output("UNSATISFIABLE\n").empty());
    CHECK_THROWS_AS(parse_solver_output("Answer: 1\nin(a)\n"), SolverError);
}

TEST_CASE("differential check is skipped without a solver") {
    const auto r = differential_check(fixtures::six_args(), SemanticsKind::prf, std::nullopt);
    CHECK(r.skipped);
    CHECK(r.ok());
}

TEST_CASE("differential check against a canned solver") {
    // A fake solver that prints one answer set per prf extension of six-argument framework, plus a duplicate.
    const SolverCommand fake{"printf 'Answer: 1\\nin(a) in(c) in(f) spoil\\nAnswer: 2\\nin(f) in(d) in(a)\\n"
                             "Answer: 3\\nin(a) in(c) in(f)\\nSATISFIABLE\\n' # {files} {all}"};
    const auto r = differential_check(fixtures::six_args(), SemanticsKind::prf, fake);
    CHECK_FALSE(r.skipped);
    CHECK(r.answer_sets == 3);
    CHECK(r.ok());

    const SolverCommand wrong{"printf 'Answer: 1\\nin(a)\\nSATISFIABLE\\n' # {files}"};
    const auto bad = differential_check(fixtures::six_args(), SemanticsKind::prf, wrong);
    CHECK_FALSE(bad.ok());
    CHECK(bad.missing.size() == 2);
    CHECK(bad.unexpected.size() == 1);

    CHECK_THROWS_AS(differential_check(fixtures::six_args(), SemanticsKind::prf, SolverCommand{"exit 3 # {files}"}),
                    SolverError);
}

TEST_CASE("differential check with a real solver when available") {
    const auto solver = detect_solver();
    if (!solver) {
        MESSAGE("no ASP solver found, skipped");
        return;
    }
    const auto af = fixtures::six_args();
    for (auto k : {SemanticsKind::prf, SemanticsKind::sem, SemanticsKind::stg}) {
        const auto r = differential_check(af, k, solver);
        CHECK(r.ok());
        CHECK(r.projected == fixtures::extension_set(af, {{"a", "c", "f"}, {"a", "d", "f"}}));
    }
}
