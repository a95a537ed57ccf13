#include <doctest.h>
#include <random>

#include "afsolve/encodings.hpp"
#include "afsolve/error.hpp"
#include "afsolve/io.hpp"
#include "afsolve/semantics.hpp"
#include "../fixtures.hpp"

using namespace afsolve;

TEST_CASE("apx with comments, whitespace and quoted names") {
    const auto p = io::parse_apx(
        "% header\n"
        "arg( a ).arg(b)   .\n"
        "arg(\"long name\"). % trailing\n"
        "att(a,\"long name\").\n"
        "att (b , a).\n");
    const auto& af = p.framework;
    CHECK(af.size() == 3);
    CHECK(af.name(2) == "\"long name\"");
    CHECK(af.attacks(0, 2));
    CHECK(af.attacks(1, 0));
    CHECK(p.diagnostics.warnings.empty());
}

TEST_CASE("attacks may precede declarations") {
    CHECK(io::parse_apx("att(a,b). arg(a). arg(b).").framework.attacks(0, 1));
}

TEST_CASE("apx errors carry line numbers") {
    auto line_of = [](const char* text) {
        try {
            io::parse_apx(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("arg(a).\natt(a,b).") == 2);
    CHECK(line_of("arg(a).\n\narg(a).") == 3);
    CHECK(line_of("arg(a)\narg(b).") == 2);
    CHECK(line_of("arg(A).") == 1);
    CHECK(line_of("foo(a).") == 1);
    CHECK(line_of("arg(a).\natt(a).") == 2);
    CHECK(line_of("arg(\"x).") == 1);
}

TEST_CASE("lenient endpoints") {
    const auto p = io::parse_apx("arg(a).\natt(a,b).\natt(c,a).", EndpointPolicy::lenient);
    CHECK(p.framework.names() == std::vector<std::string>{"a", "b", "c"});
    CHECK(p.diagnostics.lenient_declarations == std::vector<std::string>{"b", "c"});
    REQUIRE(p.diagnostics.warnings.size() == 2);
    CHECK(p.diagnostics.warnings[0].first == 2);
}

TEST_CASE("tgf") {
    const auto tgf = io::parse_tgf(io::read_file(std::string(AFSOLVE_SOURCE_DIR) + "/tests/data/six_args.tgf")).framework;
    const auto apx = io::parse_apx(io::read_file(std::string(AFSOLVE_SOURCE_DIR) + "/tests/data/six_args.apx")).framework;
    CHECK(tgf == apx);
    CHECK(io::parse_tgf("1 first\n2\n#\n1 2\n").framework.names() == std::vector<std::string>{"1", "2"});
    CHECK_THROWS_AS(io::parse_tgf("1\n2\n"), ParseError);
    CHECK_THROWS_AS(io::parse_tgf("1\n#\n1 3\n"), ParseError);
    CHECK(io::parse_tgf("1\n#\n1 3\n", EndpointPolicy::lenient).framework.size() == 2);
    CHECK(io::format_for_path("x/y.tgf") == io::InputFormat::tgf);
    CHECK(io::format_for_path("x/y.apx") == io::InputFormat::apx);
}

TEST_CASE("output formatting") {
    const auto af = fixtures::six_args();
    const auto prf = enumerate(af, SemanticsKind::prf);
    CHECK(io::format_extensions(af, prf, io::OutputStyle::lines) == "[a,c,f]\n[a,d,f]\n");
    CHECK(io::format_extensions(af, prf, io::OutputStyle::single) == "[[a,c,f],[a,d,f]]");
    const auto none = enumerate(fixtures::three_cycle(), SemanticsKind::stb);
    CHECK(io::format_extensions(af, none, io::OutputStyle::lines).empty());
    CHECK(io::format_extensions(af, none, io::OutputStyle::single) == "[]");
    CHECK(io::format_set(af, af.none()) == "[]");
}

TEST_CASE("missing file is an I/O error") {
    CHECK_THROWS_AS(io::read_file("/nonexistent/file.apx"), IoError);
}

TEST_CASE("facts round-trip on fuzzed frameworks") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = rng() % 15;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i)
            names.push_back(rng() % 4 == 0 ? "\"arg " + std::to_string(i) + "\"" : "x" + std::to_string(i) + "_y");
        std::vector<Attack> atts;
        for (std::size_t k = 0, m = n ? rng() % (3 * n) : 0; k < m; ++k)
            atts.push_back({static_cast<ArgumentId>(rng() % n), static_cast<ArgumentId>(rng() % n)});
        const auto af = ArgumentationFramework::from_ids(names, atts);
        CHECK(io::parse_apx(encodings::emit_apx_facts(af)).framework == af);
    }
}
