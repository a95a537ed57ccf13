#include <algorithm>
#include <doctest.h>
#include <random>
#include <sstream>

#include "afsolve/bench.hpp"
#include "afsolve/error.hpp"

using namespace afsolve;
using namespace afsolve::bench;

namespace {

double naive_median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    if (v.empty()) return 0;
    return v.size() % 2 ? v[v.size() / 2] : (v[v.size() / 2 - 1] + v[v.size() / 2]) / 2;
}

std::string drop_time_column(const std::string& csv) {
    std::istringstream is(csv);
    std::string out;
    for (std::string line; std::getline(is, line);) {
        // time_ms is the fourth field from the end; the id may contain quoted commas.
        std::size_t cut = line.size();
        for (int i = 0; i < 4; ++i) cut = line.rfind(',', cut - 1);
        const std::size_t next = line.find(',', cut + 1);
        out += line.substr(0, cut) + line.substr(next) + "\n";
    }
    return out;
}

}  // namespace

TEST_CASE("generator specs") {
    const auto er = parse_generator_spec("er:n=50,p=0.05,seed=7");
    CHECK(to_string(er) == "er:n=50,p=0.05,seed=7");
    CHECK(parse_generator_spec("chain:n=4").seed == 0);
    CHECK(to_string(parse_generator_spec("grid:w=4,h=3,seed=1")) == "grid:w=4,h=3,seed=1");
    CHECK(to_string(parse_generator_spec("ladder:k=3,size=4,pin=0.5,pout=0.2,seed=1")) ==
          "ladder:k=3,size=4,pin=0.5,pout=0.2,seed=1");
    for (const char* bad : {"er:n=5", "er:n=5,p=2", "er:n=x,p=0.1", "tree:n=3", "chain:n=3,q=1", "chain:n=3,n=4",
                            "ladder:k=0,size=2,pin=0,pout=0", "chain"})
        CHECK_THROWS_AS(parse_generator_spec(bad), Error);
}

TEST_CASE("generation is deterministic and shaped as requested") {
    const auto spec = parse_generator_spec("er:n=30,p=0.1,seed=5");
    CHECK(generate(spec) == generate(spec));
    auto other = spec;
    other.seed = 6;
    CHECK_FALSE(generate(spec) == generate(other));

    const auto chain = generate(parse_generator_spec("chain:n=5"));
    CHECK(chain.attacks().size() == 4);
    CHECK(count_sccs(chain) == 5);

    const auto grid = generate(parse_generator_spec("grid:w=3,h=2,seed=2"));
    CHECK(grid.size() == 6);
    for (const auto& a : grid.attacks()) {
        const int dx = std::abs(int(a.from % 3) - int(a.to % 3)), dy = std::abs(int(a.from / 3) - int(a.to / 3));
        CHECK(dx + dy == 1);
    }
    CHECK(grid.attacks().size() >= 7);

    const auto full = generate(parse_generator_spec("er:n=4,p=1"));
    CHECK(full.attacks().size() == 16);
    CHECK(generate(parse_generator_spec("er:n=4,p=0")).attacks().empty());
}

TEST_CASE("ladders have one strongly connected component per block") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GeneratorSpec spec{SccLadder{3, 4, 0.5, 0.2}, seed};
        const auto af = generate(spec);
        CHECK(af.size() == 12);
        CHECK(count_sccs(af) == 3);
        for (const auto& a : af.attacks()) CHECK(a.from / 4 <= a.to / 4);
    }
}

TEST_CASE("median matches a sort-based median") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
        std::vector<double> v(rng() % 12);
        for (auto& x : v) x = double(rng() % 50);
        CHECK(median(v) == doctest::Approx(naive_median(v)));
    }
    CHECK(median({}) == 0.0);
}

TEST_CASE("summaries count unsolved runs at the timeout") {
    std::vector<BenchRecord> recs;
    auto rec = [](std::string id, SemanticsKind k, RunStatus s, double t) {
        BenchRecord r;
        r.instance_id = std::move(id);
        r.kind = k;
        r.status = s;
        r.time_ms = t;
        return r;
    };
    recs.push_back(rec("i1", SemanticsKind::prf, RunStatus::solved, 5));
    recs.push_back(rec("i2", SemanticsKind::prf, RunStatus::timeout, 1200));
    recs.push_back(rec("i3", SemanticsKind::prf, RunStatus::unknown, 30));
    recs.push_back(rec("i1", SemanticsKind::stb, RunStatus::solved, 2));
    const std::vector<SemanticsKind> kinds{SemanticsKind::prf, SemanticsKind::stb};
    const auto s = summarize(recs, kinds, 1000);
    REQUIRE(s.size() == 2);
    CHECK(s[0].instances == 3);
    CHECK(s[0].solved == 1);
    CHECK(s[0].median_ms == 1000);
    CHECK(s[1].median_ms == 2);
    CHECK(summary_to_text(s) == "kind,instances,solved,median_ms\nprf,3,1,1000.000\nstb,1,1,2.000\n");
}

TEST_CASE("suite output is deterministic apart from timings") {
    std::vector<BenchInstance> instances;
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        GeneratorSpec spec{ErdosRenyi{12, 0.2}, seed};
        instances.push_back({to_string(spec), generate(spec)});
    }
    const std::vector<SemanticsKind> kinds(all_semantics.begin(), all_semantics.end());
    SuiteOptions opts;
    opts.timeout_ms = 60000;
    opts.workers = 3;
    const auto a = run_suite(instances, kinds, opts);
    opts.workers = 1;
    const auto b = run_suite(instances, kinds, opts);
    CHECK(a.records.size() == 24);
    CHECK(drop_time_column(records_to_csv(a.records)) == drop_time_column(records_to_csv(b.records)));
    for (const auto& r : a.records) {
        CHECK(r.status == RunStatus::solved);
        CHECK(r.extension_count.has_value());
    }
    const auto csv = records_to_csv(a.records);
    CHECK(csv.starts_with("instance_id,kind,status,time_ms,ext_count,n_args,n_attacks\n\"er:n=12,p=0.2,seed=0\",cf,SOLVED,"));
}

TEST_CASE("zero timeout and tiny budgets") {
    std::vector<BenchInstance> one{{"x", generate(parse_generator_spec("er:n=30,p=0.1,seed=1"))}};
    const std::vector<SemanticsKind> kinds{SemanticsKind::prf};
    SuiteOptions opts;
    opts.timeout_ms = 0;
    CHECK(run_suite(one, kinds, opts).records[0].status == RunStatus::timeout);
    opts.timeout_ms = 60000;
    opts.node_budget = 1;
    const auto r = run_suite(one, kinds, opts);
    CHECK(r.records[0].status == RunStatus::unknown);
    CHECK(records_to_csv(r.records).find("UNKNOWN,") != std::string::npos);
}
