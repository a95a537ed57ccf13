#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "afsolve/framework.hpp"
#include "afsolve/semantics.hpp"

namespace afsolve::bench {

struct ErdosRenyi {
    std::size_t n = 0;
    double p = 0.0;  // per ordered pair, self-attacks included
};
struct Chain {
    std::size_t n = 0;
};
// Orthogonal neighbours attack each other forward, backward or both, chosen per edge.
struct Grid {
    std::size_t width = 0;
    std::size_t height = 0;
};
// `blocks` strongly connected blocks of `block_size` arguments (a directed cycle plus
// random intra-block attacks), joined by random attacks from earlier to later blocks only.
struct SccLadder {
    std::size_t blocks = 1;
    std::size_t block_size = 1;
    double p_intra = 0.0;
    double p_inter = 0.0;
};

struct GeneratorSpec {
    std::variant<ErdosRenyi, Chain, Grid, SccLadder> model;
    std::uint64_t seed = 0;
};

/// `er:n=50,p=0.05,seed=7`, `chain:n=10`, `grid:w=4,h=3,seed=1`,
/// `ladder:k=3,size=4,pin=0.5,pout=0.2,seed=1`. Throws Error on malformed specs.
GeneratorSpec parse_generator_spec(std::string_view text);
std::string to_string(const GeneratorSpec& spec);
void validate(const GeneratorSpec& spec);

/// Deterministic in (spec, seed). Arguments are named a0, a1, ...
ArgumentationFramework generate(const GeneratorSpec& spec);

/// Number of strongly connected components of the attack graph.
std::size_t count_sccs(const ArgumentationFramework& af);

enum class RunStatus { solved, timeout, unknown };
std::string_view to_string(RunStatus status) noexcept;

struct BenchRecord {
    std::string instance_id;
    SemanticsKind kind = SemanticsKind::prf;
    RunStatus status = RunStatus::unknown;
    double time_ms = 0.0;
    std::optional<std::size_t> extension_count;  // present iff solved
    std::size_t n_args = 0;
    std::size_t n_attacks = 0;
};

struct BenchInstance {
    std::string id;
    ArgumentationFramework framework;
};

struct KindSummary {
    SemanticsKind kind = SemanticsKind::prf;
    std::size_t instances = 0;
    std::size_t solved = 0;
    double median_ms = 0.0;  // unsolved runs count as the timeout
};

struct SuiteOptions {
    double timeout_ms = 600'000.0;
    int workers = 1;
    std::uint64_t node_budget = 100'000'000;
};

struct SuiteResult {
    std::vector<BenchRecord> records;  // sorted by (instance id, kind)
    std::vector<KindSummary> summary;  // in the order of the requested kinds
};

/// One enumeration per (instance, kind) under a wall-clock timeout. Writes the CSV
/// to `out_csv` unless it is empty. Throws IoError.
SuiteResult run_suite(std::span<const BenchInstance> instances, std::span<const SemanticsKind> kinds,
                      const SuiteOptions& options, const std::filesystem::path& out_csv = {});

std::vector<KindSummary> summarize(std::span<const BenchRecord> records, std::span<const SemanticsKind> kinds,
                                   double timeout_ms);

/// Median of the values; mean of the two middle ones for even counts. 0 when empty.
double median(std::vector<double> values);

/// Header `instance_id,kind,status,time_ms,ext_count,n_args,n_attacks`, one row per record.
std::string records_to_csv(std::span<const BenchRecord> records);
std::string summary_to_text(std::span<const KindSummary> summary);

}  // namespace afsolve::bench
