#include "afsolve/cli.hpp"

#include <chrono>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "afsolve/bench.hpp"
#include "afsolve/encodings.hpp"
#include "afsolve/error.hpp"
#include "afsolve/io.hpp"
#include "afsolve/oracle.hpp"
#include "afsolve/semantics.hpp"

namespace afsolve::cli {

namespace {

struct InputFlags {
    std::string path = "-";
    std::string format;  // empty: by extension
    bool lenient = false;
    bool strict = false;
};

struct SearchFlags {
    std::uint64_t budget = 100'000'000;
    double timeout_ms = 0;  // 0: none
};

void add_input_flags(CLI::App* cmd, InputFlags& f, bool positional_required) {
    auto* opt = cmd->add_option("input", f.path, "Instance file ('-' for stdin)");
    if (positional_required) opt->required();
    cmd->add_option("--format", f.format, "Input format")->check(CLI::IsMember({"apx", "tgf"}));
    auto* lenient = cmd->add_flag("--lenient", f.lenient, "Auto-declare arguments that only appear in attacks");
    auto* strict = cmd->add_flag("--strict", f.strict, "Reject undeclared attack endpoints (default)");
    lenient->excludes(strict);
}

void add_search_flags(CLI::App* cmd, SearchFlags& f) {
    cmd->add_option("--budget", f.budget, "Search node budget")->capture_default_str();
    cmd->add_option("--timeout", f.timeout_ms, "Wall-clock timeout in milliseconds (0: none)")->check(CLI::NonNegativeNumber);
}

SemanticsKind kind_from(const std::string& s) {
    const auto k = parse_semantics(s);
    if (!k) throw CLI::ValidationError("--sem", "unknown semantics '" + s + "'");
    return *k;
}

const std::vector<std::string> kSemanticsNames = {"cf", "adm", "stb", "prf", "sem", "stg"};

io::ParsedFramework load(const InputFlags& f, std::istream& in, std::ostream& err) {
    std::string text;
    io::InputFormat format = io::InputFormat::apx;
    if (f.path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        text = io::read_file(f.path);
        format = io::format_for_path(f.path);
    }
    if (!f.format.empty()) format = *io::parse_format(f.format);
    auto parsed = io::parse(text, format, f.lenient ? EndpointPolicy::lenient : EndpointPolicy::strict);
    for (const auto& [line, message] : parsed.diagnostics.warnings) err << "warning: line " << line << ": " << message << '\n';
    return parsed;
}

SearchOptions search_options(const SearchFlags& f) {
    SearchOptions o;
    o.node_budget = f.budget;
    if (f.timeout_ms > 0) {
        const auto deadline = std::chrono::steady_clock::now() +
                              std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                  std::chrono::duration<double, std::milli>(f.timeout_ms));
        o.should_stop = [deadline] { return std::chrono::steady_clock::now() >= deadline; };
    }
    return o;
}

struct CheckTotals {
    std::size_t runs = 0;
    std::size_t failures = 0;
    std::size_t skipped = 0;
};

void check_one(const std::string& id, const ArgumentationFramework& af, SemanticsKind kind, std::size_t cap,
               const SearchOptions& options, const std::optional<encodings::SolverCommand>& solver, bool asp,
               std::ostream& out, CheckTotals& totals) {
    ++totals.runs;
    const bool oracle_ok = oracle::check_equivalence(af, kind, cap, options);
    std::string asp_status = "-";
    bool asp_ok = true;
    if (asp && encodings::encoding_for(kind)) {
        const auto report = encodings::differential_check(af, kind, solver, options);
        if (report.skipped) {
            asp_status = "SKIPPED";
            ++totals.skipped;
        } else {
            asp_ok = report.ok();
            asp_status = asp_ok ? "PASS" : "FAIL";
        }
    }
    if (!oracle_ok || !asp_ok) ++totals.failures;
    out << id << ' ' << to_string(kind) << " oracle=" << (oracle_ok ? "PASS" : "FAIL") << " asp=" << asp_status
        << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Abstract argumentation solver: cf, adm, stb, prf, sem and stg extensions", "afsolve"};
    app.require_subcommand(1);

    InputFlags input;
    SearchFlags search;
    std::string sem;
    std::vector<std::string> sems;
    bool all_kinds = false;
    bool single = false;
    int workers = 1;
    std::string cred, skep;
    std::string encoding;
    bool facts = false;
    std::vector<std::string> gens;
    std::size_t count = 1;
    std::size_t cap = oracle::default_cap;
    std::string out_path;
    std::vector<std::string> bench_inputs;

    auto* solve = app.add_subcommand("solve", "Enumerate all extensions");
    add_input_flags(solve, input, false);
    add_search_flags(solve, search);
    solve->add_option("--sem", sem, "Semantics")->required()->check(CLI::IsMember(kSemanticsNames));
    solve->add_flag("--single", single, "Print all extensions on one line as [[...],[...]]");
    solve->add_option("--workers", workers, "Threads for the split search (1: serial)")->check(CLI::PositiveNumber);

    auto* query = app.add_subcommand("query", "Credulous or skeptical acceptance of one argument");
    add_input_flags(query, input, false);
    add_search_flags(query, search);
    query->add_option("--sem", sem, "Semantics")->required()->check(CLI::IsMember(kSemanticsNames));
    auto* cred_opt = query->add_option("--cred", cred, "Credulous acceptance of ARG");
    auto* skep_opt = query->add_option("--skep", skep, "Skeptical acceptance of ARG");
    cred_opt->excludes(skep_opt);

    auto* emit = app.add_subcommand("emit", "Print an ASP encoding and/or the facts of an instance");
    add_input_flags(emit, input, false);
    emit->add_option("--encoding", encoding, "cf, def, adm, range, satpref2, satsemi2, pref2, semi2, stage2");
    emit->add_flag("--facts", facts, "Print arg/att facts of the input");

    auto* check = app.add_subcommand("check", "Compare the solver against the brute-force oracle (and an ASP solver)");
    add_input_flags(check, input, false);
    check->add_option("--sem", sems, "Semantics to check (repeatable)")->check(CLI::IsMember(kSemanticsNames));
    check->add_flag("--all", all_kinds, "Check all six semantics");
    check->add_option("--gen", gens, "Generator spec, e.g. er:n=10,p=0.2,seed=1")->expected(1);
    check->add_option("--count", count, "Instances per generator spec (seeds seed, seed+1, ...)");
    check->add_option("--cap", cap, "Oracle argument cap")->capture_default_str();
    check->add_option("--budget", search.budget, "Search node budget");

    auto* bench = app.add_subcommand("bench", "Timed enumeration over generated or given instances, CSV output");
    bench->add_option("inputs", bench_inputs, "Instance files");
    bench->add_option("--gen", gens, "Generator spec (repeatable)");
    bench->add_option("--count", count, "Instances per generator spec");
    bench->add_option("--sem", sems, "Semantics (repeatable)")->check(CLI::IsMember(kSemanticsNames));
    bench->add_flag("--all", all_kinds, "All six semantics");
    bench->add_option("--timeout", search.timeout_ms, "Per-run timeout in milliseconds")->default_val(600000);
    bench->add_option("--workers", workers, "Concurrent runs")->check(CLI::PositiveNumber);
    bench->add_option("--out", out_path, "CSV output path");
    bench->add_option("--budget", search.budget, "Search node budget");
    bench->add_option("--format", input.format, "Input format")->check(CLI::IsMember({"apx", "tgf"}));
    bench->add_flag("--lenient", input.lenient, "Auto-declare undeclared attack endpoints");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    auto kinds_requested = [&]() {
        std::vector<SemanticsKind> kinds;
        if (all_kinds) return std::vector<SemanticsKind>(all_semantics.begin(), all_semantics.end());
        for (const auto& s : sems) kinds.push_back(kind_from(s));
        return kinds;
    };

    try {
        if (solve->parsed()) {
            const auto parsed = load(input, in, err);
            const auto options = search_options(search);
            const auto kind = kind_from(sem);
            const ExtensionSet exts = workers > 1 ? enumerate_parallel(parsed.framework, kind, options, 6, workers)
                                                  : enumerate(parsed.framework, kind, options);
            out << io::format_extensions(parsed.framework, exts, single ? io::OutputStyle::single : io::OutputStyle::lines);
            if (single) out << '\n';
            return exit_ok;
        }

        if (query->parsed()) {
            if (cred.empty() == skep.empty()) {
                err << "error: query needs exactly one of --cred ARG or --skep ARG\n";
                return exit_usage;
            }
            const auto parsed = load(input, in, err);
            const std::string& name = cred.empty() ? skep : cred;
            const auto id = parsed.framework.find(name);
            if (!id) {
                err << "error: unknown argument '" << name << "'\n";
                return exit_usage;
            }
            const auto options = search_options(search);
            const auto kind = kind_from(sem);
            const bool yes = cred.empty() ? skeptical(parsed.framework, *id, kind, options)
                                          : credulous(parsed.framework, *id, kind, options);
            out << (yes ? "YES" : "NO") << '\n';
            return exit_ok;
        }

        if (emit->parsed()) {
            if (encoding.empty() && !facts) {
                err << "error: emit needs --encoding NAME and/or --facts\n";
                return exit_usage;
            }
            if (!encoding.empty()) {
                const auto name = encodings::parse_encoding(encoding);
                if (!name) {
                    err << "error: unknown encoding '" << encoding << "'\n";
                    return exit_usage;
                }
                out << encodings::emit_encoding(*name);
            }
            if (facts) out << encodings::emit_apx_facts(load(input, in, err).framework);
            return exit_ok;
        }

        if (check->parsed()) {
            const auto kinds = kinds_requested();
            if (kinds.empty()) {
                err << "error: check needs --sem KIND or --all\n";
                return exit_usage;
            }
            const auto solver = encodings::solver_from_environment();
            SearchOptions options;
            options.node_budget = search.budget;
            CheckTotals totals;
            if (gens.empty()) {
                const auto parsed = load(input, in, err);
                for (auto kind : kinds)
                    check_one(input.path, parsed.framework, kind, cap, options, solver, true, out, totals);
            } else {
                for (const auto& g : gens) {
                    bench::GeneratorSpec spec = bench::parse_generator_spec(g);
                    const std::uint64_t base = spec.seed;
                    for (std::size_t i = 0; i < count; ++i) {
                        spec.seed = base + i;
                        const auto af = bench::generate(spec);
                        for (auto kind : kinds)
                            check_one(bench::to_string(spec), af, kind, cap, options, solver, true, out, totals);
                    }
                }
            }
            if (!solver) err << "note: AFSOLVE_SOLVER_CMD not set, ASP differential checks SKIPPED\n";
            if (totals.failures) {
                out << "FAIL " << totals.failures << " of " << totals.runs << '\n';
                return exit_mismatch;
            }
            out << "PASS " << totals.runs << '\n';
            return exit_ok;
        }

        if (bench->parsed()) {
            const auto kinds = kinds_requested();
            if (kinds.empty()) {
                err << "error: bench needs --sem KIND or --all\n";
                return exit_usage;
            }
            std::vector<bench::BenchInstance> instances;
            for (const auto& path : bench_inputs) {
                InputFlags f = input;
                f.path = path;
                instances.push_back({path, load(f, in, err).framework});
            }
            for (const auto& g : gens) {
                bench::GeneratorSpec spec = bench::parse_generator_spec(g);
                const std::uint64_t base = spec.seed;
                for (std::size_t i = 0; i < count; ++i) {
                    spec.seed = base + i;
                    instances.push_back({bench::to_string(spec), bench::generate(spec)});
                }
            }
            bench::SuiteOptions options;
            options.timeout_ms = search.timeout_ms;
            options.workers = workers;
            options.node_budget = search.budget;
            const auto result = bench::run_suite(instances, kinds, options, out_path);
            out << bench::summary_to_text(result.summary);
            return exit_ok;
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse_error;
    } catch (const FrameworkError& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse_error;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << " (answer unknown)\n";
        return exit_budget;
    } catch (const SearchCancelled&) {
        err << "error: timeout\n";
        return exit_timeout;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const OracleCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return exit_cap;
    } catch (const SolverError& e) {
        err << "error: " << e.what() << '\n';
        return exit_solver;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace afsolve::cli
