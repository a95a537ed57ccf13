#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "afsolve/framework.hpp"
#include "afsolve/semantics.hpp"

namespace afsolve::encodings {

// Modules and their compositions:
//   adm    = cf + def
//   pref2  = adm + satpref2
//   semi2  = adm + range + satsemi2
//   stage2 = cf + range + satsemi2 without the admissible-cover rule
enum class EncodingName { cf, def, adm, range, satpref2, satsemi2, pref2, semi2, stage2 };

std::string_view to_string(EncodingName name) noexcept;
std::optional<EncodingName> parse_encoding(std::string_view text) noexcept;

/// Rule text, one rule per line, each line newline-terminated.
std::string emit_encoding(EncodingName name);

/// The rule dropped from satsemi2 to obtain stage2.
std::string_view admissible_cover_rule() noexcept;

/// Encoding whose answer sets correspond to prf / sem / stg.
std::optional<EncodingName> encoding_for(SemanticsKind kind) noexcept;

/// True for names usable as ASP constants: [a-z][A-Za-z0-9_]* or a double-quoted string.
bool is_asp_constant(std::string_view name) noexcept;

/// `arg(x).` lines in argument order, then `att(x,y).` lines ordered by (source, target) id.
/// Throws FrameworkError when a name is not a valid constant.
std::string emit_apx_facts(const ArgumentationFramework& af);

struct ProjectedAnswerSet {
    std::vector<std::string> in_atoms;   // arguments of unary in(.) atoms, sorted, unique
    std::vector<std::string> raw_atoms;  // everything, as given

    friend bool operator==(const ProjectedAnswerSet&, const ProjectedAnswerSet&) = default;
};

/// Keeps the arguments of in(.) atoms. Throws ParseError (line 0) on a malformed atom.
ProjectedAnswerSet project_answer_set(const std::vector<std::string>& atoms);

/// Splits a solver model line into atoms at top-level spaces.
std::vector<std::string> split_atoms(std::string_view line);

/// Models of a solver transcript in the "Answer: N" / atom-line format.
std::vector<std::vector<std::string>> parse_solver_output(std::string_view output);

struct DifferentialReport {
    bool skipped = false;                      // no solver available
    std::string skip_reason;
    std::size_t answer_sets = 0;               // before deduplication
    ExtensionSet native;
    ExtensionSet projected;                    // deduplicated projections
    std::vector<ArgumentSet> missing;          // native but not projected
    std::vector<ArgumentSet> unexpected;       // projected but not native

    bool ok() const noexcept { return skipped || (missing.empty() && unexpected.empty()); }
};

/// Command template for an external ASP solver. `{files}` is replaced by the
/// program file path, `{all}` by the "all models" argument (`0`).
struct SolverCommand {
    std::string command_template;
};

/// AFSOLVE_SOLVER_CMD, if set and non-empty.
std::optional<SolverCommand> solver_from_environment();

/// Probes `clingo` and `python3 -m clingo`; returns the first one that runs.
std::optional<SolverCommand> detect_solver();

/// Runs the encoding for `kind` (prf, sem or stg) plus F-hat through the solver,
/// projects and deduplicates the answer sets and compares them with enumerate().
/// Throws SolverError on launch or output-parse failure.
DifferentialReport differential_check(const ArgumentationFramework& af, SemanticsKind kind,
                                      const std::optional<SolverCommand>& solver, const SearchOptions& options = {});

}  // namespace afsolve::encodings
