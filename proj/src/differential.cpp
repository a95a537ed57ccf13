#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "afsolve/encodings.hpp"
#include "afsolve/error.hpp"
#include "afsolve/io.hpp"

namespace afsolve::encodings {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') out += "'\\''";
        else out += c;
    }
    return out + "'";
}

struct Captured {
    std::string output;
    int status = -1;
};

Captured run_command(const std::string& command) {
    Captured result;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) throw SolverError("cannot launch '" + command + "'");
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
    const int raw = ::pclose(pipe);
    result.status = (raw != -1 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
    return result;
}

// Temporary file removed on scope exit.
class TempFile {
public:
    explicit TempFile(std::string_view contents) {
        std::string pattern = (std::filesystem::temp_directory_path() / "afsolve-XXXXXX").string();
        const int fd = ::mkstemp(pattern.data());
        if (fd < 0) throw IoError("cannot create temporary file");
        ::close(fd);
        path_ = pattern;
        io::write_file(path_, contents);
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
};

std::string expand(const std::string& tmpl, const std::string& files) {
    std::string out = tmpl;
    bool has_files = false;
    for (std::size_t pos; (pos = out.find("{files}")) != std::string::npos;) {
        out.replace(pos, 7, files);
        has_files = true;
    }
    for (std::size_t pos; (pos = out.find("{all}")) != std::string::npos;) out.replace(pos, 5, "0");
    if (!has_files) out += " " + files;
    return out;
}

}  // namespace

std::vector<std::vector<std::string>> parse_solver_output(std::string_view output) {
    std::vector<std::vector<std::string>> models;
    bool expect_model = false;
    bool status_seen = false;
    std::size_t start = 0;
    while (start <= output.size()) {
        std::size_t end = output.find('\n', start);
        if (end == std::string_view::npos) end = output.size();
        const std::string line = trim(output.substr(start, end - start));
        start = end + 1;
        if (expect_model) {
            models.push_back(split_atoms(line));
            expect_model = false;
            continue;
        }
        if (line.starts_with("Answer:")) expect_model = true;
        else if (line == "SATISFIABLE" || line == "UNSATISFIABLE" || line == "OPTIMUM FOUND") status_seen = true;
        if (end == output.size()) break;
    }
    if (expect_model) models.emplace_back();  // empty model on the last line
    if (!status_seen) throw SolverError("solver output has no SATISFIABLE/UNSATISFIABLE status line");
    return models;
}

std::optional<SolverCommand> solver_from_environment() {
    const char* env = std::getenv("AFSOLVE_SOLVER_CMD");
    if (!env || !*env) return std::nullopt;
    return SolverCommand{env};
}

std::optional<SolverCommand> detect_solver() {
    for (const char* candidate : {"clingo", "python3 -m clingo"}) {
        const Captured probe = run_command(std::string(candidate) + " --version 2>/dev/null");
        if (probe.status == 0 && probe.output.find("clingo") != std::string::npos)
            return SolverCommand{std::string(candidate) + " {all} {files}"};
    }
    return std::nullopt;
}

DifferentialReport differential_check(const ArgumentationFramework& af, SemanticsKind kind,
                                      const std::optional<SolverCommand>& solver, const SearchOptions& options) {
    DifferentialReport report;
    const auto encoding = encoding_for(kind);
    if (!encoding) throw PreconditionError("no encoding for semantics " + std::string(to_string(kind)));
    if (!solver) {
        report.skipped = true;
        report.skip_reason = "no ASP solver configured";
        return report;
    }

    const TempFile program(emit_encoding(*encoding) + emit_apx_facts(af));
    const TempFile errors("");
    const std::string command =
        expand(solver->command_template, shell_quote(program.path().string())) + " 2>" +
        shell_quote(errors.path().string());
    const Captured run = run_command(command);

    std::vector<std::vector<std::string>> models;
    try {
        models = parse_solver_output(run.output);
    } catch (const SolverError& e) {
        std::string detail = io::read_file(errors.path());
        if (detail.size() > 500) detail.resize(500);
        throw SolverError(std::string(e.what()) + " (command '" + command + "', exit status " +
                          std::to_string(run.status) + "): " + detail);
    }

    report.answer_sets = models.size();
    report.projected.fingerprint = af.fingerprint();
    for (const auto& model : models) {
        const ProjectedAnswerSet p = project_answer_set(model);
        ArgumentSet s = af.none();
        for (const auto& name : p.in_atoms) {
            const auto id = af.find(name);
            if (!id) throw SolverError("answer set mentions unknown argument '" + name + "'");
            s.insert(*id);
        }
        report.projected.extensions.push_back(std::move(s));
    }
    report.projected.normalize();
    report.native = enumerate(af, kind, options);

    for (const auto& e : report.native)
        if (!report.projected.contains(e)) report.missing.push_back(e);
    for (const auto& e : report.projected)
        if (!report.native.contains(e)) report.unexpected.push_back(e);
    return report;
}

}  // namespace afsolve::encodings
