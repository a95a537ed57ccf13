#include "afsolve/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "afsolve/error.hpp"

namespace afsolve::io {

namespace {

struct Declared {
    std::vector<std::string> names;
    std::unordered_set<std::string> seen;
};

struct PendingAttack {
    std::string from;
    std::string to;
    std::size_t line;
};

// Shared tail of both parsers: endpoint checks with line numbers, lenient auto-declaration.
ParsedFramework assemble(Declared declared, const std::vector<PendingAttack>& attacks, EndpointPolicy policy) {
    ParsedFramework out;
    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(attacks.size());
    for (const auto& a : attacks) {
        for (const std::string* end : {&a.from, &a.to}) {
            if (declared.seen.contains(*end)) continue;
            if (policy == EndpointPolicy::strict)
                throw ParseError(a.line, "attack endpoint '" + *end + "' is not a declared argument");
            declared.seen.insert(*end);
            declared.names.push_back(*end);
            out.diagnostics.lenient_declarations.push_back(*end);
            out.diagnostics.warnings.emplace_back(a.line, "argument '" + *end + "' auto-declared");
        }
        pairs.emplace_back(a.from, a.to);
    }
    out.framework = ArgumentationFramework::build(declared.names, pairs, EndpointPolicy::strict);
    return out;
}

class ApxReader {
public:
    explicit ApxReader(std::string_view text) : text_(text) {}

    ParsedFramework read(EndpointPolicy policy) {
        Declared declared;
        std::vector<PendingAttack> attacks;
        while (true) {
            skip_space();
            if (pos_ == text_.size()) break;
            const std::size_t line = line_;
            const std::string pred = predicate();
            if (pred == "arg") {
                expect('(');
                std::string name = constant();
                expect(')');
                expect('.');
                if (!declared.seen.insert(name).second) throw ParseError(line, "duplicate argument '" + name + "'");
                declared.names.push_back(std::move(name));
            } else if (pred == "att") {
                expect('(');
                std::string from = constant();
                expect(',');
                std::string to = constant();
                expect(')');
                expect('.');
                attacks.push_back({std::move(from), std::move(to), line});
            } else {
                throw ParseError(line, "unknown predicate '" + pred + "', expected arg or att");
            }
        }
        return assemble(std::move(declared), attacks, policy);
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& what) const {
        if (pos_ >= text_.size()) throw ParseError(line_, what + ", found end of input");
        throw ParseError(line_, what + ", found '" + std::string(1, text_[pos_]) + "'");
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    std::string predicate() {
        if (!std::islower(static_cast<unsigned char>(text_[pos_]))) fail("expected a fact");
        const std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string constant() {
        skip_space();
        if (pos_ >= text_.size()) fail("expected an argument name");
        const std::size_t start = pos_;
        if (text_[pos_] == '"') {
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\n') throw ParseError(line_, "unterminated string");
                if (text_[pos_] == '\\') ++pos_;
                ++pos_;
            }
            if (pos_ >= text_.size()) throw ParseError(line_, "unterminated string");
            ++pos_;
        } else if (std::islower(static_cast<unsigned char>(text_[pos_]))) {
            while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        } else {
            fail("expected an argument name");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

}  // namespace

ParsedFramework parse_apx(std::string_view text, EndpointPolicy policy) {
    return ApxReader(text).read(policy);
}

ParsedFramework parse_tgf(std::string_view text, EndpointPolicy policy) {
    Declared declared;
    std::vector<PendingAttack> attacks;
    bool in_edges = false;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (!in_edges) {
            if (tokens[0] == "#") {
                in_edges = true;
                continue;
            }
            std::string id(tokens[0]);
            if (!declared.seen.insert(id).second) throw ParseError(line_no, "duplicate node '" + id + "'");
            declared.names.push_back(std::move(id));
        } else {
            if (tokens.size() < 2) throw ParseError(line_no, "edge line needs a source and a target");
            attacks.push_back({std::string(tokens[0]), std::string(tokens[1]), line_no});
        }
    }
    if (!in_edges) throw ParseError(line_no + 1, "missing '#' separator between nodes and edges");
    return assemble(std::move(declared), attacks, policy);
}

ParsedFramework parse(std::string_view text, InputFormat format, EndpointPolicy policy) {
    return format == InputFormat::tgf ? parse_tgf(text, policy) : parse_apx(text, policy);
}

std::optional<InputFormat> parse_format(std::string_view name) noexcept {
    if (name == "apx") return InputFormat::apx;
    if (name == "tgf") return InputFormat::tgf;
    return std::nullopt;
}

InputFormat format_for_path(const std::filesystem::path& path) {
    return path.extension() == ".tgf" ? InputFormat::tgf : InputFormat::apx;
}

std::string format_set(const ArgumentationFramework& af, const ArgumentSet& s) {
    std::string out = "[";
    bool first = true;
    s.for_each([&](ArgumentId id) {
        if (!first) out += ',';
        out += af.name(id);
        first = false;
    });
    out += ']';
    return out;
}

std::string format_extensions(const ArgumentationFramework& af, const ExtensionSet& exts, OutputStyle style) {
    std::string out;
    if (style == OutputStyle::lines) {
        for (const auto& e : exts) {
            out += format_set(af, e);
            out += '\n';
        }
        return out;
    }
    out = "[";
    for (std::size_t i = 0; i < exts.size(); ++i) {
        if (i) out += ',';
        out += format_set(af, exts.extensions[i]);
    }
    out += ']';
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("error reading '" + path.string() + "'");
    return std::move(ss).str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("error writing '" + path.string() + "'");
}

}  // namespace afsolve::io
