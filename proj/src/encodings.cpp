#include "afsolve/encodings.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "afsolve/error.hpp"

namespace afsolve::encodings {

namespace {

// Rules, one per line. Canonical spacing: a single space after the
// comma between body literals and around ":-", none inside argument lists.
constexpr std::string_view kConflictFree =
    "in(X) :- arg(X), not out(X).\n"
    "out(X) :- arg(X), not in(X).\n"
    ":- att(X,Y), in(X), in(Y).\n";

constexpr std::string_view kDefense =
    "defeated(X) :- in(Y), att(Y,X).\n"
    "undefended(X) :- att(Y,X), not defeated(Y).\n"
    ":- in(X), undefended(X).\n";

constexpr std::string_view kRange =
    "range(X) :- in(X).\n"
    "range(Y) :- in(X), att(X,Y).\n"
    "out_of_range(X) :- not range(X), arg(X).\n"
    "unstable :- out_of_range(X), arg(X).\n";

constexpr std::string_view kSatPref2 =
    "nontrivial :- out(X).\n"
    "witness(X):out(X) :- nontrivial.\n"
    "spoil | witness(Z):att(Z,Y) :- witness(X), att(Y,X).\n"
    "spoil :- witness(X), witness(Y), att(X,Y).\n"
    "spoil :- in(X), witness(Y), att(X,Y).\n"
    "witness(X) :- spoil, arg(X).\n"
    ":- not spoil, nontrivial.\n";

constexpr std::string_view kAdmissibleCover = "spoil | witness(Z):att(Z,Y) :- witness(X), att(Y,X), unstable.\n";

constexpr std::string_view kSatSemi2 =
    "larger_range(X):out_of_range(X) :- unstable.\n"
    "larger_range(X) :- range(X), unstable.\n"
    "witness(X) | witness(Z):att(Z,X) :- larger_range(X), unstable.\n"
    "spoil :- witness(X), witness(Y), att(X,Y), unstable.\n"
    "spoil | witness(Z):att(Z,Y) :- witness(X), att(Y,X), unstable.\n"
    "witness(X) :- spoil, arg(X), unstable.\n"
    "larger_range(X) :- spoil, arg(X), unstable.\n"
    ":- not spoil, unstable.\n";

constexpr std::array<std::pair<EncodingName, std::string_view>, 9> kNames = {{
    {EncodingName::cf, "cf"},
    {EncodingName::def, "def"},
    {EncodingName::adm, "adm"},
    {EncodingName::range, "range"},
    {EncodingName::satpref2, "satpref2"},
    {EncodingName::satsemi2, "satsemi2"},
    {EncodingName::pref2, "pref2"},
    {EncodingName::semi2, "semi2"},
    {EncodingName::stage2, "stage2"},
}};

std::string without_rule(std::string_view text, std::string_view rule) {
    std::string out(text);
    const auto pos = out.find(rule);
    out.erase(pos, rule.size());
    return out;
}

bool is_ident_start(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Length of a double-quoted string starting at text[0], or 0 if malformed.
std::size_t quoted_length(std::string_view text) {
    if (text.empty() || text[0] != '"') return 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (text[i] == '\n') return 0;
        if (text[i] == '\\') {
            ++i;
            continue;
        }
        if (text[i] == '"') return i + 1;
    }
    return 0;
}

// Minimal ground-term reader: constants, integers, strings, f(t,...), tuples.
class TermReader {
public:
    explicit TermReader(std::string_view text) : text_(text) {}

    bool atom(std::string& predicate, std::vector<std::string>& args) {
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        if (pos_ >= text_.size() || !(is_ident_start(text_[pos_]) || text_[pos_] == '_')) return false;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        predicate = std::string(text_.substr(start, pos_ - start));
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            if (!term_list(args)) return false;
            if (pos_ >= text_.size() || text_[pos_] != ')') return false;
            ++pos_;
        }
        return pos_ == text_.size();
    }

private:
    bool term_list(std::vector<std::string>& out) {
        while (true) {
            const std::size_t start = pos_;
            if (!term()) return false;
            out.emplace_back(text_.substr(start, pos_ - start));
            if (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                continue;
            }
            return true;
        }
    }

    bool term() {
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        if (c == '"') {
            const std::size_t len = quoted_length(text_.substr(pos_));
            if (len == 0) return false;
            pos_ += len;
            return true;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            if (c == '-') ++pos_;
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return pos_ > start;
        }
        if (c == '(') {
            ++pos_;
            std::vector<std::string> ignored;
            if (pos_ < text_.size() && text_[pos_] == ')') {
                ++pos_;
                return true;
            }
            if (!term_list(ignored) || pos_ >= text_.size() || text_[pos_] != ')') return false;
            ++pos_;
            return true;
        }
        if (is_ident_start(c) || c == '_') {
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '(') {
                ++pos_;
                std::vector<std::string> ignored;
                if (!term_list(ignored) || pos_ >= text_.size() || text_[pos_] != ')') return false;
                ++pos_;
            }
            return true;
        }
        return false;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string_view to_string(EncodingName name) noexcept {
    for (const auto& [n, s] : kNames)
        if (n == name) return s;
    return "?";
}

std::optional<EncodingName> parse_encoding(std::string_view text) noexcept {
    for (const auto& [n, s] : kNames)
        if (s == text) return n;
    return std::nullopt;
}

std::string_view admissible_cover_rule() noexcept {
    return kAdmissibleCover.substr(0, kAdmissibleCover.size() - 1);
}

std::string emit_encoding(EncodingName name) {
    switch (name) {
        case EncodingName::cf: return std::string(kConflictFree);
        case EncodingName::def: return std::string(kDefense);
        case EncodingName::adm: return emit_encoding(EncodingName::cf) + emit_encoding(EncodingName::def);
        case EncodingName::range: return std::string(kRange);
        case EncodingName::satpref2: return std::string(kSatPref2);
        case EncodingName::satsemi2: return std::string(kSatSemi2);
        case EncodingName::pref2: return emit_encoding(EncodingName::adm) + emit_encoding(EncodingName::satpref2);
        case EncodingName::semi2:
            return emit_encoding(EncodingName::adm) + emit_encoding(EncodingName::range) +
                   emit_encoding(EncodingName::satsemi2);
        case EncodingName::stage2:
            return emit_encoding(EncodingName::cf) + emit_encoding(EncodingName::range) +
                   without_rule(kSatSemi2, kAdmissibleCover);
    }
    return {};
}

std::optional<EncodingName> encoding_for(SemanticsKind kind) noexcept {
    switch (kind) {
        case SemanticsKind::prf: return EncodingName::pref2;
        case SemanticsKind::sem: return EncodingName::semi2;
        case SemanticsKind::stg: return EncodingName::stage2;
        default: return std::nullopt;
    }
}

bool is_asp_constant(std::string_view name) noexcept {
    if (name.empty()) return false;
    if (name[0] == '"') return quoted_length(name) == name.size();
    if (!is_ident_start(name[0])) return false;
    return std::all_of(name.begin(), name.end(), is_ident_char);
}

std::string emit_apx_facts(const ArgumentationFramework& af) {
    std::string out;
    for (const auto& n : af.names()) {
        if (!is_asp_constant(n)) throw FrameworkError("argument name '" + n + "' is not a valid ASP constant");
        out += "arg(" + n + ").\n";
    }
    for (const auto& [from, to] : af.attacks()) out += "att(" + af.name(from) + "," + af.name(to) + ").\n";
    return out;
}

ProjectedAnswerSet project_answer_set(const std::vector<std::string>& atoms) {
    ProjectedAnswerSet out;
    out.raw_atoms = atoms;
    for (const auto& atom : atoms) {
        std::string predicate;
        std::vector<std::string> args;
        if (!TermReader(atom).atom(predicate, args)) throw ParseError(0, "malformed atom '" + atom + "'");
        if (predicate == "in" && args.size() == 1) out.in_atoms.push_back(args.front());
    }
    std::sort(out.in_atoms.begin(), out.in_atoms.end());
    out.in_atoms.erase(std::unique(out.in_atoms.begin(), out.in_atoms.end()), out.in_atoms.end());
    return out;
}

std::vector<std::string> split_atoms(std::string_view line) {
    std::vector<std::string> out;
    std::string current;
    int depth = 0;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            current += c;
            if (c == '\\' && i + 1 < line.size()) current += line[++i];
            else if (c == '"') quoted = false;
            continue;
        }
        if (c == '"') quoted = true;
        else if (c == '(') ++depth;
        else if (c == ')') --depth;
        if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
            if (!current.empty()) out.push_back(std::move(current));
            current.clear();
            continue;
        }
        current += c;
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

}  // namespace afsolve::encodings
