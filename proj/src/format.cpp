#include "sogu/format.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <sstream>

namespace sogu {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool is_blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

// Cursor over a single already-comment-stripped line.
struct LineScanner {
    const std::string& text;
    int line_no;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_no, static_cast<int>(pos) + 1);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    void expect(char c, const std::string& what) {
        if (peek() != c) fail("expected " + what);
        ++pos;
    }

    std::string ident() {
        skip_ws();
        if (pos >= text.size() || !is_ident_start(text[pos])) fail("expected a name");
        std::size_t start = pos;
        while (pos < text.size() && is_ident_char(text[pos])) ++pos;
        return text.substr(start, pos - start);
    }

    int nat() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a number");
        long long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1000000) fail("number out of range");
            ++pos;
        }
        return static_cast<int>(value);
    }
};

// How a bare name in a term resolves; parameters shadow signature symbols.
struct NameResolver {
    const Signature* sig = nullptr;
    const FunctionVar* fvar = nullptr;              // applications allowed iff set
    const std::vector<std::string>* params = nullptr;
    const std::string* reject_fvar = nullptr;       // name that may not occur

    std::optional<int> param_index(const std::string& name) const {
        if (!params) return std::nullopt;
        for (std::size_t i = 0; i < params->size(); ++i)
            if ((*params)[i] == name) return static_cast<int>(i) + 1;
        return std::nullopt;
    }
};

Term parse_term(LineScanner& s, const NameResolver& names) {
    std::size_t name_pos = s.pos;
    std::string name = s.ident();
    std::vector<Term> args;
    bool has_args = false;
    if (s.peek() == '(') {
        has_args = true;
        ++s.pos;
        args.push_back(parse_term(s, names));
        while (s.peek() == ',') {
            ++s.pos;
            args.push_back(parse_term(s, names));
        }
        s.expect(')', "')'");
    }

    auto fail_at = [&](const std::string& message) {
        throw ParseError(message, s.line_no, static_cast<int>(name_pos) + 1);
    };

    if (auto idx = names.param_index(name)) {
        if (has_args) fail_at("parameter '" + name + "' cannot take arguments");
        return Term::var(*idx);
    }
    if (names.fvar && name == names.fvar->name) {
        if (static_cast<int>(args.size()) != names.fvar->arity)
            fail_at("function variable " + name + " expects " +
                    std::to_string(names.fvar->arity) + " argument(s), got " +
                    std::to_string(args.size()));
        return Term::fvar(name, std::move(args));
    }
    if (names.reject_fvar && name == *names.reject_fvar)
        fail_at("function variable cannot occur inside a binding body");
    if (const Symbol* sym = names.sig->find(name)) {
        if (static_cast<int>(args.size()) != sym->arity)
            fail_at("symbol " + name + "/" + std::to_string(sym->arity) + " applied to " +
                    std::to_string(args.size()) + " argument(s)");
        return Term::app(name, std::move(args));
    }
    throw ParseError(names.params ? "unknown variable or symbol '" + name + "'"
                                  : "unknown symbol '" + name + "'",
                     s.line_no, static_cast<int>(name_pos) + 1);
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int col)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                         ": " + message),
      line_(line),
      col_(col) {}

ParsedProblem parse_problem(const std::string& text) {
    std::vector<Symbol> symbols;
    std::optional<FunctionVar> fvar;
    std::vector<Equation> equations;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip_comment(raw);
        if (is_blank(line)) continue;
        LineScanner s{line, line_no};
        std::string keyword = s.ident();
        if (keyword == "sig") {
            do {
                std::string name = s.ident();
                s.expect('/', "'/'");
                int arity = s.nat();
                for (const Symbol& prev : symbols)
                    if (prev.name == name) s.fail("duplicate symbol '" + name + "'");
                symbols.push_back({name, arity});
            } while (!s.at_end());
        } else if (keyword == "fvar") {
            if (fvar) s.fail("duplicate fvar declaration");
            std::string name = s.ident();
            s.expect('/', "'/'");
            int arity = s.nat();
            fvar = FunctionVar{name, arity};
            if (!s.at_end()) s.fail("trailing input after fvar declaration");
        } else if (keyword == "eq") {
            if (!fvar) s.fail("eq before the fvar declaration");
            Signature sig(symbols);  // rechecks name uniqueness
            NameResolver names{&sig, &*fvar, nullptr};
            Term lhs = parse_term(s, names);
            s.expect('=', "'='");
            Term rhs = parse_term(s, names);
            if (!s.at_end()) s.fail("trailing input after equation");
            equations.push_back({std::move(lhs), std::move(rhs)});
        } else {
            s.pos = 0;
            s.fail("unknown directive '" + keyword + "'");
        }
    }
    if (!fvar) throw ParseError("missing fvar declaration", line_no, 1);

    ParsedProblem out{Problem(Signature(symbols), *fvar, std::move(equations)), {}};
    if (std::size_t d = out.problem.duplicates_dropped())
        out.warnings.push_back(std::to_string(d) + " duplicate equation(s) dropped");
    return out;
}

std::string print_problem(const Problem& p) {
    std::ostringstream out;
    out << "sig";
    for (const Symbol& sym : p.signature().symbols()) out << ' ' << sym.name << '/' << sym.arity;
    out << '\n';
    out << "fvar " << p.fvar().name << '/' << p.fvar().arity << '\n';
    for (const Equation& eq : p.equations())
        out << "eq " << print_term(eq.lhs) << " = " << print_term(eq.rhs) << '\n';
    return out.str();
}

Binding parse_binding(const std::string& text, const Signature& sig,
                      const FunctionVar& fvar) {
    std::istringstream in(text);
    std::string raw, line;
    int line_no = 0, content_line = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string stripped = strip_comment(raw);
        if (is_blank(stripped)) continue;
        if (content_line) throw ParseError("expected a single sub line", line_no, 1);
        line = stripped;
        content_line = line_no;
    }
    if (!content_line) throw ParseError("missing sub line", std::max(line_no, 1), 1);

    LineScanner s{line, content_line};
    if (s.ident() != "sub") {
        s.pos = 0;
        s.fail("expected 'sub'");
    }
    std::string name = s.ident();
    if (name != fvar.name) s.fail("expected the function variable '" + fvar.name + "'");
    s.expect('(', "'('");
    std::vector<std::string> params;
    params.push_back(s.ident());
    while (s.peek() == ',') {
        ++s.pos;
        params.push_back(s.ident());
    }
    s.expect(')', "')'");
    if (static_cast<int>(params.size()) != fvar.arity)
        s.fail("expected " + std::to_string(fvar.arity) + " parameter(s), got " +
               std::to_string(params.size()));
    for (std::size_t i = 0; i < params.size(); ++i)
        for (std::size_t j = i + 1; j < params.size(); ++j)
            if (params[i] == params[j]) s.fail("duplicate parameter '" + params[i] + "'");
    s.expect('=', "'='");

    NameResolver names{&sig, nullptr, &params, &fvar.name};
    Term body = parse_term(s, names);
    if (!s.at_end()) s.fail("trailing input after body");
    return Binding(fvar, std::move(body));
}

std::string print_binding(const Binding& b, const Signature& sig) {
    std::vector<std::string> params = canonical_params(sig, b.fvar().arity);
    std::ostringstream out;
    out << "sub " << b.fvar().name << '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out << ',';
        out << params[i];
    }
    out << ") = " << print_term(b.body(), params);
    return out.str();
}

std::vector<std::string> canonical_params(const Signature& sig, int nvars) {
    std::vector<std::string> params;
    for (int i = 1; i <= nvars; ++i) {
        std::string name = nvars == 1 ? "x" : "x" + std::to_string(i);
        while (sig.contains(name)) name += '_';
        params.push_back(std::move(name));
    }
    return params;
}

std::string print_term(const Term& t, const std::vector<std::string>& params) {
    switch (t.kind()) {
        case Term::Kind::Var: {
            std::size_t i = static_cast<std::size_t>(t.var_index());
            if (i == 0 || i > params.size())
                throw std::invalid_argument("no name for bound variable " +
                                            std::to_string(t.var_index()));
            return params[i - 1];
        }
        case Term::Kind::App:
        case Term::Kind::FVar: {
            std::string out = t.name();
            if (!t.args().empty()) {
                out += '(';
                for (std::size_t i = 0; i < t.args().size(); ++i) {
                    if (i) out += ',';
                    out += print_term(t.args()[i], params);
                }
                out += ')';
            }
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace sogu
