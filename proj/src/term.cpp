#include "sogu/term.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sogu {

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    std::set<std::string> seen;
    for (const auto& sym : symbols_) {
        if (sym.name.empty())
            throw std::invalid_argument("signature symbol with empty name");
        if (sym.arity < 0)
            throw std::invalid_argument("signature symbol with negative arity: " + sym.name);
        if (!seen.insert(sym.name).second)
            throw std::invalid_argument("duplicate signature symbol: " + sym.name);
    }
}

const Symbol* Signature::find(const std::string& name) const {
    for (const auto& sym : symbols_)
        if (sym.name == name) return &sym;
    return nullptr;
}

std::vector<Symbol> Signature::base_symbols() const {
    std::vector<Symbol> out;
    for (const auto& sym : symbols_)
        if (sym.arity <= 1) out.push_back(sym);
    return out;
}

Term Term::app(std::string name, std::vector<Term> args) {
    if (name.empty()) throw std::invalid_argument("term with empty symbol name");
    return Term(Kind::App, std::move(name), 0, std::move(args));
}

Term Term::app(const Symbol& sym, std::vector<Term> args) {
    if (static_cast<int>(args.size()) != sym.arity)
        throw std::invalid_argument("argument count does not match arity of " + sym.name);
    return app(sym.name, std::move(args));
}

Term Term::fvar(std::string name, std::vector<Term> args) {
    if (name.empty()) throw std::invalid_argument("function variable with empty name");
    if (args.empty())
        throw std::invalid_argument("function variable applied to zero arguments");
    return Term(Kind::FVar, std::move(name), 0, std::move(args));
}

Term Term::var(int index) {
    if (index < 1) throw std::invalid_argument("bound variable index must be >= 1");
    return Term(Kind::Var, {}, index, {});
}

bool Term::is_ground() const {
    if (kind_ != Kind::App) return false;
    return std::all_of(args_.begin(), args_.end(),
                       [](const Term& a) { return a.is_ground(); });
}

bool Term::is_first_order() const {
    if (kind_ == Kind::FVar) return false;
    return std::all_of(args_.begin(), args_.end(),
                       [](const Term& a) { return a.is_first_order(); });
}

std::size_t Term::size() const {
    std::size_t n = 1;
    for (const auto& a : args_) n += a.size();
    return n;
}

bool Term::operator==(const Term& other) const {
    if (kind_ != other.kind_ || index_ != other.index_ || name_ != other.name_ ||
        args_.size() != other.args_.size())
        return false;
    for (std::size_t i = 0; i < args_.size(); ++i)
        if (!(args_[i] == other.args_[i])) return false;
    return true;
}

bool Term::operator<(const Term& other) const {
    if (kind_ != other.kind_) return kind_ < other.kind_;
    if (index_ != other.index_) return index_ < other.index_;
    if (name_ != other.name_) return name_ < other.name_;
    return std::lexicographical_compare(args_.begin(), args_.end(),
                                        other.args_.begin(), other.args_.end());
}

std::string position_to_string(const Position& p) {
    if (p.empty()) return "e";
    std::ostringstream out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out << '.';
        out << p[i];
    }
    return out.str();
}

namespace {

void collect_positions(const Term& t, Position& prefix, std::vector<Position>& out) {
    out.push_back(prefix);
    for (std::size_t i = 0; i < t.args().size(); ++i) {
        prefix.push_back(static_cast<int>(i + 1));
        collect_positions(t.args()[i], prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Position> positions(const Term& t) {
    std::vector<Position> out;
    Position prefix;
    collect_positions(t, prefix, out);
    return out;
}

const Term& subterm_at(const Term& t, const Position& p) {
    const Term* cur = &t;
    for (int step : p) {
        if (step < 1 || static_cast<std::size_t>(step) > cur->args().size())
            throw std::out_of_range("invalid position " + position_to_string(p));
        cur = &cur->args()[step - 1];
    }
    return *cur;
}

std::size_t occ_term(const Term& s, const Term& t) {
    std::size_t n = (t == s) ? 1 : 0;
    for (const auto& a : t.args()) n += occ_term(s, a);
    return n;
}

namespace {

template <typename Pred>
std::size_t count_heads(const Term& t, const Pred& pred) {
    std::size_t n = pred(t) ? 1 : 0;
    for (const auto& a : t.args()) n += count_heads(a, pred);
    return n;
}

}  // namespace

std::size_t occ_symbol(const std::string& name, const Term& t) {
    return count_heads(t, [&](const Term& u) {
        return u.kind() == Term::Kind::App && u.name() == name;
    });
}

std::size_t occ_fvar(const std::string& name, const Term& t) {
    return count_heads(t, [&](const Term& u) {
        return u.kind() == Term::Kind::FVar && u.name() == name;
    });
}

std::size_t occ_var(int index, const Term& t) {
    return count_heads(t, [&](const Term& u) {
        return u.kind() == Term::Kind::Var && u.var_index() == index;
    });
}

std::size_t depth(const Term& t) {
    std::size_t d = 0;
    for (const auto& a : t.args()) d = std::max(d, depth(a));
    return d + 1;
}

namespace {

void check_body(const Term& body, int arity) {
    if (body.kind() == Term::Kind::FVar)
        throw std::invalid_argument("binding body must be first-order");
    if (body.kind() == Term::Kind::Var && body.var_index() > arity)
        throw std::invalid_argument("bound variable index exceeds binding arity");
    for (const auto& a : body.args()) check_body(a, arity);
}

}  // namespace

Binding::Binding(FunctionVar fvar, Term body)
    : fvar_(std::move(fvar)), body_(std::move(body)) {
    if (fvar_.arity < 1)
        throw std::invalid_argument("function variable arity must be >= 1");
    check_body(body_, fvar_.arity);
}

std::vector<std::size_t> Binding::var_multiplicities() const {
    std::vector<std::size_t> h(static_cast<std::size_t>(fvar_.arity));
    for (int i = 1; i <= fvar_.arity; ++i)
        h[static_cast<std::size_t>(i - 1)] = occ_var(i, body_);
    return h;
}

namespace {

Term substitute_vars(const Term& body, const std::vector<Term>& values) {
    switch (body.kind()) {
        case Term::Kind::Var:
            return values[static_cast<std::size_t>(body.var_index() - 1)];
        case Term::Kind::App: {
            std::vector<Term> args;
            args.reserve(body.args().size());
            for (const auto& a : body.args()) args.push_back(substitute_vars(a, values));
            return Term::app(body.name(), std::move(args));
        }
        case Term::Kind::FVar:
            throw std::invalid_argument("binding body must be first-order");
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Term apply(const Term& t, const Binding& sigma) {
    switch (t.kind()) {
        case Term::Kind::Var:
            return t;
        case Term::Kind::App: {
            std::vector<Term> args;
            args.reserve(t.args().size());
            for (const auto& a : t.args()) args.push_back(apply(a, sigma));
            return Term::app(t.name(), std::move(args));
        }
        case Term::Kind::FVar: {
            if (t.name() != sigma.fvar().name)
                throw std::invalid_argument("foreign function variable " + t.name());
            if (static_cast<int>(t.args().size()) != sigma.fvar().arity)
                throw std::invalid_argument("arity mismatch applying " + t.name());
            std::vector<Term> args;
            args.reserve(t.args().size());
            for (const auto& a : t.args()) args.push_back(apply(a, sigma));
            return substitute_vars(sigma.body(), args);
        }
    }
    throw std::logic_error("unreachable");
}

Problem::Problem(Signature signature, FunctionVar fvar, std::vector<Equation> equations)
    : signature_(std::move(signature)), fvar_(std::move(fvar)) {
    for (auto& eq : equations) {
        bool dup = std::any_of(equations_.begin(), equations_.end(),
                               [&](const Equation& e) { return e == eq; });
        if (dup)
            ++duplicates_dropped_;
        else
            equations_.push_back(std::move(eq));
    }
}

bool is_unifier(const Problem& problem, const Binding& sigma) {
    if (sigma.fvar().name != problem.fvar().name ||
        sigma.fvar().arity != problem.fvar().arity)
        throw std::invalid_argument("binding does not match the problem's function variable");
    for (const auto& eq : problem.equations())
        if (!(apply(eq.lhs, sigma) == apply(eq.rhs, sigma))) return false;
    return true;
}

namespace {

void check_side(const Term& t, const Problem& p, const char* side, std::size_t eq_index,
                std::vector<std::string>& out) {
    std::ostringstream where;
    where << "equation " << (eq_index + 1) << ", " << side << ": ";
    switch (t.kind()) {
        case Term::Kind::Var:
            out.push_back(where.str() + "bound variable outside a binding body");
            break;
        case Term::Kind::FVar:
            if (t.name() != p.fvar().name)
                out.push_back(where.str() + "foreign function variable " + t.name());
            else if (static_cast<int>(t.args().size()) != p.fvar().arity)
                out.push_back(where.str() + "function variable " + t.name() +
                              " applied to " + std::to_string(t.args().size()) +
                              " arguments, declared arity " + std::to_string(p.fvar().arity));
            break;
        case Term::Kind::App: {
            const Symbol* sym = p.signature().find(t.name());
            if (!sym)
                out.push_back(where.str() + "unknown symbol " + t.name());
            else if (static_cast<int>(t.args().size()) != sym->arity)
                out.push_back(where.str() + "symbol " + t.name() + " applied to " +
                              std::to_string(t.args().size()) + " arguments, declared arity " +
                              std::to_string(sym->arity));
            break;
        }
    }
    for (const auto& a : t.args()) check_side(a, p, side, eq_index, out);
}

}  // namespace

std::vector<std::string> validate_problem(const Problem& problem) {
    std::vector<std::string> out;
    bool has_function = false, has_constant = false;
    for (const auto& sym : problem.signature().symbols()) {
        if (sym.arity >= 1) has_function = true;
        if (sym.arity == 0) has_constant = true;
    }
    if (!has_function)
        out.push_back("signature must contain a symbol of arity >= 1");
    if (!has_constant)
        out.push_back("signature must contain a constant");
    if (problem.fvar().arity < 1)
        out.push_back("function variable arity must be >= 1");
    if (problem.signature().contains(problem.fvar().name))
        out.push_back("function variable name collides with signature symbol " +
                      problem.fvar().name);
    for (std::size_t i = 0; i < problem.equations().size(); ++i) {
        const auto& eq = problem.equations()[i];
        check_side(eq.lhs, problem, "lhs", i, out);
        check_side(eq.rhs, problem, "rhs", i, out);
        if (occ_fvar(problem.fvar().name, eq.lhs) == 0)
            out.push_back("equation " + std::to_string(i + 1) +
                          ": function variable must occur on the left-hand side");
        if (occ_fvar(problem.fvar().name, eq.rhs) == 0)
            out.push_back("equation " + std::to_string(i + 1) +
                          ": function variable must occur on the right-hand side");
    }
    return out;
}

}  // namespace sogu
