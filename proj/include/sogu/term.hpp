#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

// Ranked-signature term algebra for second-order ground unification:
// terms over a finite signature plus applications of a single function
// variable, positions, occurrence counting, and substitution application.

namespace sogu {

struct Symbol {
    std::string name;
    int arity = 0;

    friend bool operator==(const Symbol& a, const Symbol& b) {
        return a.name == b.name && a.arity == b.arity;
    }
};

// A finite signature. Symbol names are unique; declaration order is kept
// because printing and enumeration are expected to be deterministic.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<Symbol> symbols);

    const std::vector<Symbol>& symbols() const { return symbols_; }
    const Symbol* find(const std::string& name) const;
    bool contains(const std::string& name) const { return find(name) != nullptr; }

    // Symbols of arity <= 1; the counting calculus is only defined for these.
    std::vector<Symbol> base_symbols() const;

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.symbols_ == b.symbols_;
    }

private:
    std::vector<Symbol> symbols_;
};

// The single function variable of a problem (arity >= 1).
struct FunctionVar {
    std::string name;
    int arity = 1;

    friend bool operator==(const FunctionVar& a, const FunctionVar& b) {
        return a.name == b.name && a.arity == b.arity;
    }
};

// An immutable first-/second-order term. Three node kinds:
//   App   -- application of a signature symbol (constants have no args)
//   FVar  -- application of the function variable, always fully applied
//   Var   -- a bound variable x_i (1-based), legal only inside binding bodies
class Term {
public:
    enum class Kind { App, FVar, Var };

    static Term app(std::string name, std::vector<Term> args = {});
    static Term app(const Symbol& sym, std::vector<Term> args = {});
    static Term fvar(std::string name, std::vector<Term> args);
    static Term var(int index);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    int var_index() const { return index_; }
    const std::vector<Term>& args() const { return args_; }

    bool is_ground() const;       // no FVar and no Var nodes
    bool is_first_order() const;  // no FVar nodes (Var allowed)

    // Total number of nodes; equals the number of positions.
    std::size_t size() const;

    bool operator==(const Term& other) const;
    bool operator!=(const Term& other) const { return !(*this == other); }

    // Structural order (kind, then name/index, then args); used for
    // deterministic containers, not for the canonical print order.
    bool operator<(const Term& other) const;

private:
    Term(Kind kind, std::string name, int index, std::vector<Term> args)
        : kind_(kind), name_(std::move(name)), index_(index), args_(std::move(args)) {}

    Kind kind_;
    std::string name_;
    int index_ = 0;
    std::vector<Term> args_;
};

// A position is a path of 1-based argument indices; empty = root.
using Position = std::vector<int>;

std::string position_to_string(const Position& p);

// All positions of t in depth-first preorder (which is also the
// lexicographic order with the root first).
std::vector<Position> positions(const Term& t);

// Subterm of t rooted at p. Throws std::out_of_range for invalid positions.
const Term& subterm_at(const Term& t, const Position& p);

// Number of positions p with t|_p == s.
std::size_t occ_term(const Term& s, const Term& t);

// Occurrences counted by head: signature symbol, function variable, or
// bound variable respectively.
std::size_t occ_symbol(const std::string& name, const Term& t);
std::size_t occ_fvar(const std::string& name, const Term& t);
std::size_t occ_var(int index, const Term& t);

// Depth with constants (and other leaves) at depth 1.
std::size_t depth(const Term& t);

// F |-> lambda x1..xn . body, with body first-order and all bound-variable
// indices within 1..arity. Checked at construction.
class Binding {
public:
    Binding(FunctionVar fvar, Term body);

    const FunctionVar& fvar() const { return fvar_; }
    const Term& body() const { return body_; }

    // occ(x_i, body) for all i, the argument multiplicities of the binding.
    std::vector<std::size_t> var_multiplicities() const;

    bool operator==(const Binding& other) const {
        return fvar_ == other.fvar_ && body_ == other.body_;
    }

private:
    FunctionVar fvar_;
    Term body_;
};

// Applies the binding bottom-up: F(t1..tn) becomes body{x_i -> t_i sigma}.
// Throws std::invalid_argument on a foreign function variable or an arity
// mismatch with the binding.
Term apply(const Term& t, const Binding& sigma);

struct Equation {
    Term lhs;
    Term rhs;

    bool operator==(const Equation& other) const {
        return lhs == other.lhs && rhs == other.rhs;
    }
};

// A set of equations over a single function variable. Structurally equal
// equations are deduplicated at construction; first-occurrence order is kept.
class Problem {
public:
    Problem(Signature signature, FunctionVar fvar, std::vector<Equation> equations);

    const Signature& signature() const { return signature_; }
    const FunctionVar& fvar() const { return fvar_; }
    const std::vector<Equation>& equations() const { return equations_; }

    // Number of structurally equal duplicates dropped at construction.
    std::size_t duplicates_dropped() const { return duplicates_dropped_; }

    bool operator==(const Problem& other) const {
        return signature_ == other.signature_ && fvar_ == other.fvar_ &&
               equations_ == other.equations_;
    }

private:
    Signature signature_;
    FunctionVar fvar_;
    std::vector<Equation> equations_;
    std::size_t duplicates_dropped_ = 0;
};

// sigma unifies P iff applying it makes every equation syntactically equal.
// Throws std::invalid_argument if sigma does not bind P's function variable.
bool is_unifier(const Problem& problem, const Binding& sigma);

// Invariant checks as data: empty means well-formed. Covers the signature
// shape, the function-variable contract, and the requirement that every
// equation side contains the function variable and nothing foreign.
std::vector<std::string> validate_problem(const Problem& problem);

}  // namespace sogu
