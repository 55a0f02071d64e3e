#pragma once

#include "sogu/term.hpp"

#include <stdexcept>
#include <string>
#include <vector>

// Text formats: the line-oriented problem format, the one-line substitution
// format, and canonical term printing. Parsing and printing round-trip on
// canonical forms.
//
//   # comment
//   sig g/2 a/0 b/0
//   fvar F/1
//   eq F(g(a,a)) = g(F(a),F(a))
//
//   sub F(x) = g(b,g(x,x))

namespace sogu {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int col);
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

struct ParsedProblem {
    Problem problem;
    std::vector<std::string> warnings;
};

// Throws ParseError on syntax errors, unknown names, and arity mismatches.
// Duplicate equations are dropped with a warning. Validation beyond shape
// is the caller's job (validate_problem).
ParsedProblem parse_problem(const std::string& text);
std::string print_problem(const Problem& p);

// `sub F(x1,…,xn) = body`; parameter names are the caller's choice and
// shadow signature symbols; indices are assigned by parameter order. The
// declared name and arity must match fvar.
Binding parse_binding(const std::string& text, const Signature& sig,
                      const FunctionVar& fvar);
std::string print_binding(const Binding& b, const Signature& sig);

// Canonical parameter names: "x" for arity 1, else x1..xn; a name that
// collides with a signature symbol gets a trailing underscore.
std::vector<std::string> canonical_params(const Signature& sig, int nvars);

// name, name(arg,…) with bound variables printed via params (1-based).
std::string print_term(const Term& t, const std::vector<std::string>& params = {});

}  // namespace sogu
