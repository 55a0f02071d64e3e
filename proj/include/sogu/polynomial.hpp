#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

// Exact multivariate polynomial arithmetic over variables x1..xn with
// unbounded integer coefficients. Counting values grow like h^depth, so
// everything here is exact; nothing saturates or rounds.

namespace sogu {

using BigInt = boost::multiprecision::cpp_int;

// Exponent vectors ordered by total degree, then x1-major lexicographic
// within a degree. This is the canonical monomial order used for printing,
// equality, and stable file output.
struct GradedLexLess {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
};

class IntPoly {
public:
    using MonomialMap = std::map<std::vector<unsigned>, BigInt, GradedLexLess>;

    explicit IntPoly(int nvars = 0) : nvars_(nvars) {}

    static IntPoly constant(int nvars, BigInt value);
    // The single monomial coeff * x_index (index 1-based).
    static IntPoly variable(int nvars, int index, BigInt coeff = 1);
    static IntPoly monomial(int nvars, std::vector<unsigned> exponents, BigInt coeff);

    int nvars() const { return nvars_; }
    bool is_zero() const { return monomials_.empty(); }
    const MonomialMap& monomials() const { return monomials_; }

    // Same polynomial viewed over a larger variable set.
    IntPoly with_nvars(int nvars) const;

    BigInt constant_term() const;
    BigInt coefficient(const std::vector<unsigned>& exponents) const;
    unsigned total_degree() const;

    bool all_coefficients_nonnegative() const;

    IntPoly operator+(const IntPoly& other) const;
    IntPoly operator-(const IntPoly& other) const;
    IntPoly operator*(const IntPoly& other) const;
    IntPoly operator-() const;
    IntPoly scaled(const BigInt& k) const;

    IntPoly& operator+=(const IntPoly& other) { return *this = *this + other; }
    IntPoly& operator-=(const IntPoly& other) { return *this = *this - other; }

    BigInt eval(const std::vector<BigInt>& point) const;
    BigInt eval_at(const std::vector<unsigned long long>& point) const;

    bool operator==(const IntPoly& other) const {
        return nvars_ == other.nvars_ && monomials_ == other.monomials_;
    }
    bool operator!=(const IntPoly& other) const { return !(*this == other); }

private:
    void add_monomial(const std::vector<unsigned>& exponents, const BigInt& coeff);
    void check_compatible(const IntPoly& other) const;

    int nvars_;
    MonomialMap monomials_;  // zero coefficients are never stored
};

// Canonical text form: monomials in graded-lex order joined with " + " /
// " - ", e.g. "1 + 2*x1 + x1^2" or "x1^2 + x2^2 - x3^2"; the zero
// polynomial prints as "0". parse_poly(print_poly(p)) == p.
std::string print_poly(const IntPoly& p);

// Parses a signed sum of monomials "coeff*xI^E*..." with implicit
// coefficient 1 and exponent 1. nvars is the largest variable index seen,
// or min_nvars if larger. Throws PolyParseError with an offset on bad input.
IntPoly parse_poly(const std::string& text, int min_nvars = 0);

class PolyParseError : public std::runtime_error {
public:
    PolyParseError(std::string message, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace sogu
