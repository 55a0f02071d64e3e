#include "sogu/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sogu {

namespace {

unsigned degree_of(const std::vector<unsigned>& exponents) {
    unsigned d = 0;
    for (unsigned e : exponents) d += e;
    return d;
}

}  // namespace

bool GradedLexLess::operator()(const std::vector<unsigned>& a,
                               const std::vector<unsigned>& b) const {
    unsigned da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    // Within a degree, x1-major: (2,0,0) sorts before (0,2,0).
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

IntPoly IntPoly::constant(int nvars, BigInt value) {
    IntPoly p(nvars);
    p.add_monomial(std::vector<unsigned>(static_cast<std::size_t>(nvars), 0u), value);
    return p;
}

IntPoly IntPoly::variable(int nvars, int index, BigInt coeff) {
    if (index < 1 || index > nvars)
        throw std::invalid_argument("variable index out of range");
    std::vector<unsigned> exps(static_cast<std::size_t>(nvars), 0u);
    exps[static_cast<std::size_t>(index - 1)] = 1;
    return monomial(nvars, std::move(exps), std::move(coeff));
}

IntPoly IntPoly::monomial(int nvars, std::vector<unsigned> exponents, BigInt coeff) {
    if (static_cast<int>(exponents.size()) != nvars)
        throw std::invalid_argument("exponent vector length does not match nvars");
    IntPoly p(nvars);
    p.add_monomial(exponents, coeff);
    return p;
}

IntPoly IntPoly::with_nvars(int nvars) const {
    if (nvars < nvars_)
        throw std::invalid_argument("cannot shrink the variable set of a polynomial");
    IntPoly out(nvars);
    for (const auto& [exps, coeff] : monomials_) {
        std::vector<unsigned> padded = exps;
        padded.resize(static_cast<std::size_t>(nvars), 0u);
        out.add_monomial(padded, coeff);
    }
    return out;
}

BigInt IntPoly::constant_term() const {
    return coefficient(std::vector<unsigned>(static_cast<std::size_t>(nvars_), 0u));
}

BigInt IntPoly::coefficient(const std::vector<unsigned>& exponents) const {
    auto it = monomials_.find(exponents);
    return it == monomials_.end() ? BigInt(0) : it->second;
}

unsigned IntPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [exps, coeff] : monomials_) d = std::max(d, degree_of(exps));
    return d;
}

bool IntPoly::all_coefficients_nonnegative() const {
    for (const auto& [exps, coeff] : monomials_)
        if (coeff < 0) return false;
    return true;
}

void IntPoly::add_monomial(const std::vector<unsigned>& exponents, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = monomials_.emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) monomials_.erase(it);
    }
}

void IntPoly::check_compatible(const IntPoly& other) const {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("polynomial operands have different variable counts");
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
    check_compatible(other);
    IntPoly out = *this;
    for (const auto& [exps, coeff] : other.monomials_) out.add_monomial(exps, coeff);
    return out;
}

IntPoly IntPoly::operator-(const IntPoly& other) const {
    check_compatible(other);
    IntPoly out = *this;
    for (const auto& [exps, coeff] : other.monomials_) out.add_monomial(exps, -coeff);
    return out;
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
    check_compatible(other);
    IntPoly out(nvars_);
    for (const auto& [ea, ca] : monomials_) {
        for (const auto& [eb, cb] : other.monomials_) {
            std::vector<unsigned> exps(ea.size());
            for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
            out.add_monomial(exps, ca * cb);
        }
    }
    return out;
}

IntPoly IntPoly::operator-() const { return scaled(-1); }

IntPoly IntPoly::scaled(const BigInt& k) const {
    IntPoly out(nvars_);
    for (const auto& [exps, coeff] : monomials_) out.add_monomial(exps, coeff * k);
    return out;
}

BigInt IntPoly::eval(const std::vector<BigInt>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluation point length does not match nvars");
    BigInt total = 0;
    for (const auto& [exps, coeff] : monomials_) {
        BigInt term = coeff;
        for (std::size_t i = 0; i < exps.size(); ++i)
            for (unsigned e = 0; e < exps[i]; ++e) term *= point[i];
        total += term;
    }
    return total;
}

BigInt IntPoly::eval_at(const std::vector<unsigned long long>& point) const {
    std::vector<BigInt> big(point.begin(), point.end());
    return eval(big);
}

std::string print_poly(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exps, coeff] : p.monomials()) {
        BigInt mag = coeff < 0 ? BigInt(-coeff) : coeff;
        if (first) {
            if (coeff < 0) out << '-';
            first = false;
        } else {
            out << (coeff < 0 ? " - " : " + ");
        }
        bool has_vars = degree_of(exps) > 0;
        bool wrote_coeff = false;
        if (mag != 1 || !has_vars) {
            out << mag;
            wrote_coeff = true;
        }
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (wrote_coeff) out << '*';
            wrote_coeff = true;
            out << 'x' << (i + 1);
            if (exps[i] > 1) out << '^' << exps[i];
        }
    }
    return out.str();
}

PolyParseError::PolyParseError(std::string message, std::size_t offset)
    : std::runtime_error(std::move(message)), offset_(offset) {}

namespace {

struct PolyParser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& message) {
        throw PolyParseError(message + " at offset " + std::to_string(pos), pos);
    }

    BigInt parse_nat() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a number");
        BigInt value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            ++pos;
        }
        return value;
    }

    int parse_var_index() {
        // caller has consumed the leading 'x'
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a variable index after 'x'");
        BigInt idx = parse_nat();
        if (idx < 1 || idx > 1000000) fail("variable index out of range");
        return static_cast<int>(idx);
    }

    // One monomial: optional integer, then '*'-separated variable factors.
    void parse_monomial(int sign, std::map<int, unsigned>& exps_out, BigInt& coeff_out) {
        coeff_out = sign;
        bool have_factor = false;
        while (true) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff_out *= parse_nat();
                have_factor = true;
            } else if (c == 'x') {
                ++pos;
                int idx = parse_var_index();
                unsigned exp = 1;
                if (peek() == '^') {
                    ++pos;
                    BigInt e = parse_nat();
                    if (e > 1000000) fail("exponent out of range");
                    exp = static_cast<unsigned>(e);
                }
                exps_out[idx] += exp;
                have_factor = true;
            } else {
                fail("expected a coefficient or a variable");
            }
            if (peek() == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!have_factor) fail("empty monomial");
    }
};

}  // namespace

IntPoly parse_poly(const std::string& text, int min_nvars) {
    PolyParser p{text};
    struct RawMonomial {
        std::map<int, unsigned> exps;
        BigInt coeff;
    };
    std::vector<RawMonomial> raw;
    int nvars = min_nvars;

    if (p.eof()) p.fail("empty polynomial");
    bool first = true;
    while (!p.eof()) {
        int sign = 1;
        char c = p.peek();
        if (c == '+' || c == '-') {
            sign = (c == '-') ? -1 : 1;
            ++p.pos;
        } else if (!first) {
            p.fail("expected '+' or '-' between monomials");
        }
        RawMonomial m;
        p.parse_monomial(sign, m.exps, m.coeff);
        for (const auto& [idx, exp] : m.exps) nvars = std::max(nvars, idx);
        raw.push_back(std::move(m));
        first = false;
    }

    IntPoly out(nvars);
    for (const auto& m : raw) {
        std::vector<unsigned> exps(static_cast<std::size_t>(nvars), 0u);
        for (const auto& [idx, exp] : m.exps) exps[static_cast<std::size_t>(idx - 1)] = exp;
        out += IntPoly::monomial(nvars, std::move(exps), m.coeff);
    }
    return out;
}

}  // namespace sogu
