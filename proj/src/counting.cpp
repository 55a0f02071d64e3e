#include "sogu/counting.hpp"

#include <stdexcept>

namespace sogu {

namespace {

void check_fvar_node(const FunctionVar& f, const Term& t) {
    if (t.name() != f.name)
        throw std::invalid_argument("foreign function variable " + t.name());
    if (static_cast<int>(t.args().size()) != f.arity)
        throw std::invalid_argument("function variable arity mismatch at " + t.name());
}

}  // namespace

IntPoly mul_sym(const FunctionVar& f, const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Var:
            throw std::invalid_argument("bound variable outside a binding body");
        case Term::Kind::App: {
            IntPoly sum(f.arity);
            for (const Term& arg : t.args()) sum += mul_sym(f, arg);
            return sum;
        }
        case Term::Kind::FVar: {
            check_fvar_node(f, t);
            IntPoly out = IntPoly::constant(f.arity, 1);
            for (int i = 0; i < f.arity; ++i)
                out += IntPoly::variable(f.arity, i + 1) * mul_sym(f, t.args()[i]);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

IntPoly cnt_sym(const FunctionVar& f, const Symbol& c, const Term& t) {
    if (c.arity > 1)
        throw std::invalid_argument("counter is only defined for base symbols, got " +
                                    c.name + "/" + std::to_string(c.arity));
    switch (t.kind()) {
        case Term::Kind::Var:
            throw std::invalid_argument("bound variable outside a binding body");
        case Term::Kind::App: {
            IntPoly sum(f.arity);
            for (const Term& arg : t.args()) sum += cnt_sym(f, c, arg);
            if (t.name() == c.name) sum += IntPoly::constant(f.arity, 1);
            return sum;
        }
        case Term::Kind::FVar: {
            check_fvar_node(f, t);
            IntPoly out(f.arity);
            for (int i = 0; i < f.arity; ++i)
                out += IntPoly::variable(f.arity, i + 1) * cnt_sym(f, c, t.args()[i]);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

CountingProfile profile(const Problem& p) {
    const FunctionVar& f = p.fvar();
    CountingProfile out;
    out.nvars = f.arity;
    out.mul_l = IntPoly(f.arity);
    out.mul_r = IntPoly(f.arity);
    for (const Symbol& c : p.signature().base_symbols()) {
        out.cnt_l.emplace(c.name, IntPoly(f.arity));
        out.cnt_r.emplace(c.name, IntPoly(f.arity));
    }
    for (const Equation& eq : p.equations()) {
        out.mul_l += mul_sym(f, eq.lhs);
        out.mul_r += mul_sym(f, eq.rhs);
        for (const Symbol& c : p.signature().base_symbols()) {
            out.cnt_l.at(c.name) += cnt_sym(f, c, eq.lhs);
            out.cnt_r.at(c.name) += cnt_sym(f, c, eq.rhs);
        }
    }
    return out;
}

namespace {

std::vector<BigInt> multiplicity_point(const Binding& sigma) {
    std::vector<BigInt> h;
    for (std::size_t m : sigma.var_multiplicities()) h.emplace_back(m);
    return h;
}

}  // namespace

std::pair<BigInt, BigInt> occurrence_identity(const Term& t, const Binding& sigma,
                                              const Symbol& c) {
    std::vector<BigInt> h = multiplicity_point(sigma);
    BigInt lhs = occ_symbol(c.name, apply(t, sigma));
    BigInt occ_in_body = occ_symbol(c.name, sigma.body());
    BigInt rhs = occ_in_body * mul_sym(sigma.fvar(), t).eval(h) +
                 cnt_sym(sigma.fvar(), c, t).eval(h);
    return {lhs, rhs};
}

bool unification_condition(const Problem& p, const Binding& sigma) {
    if (!(sigma.fvar() == p.fvar()))
        throw std::invalid_argument("binding does not match the problem's function variable");
    std::vector<BigInt> h = multiplicity_point(sigma);
    const FunctionVar& f = p.fvar();
    for (const Symbol& c : p.signature().base_symbols()) {
        BigInt occ_c = occ_symbol(c.name, sigma.body());
        BigInt mul_l = 0, mul_r = 0, cnt_l = 0, cnt_r = 0;
        for (const Equation& eq : p.equations()) {
            BigInt ml = mul_sym(f, eq.lhs).eval(h);
            BigInt mr = mul_sym(f, eq.rhs).eval(h);
            BigInt cl = cnt_sym(f, c, eq.lhs).eval(h);
            BigInt cr = cnt_sym(f, c, eq.rhs).eval(h);
            if (occ_c * (ml - mr) != cr - cl) return false;
            mul_l += ml;
            mul_r += mr;
            cnt_l += cl;
            cnt_r += cr;
        }
        if (occ_c * (mul_l - mul_r) != cnt_r - cnt_l) return false;
    }
    return true;
}

bool condition_at(const CountingProfile& prof, const std::vector<BigInt>& h,
                  const std::map<std::string, BigInt>& counts) {
    BigInt d = prof.mul_l.eval(h) - prof.mul_r.eval(h);
    for (const auto& [name, cl] : prof.cnt_l) {
        BigInt n = prof.cnt_r.at(name).eval(h) - cl.eval(h);
        auto it = counts.find(name);
        BigInt k = it == counts.end() ? BigInt(0) : it->second;
        if (k * d != n) return false;
    }
    return true;
}

bool condition_at(const Problem& p, const std::vector<BigInt>& h,
                  const std::map<std::string, BigInt>& counts) {
    return condition_at(profile(p), h, counts);
}

}  // namespace sogu
