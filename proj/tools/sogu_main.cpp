#include "CLI11.hpp"
#include "json.hpp"

#include "sogu/counting.hpp"
#include "sogu/decider.hpp"
#include "sogu/encoder.hpp"
#include "sogu/equalizer.hpp"
#include "sogu/format.hpp"
#include "sogu/oracle.hpp"
#include "sogu/polynomial.hpp"
#include "sogu/term.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace sogu;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnknown = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ParsedProblem load_problem(const std::string& path) {
    ParsedProblem parsed = parse_problem(slurp(path));
    std::vector<std::string> violations = validate_problem(parsed.problem);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << path << ": invalid problem";
        for (const std::string& v : violations) msg << "\n  " << v;
        throw InputError(msg.str());
    }
    for (const std::string& w : parsed.warnings) std::cerr << path << ": " << w << '\n';
    return parsed;
}

std::vector<unsigned long long> parse_point(const std::string& text, int nvars) {
    std::vector<unsigned long long> point;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            unsigned long long v = std::stoull(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size()) throw std::invalid_argument(item);
            point.push_back(v);
        } catch (const std::exception&) {
            throw InputError("bad evaluation point component '" + item + "'");
        }
    }
    if (static_cast<int>(point.size()) != nvars)
        throw InputError("evaluation point has " + std::to_string(point.size()) +
                         " component(s), problem has " + std::to_string(nvars));
    return point;
}

std::string point_str(const std::vector<unsigned long long>& h) {
    std::string out = "(";
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(h[i]);
    }
    return out + ")";
}

std::string counts_str(const std::map<std::string, BigInt>& counts) {
    std::string out = "{";
    bool first = true;
    for (const auto& [name, k] : counts) {
        if (!first) out += ", ";
        first = false;
        out += name + ":" + k.str();
    }
    return out + "}";
}

json counts_json(const std::map<std::string, BigInt>& counts) {
    json out = json::object();
    for (const auto& [name, k] : counts) out[name] = k.str();
    return out;
}

json problem_json(const Problem& p, const std::vector<std::string>& warnings) {
    json sig = json::array();
    for (const Symbol& s : p.signature().symbols())
        sig.push_back({{"name", s.name}, {"arity", s.arity}});
    json eqs = json::array();
    for (const Equation& eq : p.equations())
        eqs.push_back({{"lhs", print_term(eq.lhs)}, {"rhs", print_term(eq.rhs)}});
    return {{"signature", sig},
            {"fvar", {{"name", p.fvar().name}, {"arity", p.fvar().arity}}},
            {"equations", eqs},
            {"warnings", warnings}};
}

const char* verdict_name(Verdict::Kind k) {
    switch (k) {
        case Verdict::Kind::Unifiable: return "unifiable";
        case Verdict::Kind::NotUnifiable: return "not-unifiable";
        case Verdict::Kind::Unknown: return "unknown";
        case Verdict::Kind::NotInFragment: return "not-in-fragment";
    }
    return "?";
}

const char* outcome_name(BranchTrace::Outcome o) {
    switch (o) {
        case BranchTrace::Outcome::Contradicted: return "contradicted";
        case BranchTrace::Outcome::FoundUnifier: return "found-unifier";
        case BranchTrace::Outcome::ExhaustedComplete: return "exhausted-complete";
        case BranchTrace::Outcome::ExhaustedIncomplete: return "exhausted-incomplete";
        case BranchTrace::Outcome::NotExplored: return "not-explored";
    }
    return "?";
}

int cmd_parse(const std::string& file, bool machine) {
    ParsedProblem parsed = load_problem(file);
    if (machine) {
        json out = problem_json(parsed.problem, parsed.warnings);
        out["canonical"] = print_problem(parsed.problem);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << print_problem(parsed.problem);
    }
    return kExitOk;
}

int cmd_count(const std::string& file, const std::string& at, bool machine) {
    ParsedProblem parsed = load_problem(file);
    const Problem& p = parsed.problem;
    CountingProfile prof = profile(p);

    std::optional<std::vector<unsigned long long>> point;
    if (!at.empty()) point = parse_point(at, prof.nvars);

    json out{{"nvars", prof.nvars},
             {"mul_l", print_poly(prof.mul_l)},
             {"mul_r", print_poly(prof.mul_r)}};
    json cnt = json::array();
    for (const Symbol& c : p.signature().base_symbols())
        cnt.push_back({{"symbol", c.name},
                       {"cnt_l", print_poly(prof.cnt_l.at(c.name))},
                       {"cnt_r", print_poly(prof.cnt_r.at(c.name))}});
    out["counters"] = cnt;

    if (!machine) {
        std::cout << "nvars = " << prof.nvars << '\n';
        std::cout << "mul_l = " << print_poly(prof.mul_l) << '\n';
        std::cout << "mul_r = " << print_poly(prof.mul_r) << '\n';
        for (const Symbol& c : p.signature().base_symbols()) {
            std::cout << "cnt_l[" << c.name << "] = " << print_poly(prof.cnt_l.at(c.name))
                      << '\n';
            std::cout << "cnt_r[" << c.name << "] = " << print_poly(prof.cnt_r.at(c.name))
                      << '\n';
        }
    }
    if (point) {
        json values;
        values["h"] = *point;
        values["mul_l"] = prof.mul_l.eval_at(*point).str();
        values["mul_r"] = prof.mul_r.eval_at(*point).str();
        json cv = json::array();
        for (const Symbol& c : p.signature().base_symbols())
            cv.push_back({{"symbol", c.name},
                          {"cnt_l", prof.cnt_l.at(c.name).eval_at(*point).str()},
                          {"cnt_r", prof.cnt_r.at(c.name).eval_at(*point).str()}});
        values["counters"] = cv;
        out["at"] = values;
        if (!machine) {
            std::cout << "at h = " << point_str(*point) << ":\n";
            std::cout << "mul_l = " << prof.mul_l.eval_at(*point).str() << '\n';
            std::cout << "mul_r = " << prof.mul_r.eval_at(*point).str() << '\n';
            for (const Symbol& c : p.signature().base_symbols()) {
                std::cout << "cnt_l[" << c.name
                          << "] = " << prof.cnt_l.at(c.name).eval_at(*point).str() << '\n';
                std::cout << "cnt_r[" << c.name
                          << "] = " << prof.cnt_r.at(c.name).eval_at(*point).str() << '\n';
            }
        }
    }
    if (machine) std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_encode(const std::string& poly_text, const std::string& out_path, bool machine) {
    IntPoly poly;
    try {
        poly = parse_poly(poly_text);
    } catch (const PolyParseError& e) {
        throw InputError(std::string("bad polynomial: ") + e.what());
    }
    EncodedProblem enc = encode_poly(poly);
    bool ok = verify_encoding(enc);
    std::string text = print_problem(enc.problem);

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw InputError("cannot write " + out_path);
        out << text;
    }
    if (machine) {
        json out{{"poly", print_poly(enc.source)},
                 {"equations", enc.problem.equations().size()},
                 {"verified", ok},
                 {"problem", text}};
        if (!out_path.empty()) out["file"] = out_path;
        std::cout << out.dump(2) << '\n';
    } else if (out_path.empty()) {
        std::cout << text;
        std::cerr << "verified: " << (ok ? "yes" : "NO") << '\n';
    } else {
        std::cout << "wrote " << out_path << " (" << enc.problem.equations().size()
                  << " equation(s), verified: " << (ok ? "yes" : "NO") << ")\n";
    }
    return ok ? kExitOk : kExitDisagreement;
}

int cmd_condition(const std::string& file, const std::string& sub_text,
                  const std::string& sub_file, bool machine) {
    ParsedProblem parsed = load_problem(file);
    const Problem& p = parsed.problem;
    std::string text = sub_file.empty() ? sub_text : slurp(sub_file);
    Binding sigma = parse_binding(text, p.signature(), p.fvar());

    bool cond = unification_condition(p, sigma);
    bool unif = is_unifier(p, sigma);

    CountingProfile prof = profile(p);
    std::vector<BigInt> h;
    for (std::size_t m : sigma.var_multiplicities()) h.emplace_back(m);
    BigInt d = prof.mul_l.eval(h) - prof.mul_r.eval(h);

    json per = json::array();
    for (const Symbol& c : p.signature().base_symbols()) {
        BigInt occ = occ_symbol(c.name, sigma.body());
        BigInt lhs = occ * d;
        BigInt rhs = prof.cnt_r.at(c.name).eval(h) - prof.cnt_l.at(c.name).eval(h);
        per.push_back({{"symbol", c.name},
                       {"occ", occ.str()},
                       {"lhs", lhs.str()},
                       {"rhs", rhs.str()},
                       {"holds", lhs == rhs}});
        if (!machine)
            std::cout << "base " << c.name << ": occ = " << occ.str() << ", occ*(mul_l-mul_r) = "
                      << lhs.str() << ", cnt_r-cnt_l = " << rhs.str() << '\n';
    }
    if (machine) {
        json out{{"binding", print_binding(sigma, p.signature())},
                 {"condition", cond},
                 {"is_unifier", unif},
                 {"per_symbol", per}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "unification condition: " << (cond ? "holds" : "violated") << '\n';
        std::cout << "is unifier: " << (unif ? "yes" : "no") << '\n';
    }
    return kExitOk;
}

int cmd_equalize(const std::string& file, unsigned long long bound, const std::string& symbol,
                 bool machine) {
    ParsedProblem parsed = load_problem(file);
    const Problem& p = parsed.problem;
    if (!symbol.empty()) {
        const Symbol* sym = p.signature().find(symbol);
        if (!sym || sym->arity > 1)
            throw InputError("--symbol must name a base symbol of the signature");
    }
    std::vector<EqualizerWitness> witnesses = equalize(p, bound);

    if (machine) {
        json list = json::array();
        for (const EqualizerWitness& w : witnesses) {
            json entry{{"h", w.h}};
            if (symbol.empty())
                entry["counts"] = counts_json(w.counts);
            else
                entry["count"] = w.counts.at(symbol).str();
            list.push_back(entry);
        }
        json out{{"bound", bound},
                 {"witnesses", list},
                 {"note", "bounded search exhausted; absence within the bound proves nothing"}};
        std::cout << out.dump(2) << '\n';
    } else {
        for (const EqualizerWitness& w : witnesses) {
            std::cout << "witness h = " << point_str(w.h);
            if (symbol.empty())
                std::cout << ", counts " << counts_str(w.counts);
            else
                std::cout << ", count[" << symbol << "] = " << w.counts.at(symbol).str();
            std::cout << '\n';
        }
        std::cout << "bounded search exhausted at bound " << bound << ": "
                  << witnesses.size()
                  << " witness(es); absence within the bound proves nothing\n";
    }
    return kExitOk;
}

json fragment_json(const FragmentReport& rep) {
    json n = json::object();
    for (const auto& [name, v] : rep.N) n[name] = v.str();
    json out{{"hU_literal", rep.hU_literal.str()},
             {"witnesses", rep.witnesses},
             {"in_fragment", rep.in_fragment},
             {"M", rep.M.str()},
             {"N", n}};
    if (rep.hU_safe) out["hU_safe"] = rep.hU_safe->str();
    return out;
}

json branch_json(const BranchTrace& b) {
    json out{{"hprime", b.hprime},
             {"outcome", outcome_name(b.outcome)},
             {"candidates_tested", b.candidates_tested}};
    switch (b.forced.status) {
        case ForcedCounts::Status::Consistent:
            out["forced"] = counts_json(b.forced.counts);
            break;
        case ForcedCounts::Status::Contradiction:
            out["contradiction"] = b.forced.reason;
            break;
        case ForcedCounts::Status::Underdetermined:
            out["free"] = b.forced.free_symbols;
            break;
    }
    return out;
}

void print_branch(const BranchTrace& b) {
    std::cout << "branch h'=" << b.hprime << ": ";
    switch (b.outcome) {
        case BranchTrace::Outcome::NotExplored:
            std::cout << "not explored\n";
            return;
        case BranchTrace::Outcome::Contradicted:
            std::cout << "contradiction: " << b.forced.reason << '\n';
            return;
        default:
            break;
    }
    if (b.forced.status == ForcedCounts::Status::Consistent)
        std::cout << "forced counts " << counts_str(b.forced.counts);
    else
        std::cout << "counts free (multiplier difference vanishes)";
    std::cout << "; tested " << b.candidates_tested << "; ";
    switch (b.outcome) {
        case BranchTrace::Outcome::FoundUnifier:
            std::cout << "found unifier\n";
            break;
        case BranchTrace::Outcome::ExhaustedComplete:
            std::cout << "exhausted (complete)\n";
            break;
        case BranchTrace::Outcome::ExhaustedIncomplete:
            std::cout << "exhausted (incomplete)\n";
            break;
        default:
            std::cout << outcome_name(b.outcome) << '\n';
            break;
    }
}

int cmd_decide(const std::string& file, std::size_t budget, bool machine, bool trace_flag) {
    ParsedProblem parsed = load_problem(file);
    const Problem& p = parsed.problem;
    if (p.fvar().arity != 1)
        throw InputError("decide handles arity-1 problems only; this one has arity " +
                         std::to_string(p.fvar().arity));

    DecideTrace trace = decide_report(p, budget);

    std::optional<Binding> identity_hint;
    if (trace.verdict.kind == Verdict::Kind::NotInFragment) {
        Binding id(p.fvar(), Term::var(1));
        if (is_unifier(p, id)) identity_hint = id;
    }

    if (machine) {
        json out{{"verdict", verdict_name(trace.verdict.kind)},
                 {"fragment", fragment_json(trace.fragment)},
                 {"budget", budget}};
        if (trace.verdict.witness)
            out["binding"] = print_binding(*trace.verdict.witness, p.signature());
        if (!trace.verdict.reason.empty()) out["reason"] = trace.verdict.reason;
        if (identity_hint)
            out["identity_hint"] = print_binding(*identity_hint, p.signature());
        json branches = json::array();
        for (const BranchTrace& b : trace.branches) branches.push_back(branch_json(b));
        out["branches"] = branches;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "hU_literal = " << trace.fragment.hU_literal.str() << '\n';
        if (trace.fragment.hU_safe)
            std::cout << "hU_safe = " << trace.fragment.hU_safe->str() << '\n';
        std::cout << "fragment witnesses:";
        for (const std::string& w : trace.fragment.witnesses) std::cout << ' ' << w;
        if (trace.fragment.witnesses.empty()) std::cout << " none";
        std::cout << '\n';
        if (trace_flag)
            for (const BranchTrace& b : trace.branches) print_branch(b);
        std::cout << "verdict: " << verdict_name(trace.verdict.kind) << '\n';
        if (trace.verdict.witness)
            std::cout << print_binding(*trace.verdict.witness, p.signature()) << '\n';
        if (!trace.verdict.reason.empty())
            std::cout << "reason: " << trace.verdict.reason << '\n';
        if (identity_hint)
            std::cout << "note: the identity binding unifies the problem: "
                      << print_binding(*identity_hint, p.signature()) << '\n';
    }
    return trace.verdict.kind == Verdict::Kind::Unknown ? kExitUnknown : kExitOk;
}

int cmd_oracle(const std::string& file, std::size_t size_bound, bool diff, std::size_t budget,
               bool machine) {
    ParsedProblem parsed = load_problem(file);
    const Problem& p = parsed.problem;
    if (diff && p.fvar().arity != 1)
        throw InputError("--diff runs the decider, which handles arity 1 only");

    if (!diff) {
        OracleResult res = brute_force(p, size_bound);
        if (machine) {
            json list = json::array();
            for (const Binding& b : res.unifiers)
                list.push_back(print_binding(b, p.signature()));
            json out{{"size_bound", res.size_bound},
                     {"exhausted", res.exhausted},
                     {"unifiers", list}};
            std::cout << out.dump(2) << '\n';
        } else {
            for (const Binding& b : res.unifiers)
                std::cout << "unifier: " << print_binding(b, p.signature()) << '\n';
            std::cout << res.unifiers.size() << " unifier(s) at size <= " << res.size_bound
                      << (res.exhausted ? " (exhaustive)" : " (interrupted)") << '\n';
        }
        return kExitOk;
    }

    DifferentialReport rep = differential_check(p, size_bound, budget);
    if (machine) {
        json oracle_list = json::array();
        for (const Binding& b : rep.oracle.unifiers)
            oracle_list.push_back(print_binding(b, p.signature()));
        json out{{"verdict", verdict_name(rep.verdict.kind)},
                 {"oracle_unifiers", oracle_list},
                 {"oracle_exhausted", rep.oracle.exhausted},
                 {"size_bound", rep.oracle.size_bound},
                 {"decider_abstained", rep.decider_abstained},
                 {"disagreement", rep.disagreement},
                 {"detail", rep.detail}};
        if (rep.verdict.witness)
            out["binding"] = print_binding(*rep.verdict.witness, p.signature());
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "decider verdict: " << verdict_name(rep.verdict.kind);
        if (rep.verdict.witness)
            std::cout << ": " << print_binding(*rep.verdict.witness, p.signature());
        std::cout << '\n';
        std::cout << "oracle: " << rep.oracle.unifiers.size() << " unifier(s) at size <= "
                  << rep.oracle.size_bound << (rep.oracle.exhausted ? "" : " (interrupted)")
                  << '\n';
        std::cout << "differential: " << rep.detail << '\n';
    }
    if (rep.disagreement) return kExitDisagreement;
    if (rep.verdict.kind == Verdict::Kind::Unknown) return kExitUnknown;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Second-order ground unification workbench"};
    app.require_subcommand(1);

    std::string file, at, poly, out_path, sub_text, sub_file, symbol;
    unsigned long long bound = 16;
    std::size_t budget = 32, size_bound = 9;
    bool machine = false, trace_flag = false, diff = false;

    CLI::App* parse_cmd = app.add_subcommand("parse", "Parse and validate a problem file");
    parse_cmd->add_option("--file", file, "problem file")->required();
    parse_cmd->add_flag("--machine", machine, "JSON output");

    CLI::App* count_cmd =
        app.add_subcommand("count", "Multiplier/counter polynomials of a problem");
    count_cmd->add_option("--file", file, "problem file")->required();
    count_cmd->add_option("--at", at, "evaluate at h, comma separated");
    count_cmd->add_flag("--machine", machine, "JSON output");

    CLI::App* encode_cmd =
        app.add_subcommand("encode", "Compile a polynomial into a problem");
    encode_cmd->add_option("--poly", poly, "polynomial over x1..xn")->required();
    encode_cmd->add_option("--out", out_path, "output problem file");
    encode_cmd->add_flag("--machine", machine, "JSON output");

    CLI::App* cond_cmd =
        app.add_subcommand("condition", "Check the unification condition for a binding");
    cond_cmd->add_option("--file", file, "problem file")->required();
    cond_cmd->add_option("--sub", sub_text, "binding, e.g. \"sub F(x) = g(x,x)\"");
    cond_cmd->add_option("--sub-file", sub_file, "file with one sub line");
    cond_cmd->add_flag("--machine", machine, "JSON output");

    CLI::App* eq_cmd = app.add_subcommand("equalize", "Bounded equalizer witness search");
    eq_cmd->add_option("--file", file, "problem file")->required();
    eq_cmd->add_option("--bound", bound, "max component of h (default 16)");
    eq_cmd->add_option("--symbol", symbol, "report only this base symbol's count");
    eq_cmd->add_flag("--machine", machine, "JSON output");

    CLI::App* decide_cmd = app.add_subcommand("decide", "Decide an arity-1 problem");
    decide_cmd->add_option("--file", file, "problem file")->required();
    decide_cmd->add_option("--budget", budget, "synthesis size budget (default 32)");
    decide_cmd->add_flag("--trace", trace_flag, "print per-branch trace");
    decide_cmd->add_flag("--machine", machine, "JSON output");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "Brute-force unifier enumeration");
    oracle_cmd->add_option("--file", file, "problem file")->required();
    oracle_cmd->add_option("--size", size_bound, "body size bound (default 9)");
    oracle_cmd->add_flag("--diff", diff, "differential check against the decider");
    oracle_cmd->add_option("--budget", budget, "decider budget for --diff (default 32)");
    oracle_cmd->add_flag("--machine", machine, "JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (parse_cmd->parsed()) return cmd_parse(file, machine);
        if (count_cmd->parsed()) return cmd_count(file, at, machine);
        if (encode_cmd->parsed()) return cmd_encode(poly, out_path, machine);
        if (cond_cmd->parsed()) {
            if (sub_text.empty() == sub_file.empty())
                throw InputError("condition needs exactly one of --sub / --sub-file");
            return cmd_condition(file, sub_text, sub_file, machine);
        }
        if (eq_cmd->parsed()) return cmd_equalize(file, bound, symbol, machine);
        if (decide_cmd->parsed()) return cmd_decide(file, budget, machine, trace_flag);
        if (oracle_cmd->parsed()) return cmd_oracle(file, size_bound, diff, budget, machine);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const PolyParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}
