#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "untrs/equiv.hpp"
#include "untrs/parse.hpp"
#include "untrs/un.hpp"

namespace {

using namespace untrs;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io-error", "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

nlohmann::json error_json(const Error& e) {
    return {{"error", {{"code", e.code()}, {"message", e.what()}}}};
}

TileSequence parse_solution(const std::string& s) {
    TileSequence out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) {
        try {
            out.push_back(std::stoul(cur));
        } catch (const std::exception&) {
            throw Error("bad-instance", "bad tile index: " + cur);
        }
    }
    return out;
}

int cmd_check_un(const std::string& file, bool json) {
    Trs R = parse_trs(slurp(file));
    FlatteningResult fr = flatten(R);
    UnVerdict v = decide_un(R);
    if (json) {
        std::cout << verdict_json(v, fr).dump(2) << "\n";
    } else if (v.status == UnVerdict::Status::un_eq) {
        std::cout << witness_report(v, fr);
    } else {
        std::cout << witness_report(v, fr);
    }
    return v.status == UnVerdict::Status::un_eq ? 0 : 10;
}

int cmd_word(const std::string& file, const std::string& t1s,
             const std::string& t2s, bool oracle, std::size_t size_cap,
             std::size_t step_cap, bool json) {
    Trs R = parse_trs(slurp(file));
    Term t1 = parse_term(t1s, R);
    Term t2 = parse_term(t2s, R);
    if (oracle || !R.flat()) {
        bool eq = oracle_equiv(t1, t2, R, size_cap, step_cap);
        if (json) {
            std::cout << nlohmann::json{{"equivalent", eq},
                                        {"method", "oracle"}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << (eq ? "equivalent (oracle search)"
                             : "not found within bounds (oracle search)")
                      << "\n";
        }
        return eq ? 0 : 1;
    }
    EquationSet Ehat = closure_of(R);
    EquivResult res = decide_equiv_with(t1, t2, R, Ehat);
    if (!res.equivalent) {
        if (json)
            std::cout << nlohmann::json{{"equivalent", false},
                                        {"method", "decision"}}
                             .dump(2)
                      << "\n";
        else
            std::cout << "not equivalent\n";
        return 1;
    }
    ProofTrace lowered = lower_trace(res.trace, Ehat);
    if (json) {
        std::cout << nlohmann::json{{"equivalent", true},
                                    {"method", "decision"},
                                    {"trace", trace_to_json(lowered)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "equivalent, " << lowered.steps.size()
                  << " lowered steps\n";
        Term cur = lowered.from;
        std::cout << "  " << to_string(cur) << "\n";
        for (const TraceStep& st : lowered.steps) {
            const Equation& eq = Ehat.eqs[st.eq];
            const Term& dst = st.reversed ? eq.lhs : eq.rhs;
            cur = replace_at(cur, st.pos, apply_subst(dst, st.subst));
            std::cout << "  <-> " << to_string(cur) << "\n";
        }
    }
    return 0;
}

const char* origin_name(EqOrigin o) {
    switch (o) {
    case EqOrigin::FromRule: return "rule";
    case EqOrigin::Infer1: return "paramod";
    case EqOrigin::Infer2: return "var-instance";
    case EqOrigin::Infer3: return "const-replace";
    }
    return "?";
}

int cmd_closure(const std::string& file, bool json) {
    Trs R = parse_trs(slurp(file));
    EquationSet E = closure_of(R);
    if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const Equation& eq : E.eqs)
            out.push_back({{"id", eq.id},
                           {"lhs", to_string(eq.lhs)},
                           {"rhs", to_string(eq.rhs)},
                           {"origin", origin_name(eq.origin)}});
        std::cout << out.dump(2) << "\n";
    } else {
        for (const Equation& eq : E.eqs)
            std::cout << eq.id << ": " << to_string(eq.lhs) << " = "
                      << to_string(eq.rhs) << "  [" << origin_name(eq.origin)
                      << "]\n";
    }
    return 0;
}

int cmd_flatten(const std::string& file) {
    Trs R = parse_trs(slurp(file));
    FlatteningResult fr = flatten(R);
    std::cout << print_trs(fr.flat_system);
    for (const auto& [c, t] : fr.constant_table)
        std::cout << "# " << c << " abbreviates " << to_string(t) << "\n";
    return 0;
}

int cmd_nf(const std::string& file, std::size_t max_height, std::size_t cap) {
    Trs R = parse_trs(slurp(file));
    for (const Term& t : enumerate_normal_forms(R, max_height, cap))
        std::cout << to_string(t) << "\n";
    return 0;
}

int cmd_trace_verify(const std::string& file, const std::string& trace_file) {
    Trs R = parse_trs(slurp(file));
    auto j = nlohmann::json::parse(slurp(trace_file));
    ProofTrace tr =
        trace_from_json(j, [&](const std::string& s) { return parse_term(s, R); });
    EquationSet E = R.flat() ? closure_of(R) : to_equations(R);
    std::string why;
    if (verify_trace(tr, E, &why)) {
        std::cout << "valid: " << to_string(tr.from) << " <->* "
                  << to_string(tr.to) << " in " << tr.steps.size()
                  << " steps\n";
        return 0;
    }
    std::cout << "invalid: " << why << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"uniqueness of normal forms for shallow rewrite systems"};
    app.require_subcommand(1);

    std::string file, t1, t2, trace_file, variant = "right-flat", solution;
    bool json = false, oracle = false, allow_empty = false;
    std::size_t size_cap = 12, step_cap = 100000, max_height = 1, cap = 200000;

    auto* check = app.add_subcommand("check-un", "decide UN=");
    check->add_option("file", file)->required();
    check->add_flag("--json", json);

    auto* word = app.add_subcommand("word", "decide term equivalence");
    word->add_option("file", file)->required();
    word->add_option("term1", t1)->required();
    word->add_option("term2", t2)->required();
    word->add_flag("--oracle", oracle);
    word->add_option("--size-cap", size_cap);
    word->add_option("--step-cap", step_cap);
    word->add_flag("--json", json);

    auto* clo = app.add_subcommand("closure", "dump the equation closure");
    clo->add_option("file", file)->required();
    clo->add_flag("--json", json);

    auto* fl = app.add_subcommand("flatten", "flatten a shallow system");
    fl->add_option("file", file)->required();

    auto* nf = app.add_subcommand("nf", "enumerate ground normal forms");
    nf->add_option("file", file)->required();
    nf->add_option("--max-height", max_height)->required();
    nf->add_option("--cap", cap);

    auto* pcp = app.add_subcommand("pcp", "PCP reductions");
    pcp->require_subcommand(1);
    auto* gen = pcp->add_subcommand("gen", "generate the reduction TRS");
    gen->add_option("file", file)->required();
    gen->add_option("--variant", variant)
        ->check(CLI::IsMember({"right-flat", "left-flat"}));
    gen->add_flag("--allow-empty-words", allow_empty);
    auto* chk = pcp->add_subcommand("check", "verify a tile sequence");
    chk->add_option("file", file)->required();
    chk->add_option("--solution", solution)->required();
    auto* der = pcp->add_subcommand("derive", "emit the 0 <->* 1 trace");
    der->add_option("file", file)->required();
    der->add_option("--solution", solution)->required();
    der->add_option("--variant", variant)
        ->check(CLI::IsMember({"right-flat", "left-flat"}));

    auto* trace = app.add_subcommand("trace", "proof trace utilities");
    trace->require_subcommand(1);
    auto* tv = trace->add_subcommand("verify", "check a trace certificate");
    tv->add_option("file", file)->required();
    tv->add_option("trace", trace_file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check_un(file, json);
        if (word->parsed())
            return cmd_word(file, t1, t2, oracle, size_cap, step_cap, json);
        if (clo->parsed()) return cmd_closure(file, json);
        if (fl->parsed()) return cmd_flatten(file);
        if (nf->parsed()) return cmd_nf(file, max_height, cap);
        if (pcp->parsed()) {
            untrs::PcpInstance P = untrs::parse_pcp(slurp(file));
            if (gen->parsed()) {
                untrs::Trs R = variant == "right-flat"
                                   ? untrs::generate_right_flat(P, allow_empty)
                                   : untrs::generate_left_flat(P, allow_empty);
                std::cout << untrs::print_trs(R);
                return 0;
            }
            if (chk->parsed()) {
                bool ok = untrs::verify_solution(P, parse_solution(solution));
                std::cout << (ok ? "solution\n" : "not a solution\n");
                return ok ? 0 : 1;
            }
            untrs::ProofTrace tr = untrs::solution_derivation(
                P, parse_solution(solution),
                variant == "right-flat" ? untrs::PcpVariant::right_flat
                                        : untrs::PcpVariant::left_flat);
            std::cout << untrs::trace_to_json(tr).dump(2) << "\n";
            return 0;
        }
        if (trace->parsed()) return cmd_trace_verify(file, trace_file);
    } catch (const untrs::Error& e) {
        std::cerr << error_json(e).dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << error_json(untrs::Error("internal", e.what())).dump(2)
                  << "\n";
        return 2;
    }
    return 2;
}
