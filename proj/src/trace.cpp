#include "untrs/trace.hpp"

namespace untrs {

namespace {

Position operator+(const Position& a, const Position& b) {
    Position out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

bool check_step(const Term& cur, const TraceStep& st, const EquationSet& E,
                Term& next, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (st.eq < 0 || static_cast<std::size_t>(st.eq) >= E.eqs.size())
        return fail("step references unknown equation " + std::to_string(st.eq));
    const Equation& eq = E.eqs[st.eq];
    const Term& src = st.reversed ? eq.rhs : eq.lhs;
    const Term& dst = st.reversed ? eq.lhs : eq.rhs;
    Term expect = apply_subst(src, st.subst);
    const Term* sub;
    try {
        sub = &subterm_at(cur, st.pos);
    } catch (const Error&) {
        return fail("step position " + to_string(st.pos) + " is not in " +
                    to_string(cur));
    }
    if (!(*sub == expect))
        return fail("at " + to_string(st.pos) + ": found " + to_string(*sub) +
                    ", equation " + std::to_string(st.eq) + " expects " +
                    to_string(expect));
    next = replace_at(cur, st.pos, apply_subst(dst, st.subst));
    return true;
}

}  // namespace

bool verify_trace(const ProofTrace& tr, const EquationSet& E, std::string* why) {
    Term cur = tr.from;
    for (std::size_t i = 0; i < tr.steps.size(); ++i) {
        Term next;
        std::string reason;
        if (!check_step(cur, tr.steps[i], E, next, &reason)) {
            if (why) *why = "step " + std::to_string(i) + ": " + reason;
            return false;
        }
        if (tr.lowered &&
            E.eqs[tr.steps[i].eq].origin != EqOrigin::FromRule) {
            if (why)
                *why = "step " + std::to_string(i) +
                       " uses a derived equation in a lowered trace";
            return false;
        }
        cur = std::move(next);
    }
    if (!(cur == tr.to)) {
        if (why)
            *why = "trace ends at " + to_string(cur) + ", expected " +
                   to_string(tr.to);
        return false;
    }
    return true;
}

namespace {

// Rewrites `from` into `to` at `pos` using eq or, via provenance, the
// FromRule equations it was derived from. Appends to `out`; false if
// (from, to) is not a joint instance of eq in either orientation.
bool expand(const EquationSet& E, const Equation& eq, const Term& from,
            const Term& to, const Position& pos, std::vector<TraceStep>& out) {
    for (bool fwd : {true, false}) {
        auto tau = fwd ? match_pair(eq.lhs, from, eq.rhs, to)
                       : match_pair(eq.lhs, to, eq.rhs, from);
        if (!tau) continue;
        std::vector<TraceStep> local;
        bool ok = true;
        switch (eq.origin) {
        case EqOrigin::FromRule:
            local.push_back(TraceStep{pos, eq.id, !fwd, *tau});
            break;
        case EqOrigin::Infer1:
        case EqOrigin::Infer2: {
            Term m = apply_subst(eq.mid, *tau);
            const Equation& first = E.eqs[fwd ? eq.p1 : eq.p2];
            const Equation& second = E.eqs[fwd ? eq.p2 : eq.p1];
            ok = expand(E, first, from, m, pos, local) &&
                 expand(E, second, m, to, pos, local);
            break;
        }
        case EqOrigin::Infer3: {
            Term m = apply_subst(eq.mid, *tau);
            if (fwd) {
                // from = lhs instance (constant replaced), m restores it
                ok = expand(E, E.eqs[eq.p2], subterm_at(from, eq.occ),
                            subterm_at(m, eq.occ), pos + eq.occ, local) &&
                     expand(E, E.eqs[eq.p1], m, to, pos, local);
            } else {
                ok = expand(E, E.eqs[eq.p1], from, m, pos, local) &&
                     expand(E, E.eqs[eq.p2], subterm_at(m, eq.occ),
                            subterm_at(to, eq.occ), pos + eq.occ, local);
            }
            break;
        }
        }
        if (ok) {
            out.insert(out.end(), local.begin(), local.end());
            return true;
        }
    }
    return false;
}

}  // namespace

ProofTrace lower_trace(const ProofTrace& tr, const EquationSet& E) {
    std::string why;
    if (!verify_trace(tr, E, &why))
        throw Error("invalid-trace", "cannot lower: " + why);
    ProofTrace out;
    out.from = tr.from;
    out.to = tr.to;
    out.lowered = true;
    Term cur = tr.from;
    for (const TraceStep& st : tr.steps) {
        const Equation& eq = E.eqs[st.eq];
        const Term& dst = st.reversed ? eq.lhs : eq.rhs;
        Term next = replace_at(cur, st.pos, apply_subst(dst, st.subst));
        if (!expand(E, eq, subterm_at(cur, st.pos), subterm_at(next, st.pos),
                    st.pos, out.steps))
            throw Error("invalid-trace",
                        "provenance of equation " + std::to_string(st.eq) +
                            " does not cover this step");
        cur = std::move(next);
    }
    return out;
}

nlohmann::json trace_to_json(const ProofTrace& tr) {
    nlohmann::json steps = nlohmann::json::array();
    for (const TraceStep& st : tr.steps) {
        nlohmann::json sub = nlohmann::json::object();
        for (const auto& [x, t] : st.subst) sub[x] = to_string(t);
        steps.push_back({{"pos", st.pos},
                         {"eq", st.eq},
                         {"dir", st.reversed ? "rl" : "lr"},
                         {"subst", sub}});
    }
    return {{"endpoints", {to_string(tr.from), to_string(tr.to)}},
            {"steps", steps},
            {"lowered", tr.lowered}};
}

ProofTrace trace_from_json(
    const nlohmann::json& j,
    const std::function<Term(const std::string&)>& parse) {
    ProofTrace tr;
    try {
        tr.from = parse(j.at("endpoints").at(0).get<std::string>());
        tr.to = parse(j.at("endpoints").at(1).get<std::string>());
        tr.lowered = j.value("lowered", false);
        for (const auto& js : j.at("steps")) {
            TraceStep st;
            st.pos = js.at("pos").get<Position>();
            st.eq = js.at("eq").get<int>();
            std::string dir = js.at("dir").get<std::string>();
            if (dir != "lr" && dir != "rl")
                throw Error("invalid-trace", "bad step direction: " + dir);
            st.reversed = dir == "rl";
            for (const auto& [x, t] : js.at("subst").items())
                st.subst[x] = parse(t.get<std::string>());
            tr.steps.push_back(std::move(st));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error("invalid-trace", std::string("malformed trace: ") + e.what());
    }
    return tr;
}

}  // namespace untrs
