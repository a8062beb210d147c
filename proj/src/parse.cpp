#include "untrs/parse.hpp"

#include <cctype>
#include <sstream>

namespace untrs {

namespace {

[[noreturn]] void syntax_error(std::size_t line, std::size_t col,
                               const std::string& what) {
    throw Error("syntax-error", "line " + std::to_string(line) + ", column " +
                                    std::to_string(col) + ": " + what);
}

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

struct TermParser {
    const std::string& s;
    std::size_t line;
    std::size_t pos = 0;
    const std::set<std::string>& vars;
    std::map<std::string, std::size_t>& arity;  // inferred and enforced

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) {
        syntax_error(line, pos + 1, what);
    }

    std::string ident() {
        skip_ws();
        if (pos >= s.size()) fail("expected identifier, got end of input");
        std::size_t start = pos;
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            while (pos < s.size() &&
                   std::isdigit(static_cast<unsigned char>(s[pos])))
                ++pos;
        } else if (ident_start(s[pos])) {
            while (pos < s.size() && ident_char(s[pos])) ++pos;
        } else {
            fail(std::string("unexpected character '") + s[pos] + "'");
        }
        return s.substr(start, pos - start);
    }

    Term term() {
        std::size_t at = pos;
        std::string name = ident();
        skip_ws();
        std::vector<Term> args;
        bool applied = false;
        if (pos < s.size() && s[pos] == '(') {
            applied = true;
            ++pos;
            skip_ws();
            if (pos < s.size() && s[pos] == ')') {
                ++pos;
            } else {
                for (;;) {
                    args.push_back(term());
                    skip_ws();
                    if (pos < s.size() && s[pos] == ',') {
                        ++pos;
                        continue;
                    }
                    if (pos < s.size() && s[pos] == ')') {
                        ++pos;
                        break;
                    }
                    fail("expected ',' or ')'");
                }
            }
        }
        if (vars.count(name)) {
            if (applied)
                syntax_error(line, at + 1,
                             "variable " + name + " used with arguments");
            return Term::var(name);
        }
        auto it = arity.find(name);
        if (it == arity.end()) {
            arity[name] = args.size();
        } else if (it->second != args.size()) {
            throw Error("arity-conflict",
                        "line " + std::to_string(line) + ": " + name +
                            " used with " + std::to_string(args.size()) +
                            " arguments but has arity " +
                            std::to_string(it->second));
        }
        return Term::app(name, std::move(args));
    }

    Term parse_all(const char* what) {
        Term t = term();
        skip_ws();
        if (pos < s.size()) fail(std::string("trailing input after ") + what);
        return t;
    }
};

std::string strip_comment(const std::string& line) {
    auto h = line.find('#');
    std::string out = h == std::string::npos ? line : line.substr(0, h);
    while (!out.empty() && (out.back() == ' ' || out.back() == '\t' ||
                            out.back() == '\r'))
        out.pop_back();
    return out;
}

std::vector<std::string> words_of(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

}  // namespace

Trs parse_trs(const std::string& text) {
    Trs R;
    std::map<std::string, std::size_t> arity;
    std::istringstream is(text);
    std::string raw;
    std::size_t lineno = 0;
    std::vector<std::pair<std::size_t, std::string>> rule_lines;

    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        auto ws = words_of(line);
        if (ws.empty()) continue;
        if (ws[0] == "vars") {
            for (std::size_t i = 1; i < ws.size(); ++i) {
                const std::string& v = ws[i];
                if (!ident_start(v[0]))
                    syntax_error(lineno, line.find(v) + 1,
                                 "bad variable name: " + v);
                R.declared_vars.insert(v);
            }
            continue;
        }
        if (ws[0] == "sig") {
            for (std::size_t i = 1; i < ws.size(); ++i) {
                auto slash = ws[i].find('/');
                if (slash == std::string::npos || slash == 0 ||
                    slash + 1 == ws[i].size())
                    syntax_error(lineno, line.find(ws[i]) + 1,
                                 "expected name/arity, got " + ws[i]);
                std::string name = ws[i].substr(0, slash);
                std::size_t a;
                try {
                    a = std::stoul(ws[i].substr(slash + 1));
                } catch (const std::exception&) {
                    syntax_error(lineno, line.find(ws[i]) + 1,
                                 "bad arity in " + ws[i]);
                }
                auto it = arity.find(name);
                if (it != arity.end() && it->second != a)
                    throw Error("arity-conflict",
                                "line " + std::to_string(lineno) + ": " + name +
                                    " redeclared with arity " +
                                    std::to_string(a));
                arity[name] = a;
            }
            continue;
        }
        rule_lines.push_back({lineno, line});
    }

    int id = 0;
    for (auto& [ln, line] : rule_lines) {
        std::string body = line;
        if (body.rfind("rule:", 0) == 0) body = body.substr(5);
        auto arrow = body.find("->");
        if (arrow == std::string::npos)
            syntax_error(ln, body.size() + 1, "expected '->' in rule");
        std::string lhs_s = body.substr(0, arrow);
        std::string rhs_s = body.substr(arrow + 2);
        TermParser lp{lhs_s, ln, 0, R.declared_vars, arity};
        Term lhs = lp.parse_all("left-hand side");
        if (lhs.is_var())
            throw Error("variable-as-lhs",
                        "line " + std::to_string(ln) +
                            ": rule left-hand side cannot be a variable");
        TermParser rp{rhs_s, ln, 0, R.declared_vars, arity};
        Term rhs = rp.parse_all("right-hand side");
        R.rules.push_back(Rule{id++, std::move(lhs), std::move(rhs)});
    }
    R.signature = std::move(arity);
    return R;
}

Term parse_term(const std::string& text, const Trs& R) {
    std::map<std::string, std::size_t> arity = R.signature;
    TermParser p{text, 1, 0, R.declared_vars, arity};
    return p.parse_all("term");
}

std::string print_trs(const Trs& R) {
    std::ostringstream os;
    // symbols inferable from the rules need no sig line
    std::map<std::string, std::size_t> used = R.rule_symbols();
    std::string sig_line;
    for (const auto& [name, a] : R.signature)
        if (!used.count(name))
            sig_line += " " + name + "/" + std::to_string(a);
    if (!sig_line.empty()) os << "sig" << sig_line << "\n";
    if (!R.declared_vars.empty()) {
        os << "vars";
        for (const std::string& v : R.declared_vars) os << " " << v;
        os << "\n";
    }
    for (const Rule& r : R.rules)
        os << to_string(r.lhs) << " -> " << to_string(r.rhs) << "\n";
    return os.str();
}

PcpInstance parse_pcp(const std::string& text) {
    PcpInstance P;
    std::istringstream is(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        auto ws = words_of(line);
        if (ws.empty()) continue;
        if (ws[0] == "alphabet:") {
            for (std::size_t i = 1; i < ws.size(); ++i)
                P.alphabet.push_back(ws[i]);
            continue;
        }
        if (ws[0] == "tile:") {
            // tile: word / word  (words as letter strings)
            std::vector<std::vector<std::string>> sides;
            std::vector<std::string> cur;
            bool saw_slash = false;
            for (std::size_t i = 1; i < ws.size(); ++i) {
                if (ws[i] == "/") {
                    if (saw_slash) syntax_error(lineno, 1, "extra '/' in tile");
                    saw_slash = true;
                    sides.push_back(cur);
                    cur.clear();
                    continue;
                }
                for (char c : ws[i]) cur.push_back(std::string(1, c));
            }
            if (!saw_slash) syntax_error(lineno, 1, "expected 'tile: u / v'");
            sides.push_back(cur);
            P.tiles.push_back({sides[0], sides[1]});
            continue;
        }
        syntax_error(lineno, 1, "expected 'alphabet:' or 'tile:' line");
    }
    return P;
}

std::string print_pcp(const PcpInstance& P) {
    std::ostringstream os;
    os << "alphabet:";
    for (const std::string& g : P.alphabet) os << " " << g;
    os << "\n";
    for (const auto& [u, v] : P.tiles) {
        os << "tile: ";
        for (const std::string& g : u) os << g;
        os << " / ";
        for (const std::string& g : v) os << g;
        os << "\n";
    }
    return os.str();
}

}  // namespace untrs
