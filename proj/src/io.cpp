#include "synkit/io.hpp"

#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace synkit {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    }
    return out;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

long long parse_number(const Line& line, const std::string& tok) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 0) parse_fail(line.number, "expected a non-negative integer, got '" + tok + "'");
        return v;
    } catch (const std::logic_error&) {
        parse_fail(line.number, "expected a non-negative integer, got '" + tok + "'");
    }
}

}  // namespace

ParsedAut parse_aut(const std::string& text) {
    std::optional<Alphabet> alphabet;
    std::optional<long long> states;
    std::optional<long long> initial;
    std::optional<std::vector<long long>> finals;
    bool partial = false;
    std::map<std::pair<long long, Letter>, long long> trans;

    for (const Line& line : tokenize_lines(text)) {
        const std::string& head = line.tokens[0];
        if (head == "alphabet") {
            if (alphabet) parse_fail(line.number, "duplicate alphabet directive");
            if (line.tokens.size() < 2) parse_fail(line.number, "alphabet needs at least one symbol");
            try {
                alphabet = Alphabet(std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end()));
            } catch (const Error& e) {
                parse_fail(line.number, e.what());
            }
        } else if (head == "states") {
            if (states) parse_fail(line.number, "duplicate states directive");
            if (line.tokens.size() != 2) parse_fail(line.number, "states needs exactly one count");
            states = parse_number(line, line.tokens[1]);
            if (*states > 1000000) parse_fail(line.number, "state count too large");
        } else if (head == "initial") {
            if (initial) parse_fail(line.number, "duplicate initial directive");
            if (!states) parse_fail(line.number, "initial must come after states");
            if (line.tokens.size() != 2) parse_fail(line.number, "initial needs exactly one state");
            initial = parse_number(line, line.tokens[1]);
            if (*initial >= *states) parse_fail(line.number, "initial state out of range");
        } else if (head == "final") {
            if (finals) parse_fail(line.number, "duplicate final directive");
            if (!states) parse_fail(line.number, "final must come after states");
            finals = std::vector<long long>();
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                long long q = parse_number(line, line.tokens[i]);
                if (q >= *states) parse_fail(line.number, "final state out of range");
                finals->push_back(q);
            }
        } else if (head == "partial") {
            if (partial) parse_fail(line.number, "duplicate partial directive");
            if (line.tokens.size() != 1) parse_fail(line.number, "partial takes no arguments");
            partial = true;
        } else if (head == "trans") {
            if (!alphabet) parse_fail(line.number, "trans must come after alphabet");
            if (!states) parse_fail(line.number, "trans must come after states");
            if (line.tokens.size() != 4) parse_fail(line.number, "trans needs <state> <symbol> <state>");
            long long q = parse_number(line, line.tokens[1]);
            auto a = alphabet->index_of(line.tokens[2]);
            long long p = parse_number(line, line.tokens[3]);
            if (q >= *states || p >= *states) parse_fail(line.number, "trans state out of range");
            if (!a) parse_fail(line.number, "unknown symbol '" + line.tokens[2] + "'");
            auto [it, inserted] = trans.emplace(std::make_pair(q, *a), p);
            if (!inserted)
                parse_fail(line.number, "duplicate transition for state " + std::to_string(q) + " and symbol '" +
                                            line.tokens[2] + "'");
        } else {
            parse_fail(line.number, "unknown directive '" + head + "'");
        }
    }

    if (!alphabet) throw Error(ErrorCode::Parse, "missing alphabet directive");
    if (!states) throw Error(ErrorCode::Parse, "missing states directive");
    const int n = static_cast<int>(*states);
    const int k = alphabet->size();

    bool acceptor_like = initial.has_value() || finals.has_value() || partial || n == 0;
    bool complete = static_cast<long long>(trans.size()) == static_cast<long long>(n) * k;

    if (!acceptor_like) {
        if (!complete) {
            for (long long q = 0; q < n; ++q)
                for (Letter a = 0; a < k; ++a)
                    if (!trans.count({q, a}))
                        throw Error(ErrorCode::Parse, "missing transition for state " + std::to_string(q) +
                                                          " and symbol '" + alphabet->symbol(a) +
                                                          "' (add 'partial' for a partial acceptor)");
        }
        Semiautomaton out(*alphabet, n);
        for (const auto& [key, p] : trans) out.set(static_cast<State>(key.first), key.second, static_cast<State>(p));
        return out;
    }

    if (n == 0) {
        if (initial || (finals && !finals->empty()) || !trans.empty())
            throw Error(ErrorCode::Parse, "a 0-state acceptor admits no initial, final or trans directives");
        return Acceptor(*alphabet, 0);
    }
    if (!initial) throw Error(ErrorCode::Parse, "an acceptor with states needs an initial directive");
    if (!partial && !complete)
        throw Error(ErrorCode::Parse, "transition table incomplete; add 'partial' or the missing transitions");

    Acceptor out(*alphabet, n);
    out.initial = static_cast<State>(*initial);
    if (finals)
        for (long long q : *finals) out.final_mask[static_cast<std::size_t>(q)] = true;
    for (const auto& [key, p] : trans) out.set(static_cast<State>(key.first), key.second, static_cast<State>(p));
    return out;
}

namespace {

void serialize_common(std::ostringstream& out, const Alphabet& alphabet, int n) {
    out << "alphabet";
    for (const auto& s : alphabet.symbols()) out << ' ' << s;
    out << "\nstates " << n << '\n';
}

void serialize_trans(std::ostringstream& out, const Alphabet& alphabet, int n,
                     const std::vector<State>& delta) {
    const int k = alphabet.size();
    for (State q = 0; q < n; ++q)
        for (Letter a = 0; a < k; ++a) {
            State p = delta[static_cast<std::size_t>(q) * k + a];
            if (p != Acceptor::kUndefined) out << "trans " << q << ' ' << alphabet.symbol(a) << ' ' << p << '\n';
        }
}

}  // namespace

std::string serialize_aut(const Semiautomaton& a) {
    std::ostringstream out;
    serialize_common(out, a.alphabet, a.n);
    serialize_trans(out, a.alphabet, a.n, a.delta);
    return out.str();
}

std::string serialize_aut(const Acceptor& a) {
    std::ostringstream out;
    serialize_common(out, a.alphabet, a.n);
    if (a.n == 0) {
        out << "partial\n";
        return out.str();
    }
    out << "initial " << a.initial << '\n';
    std::vector<State> finals;
    for (State q = 0; q < a.n; ++q)
        if (a.is_final(q)) finals.push_back(q);
    if (!finals.empty()) {
        out << "final";
        for (State q : finals) out << ' ' << q;
        out << '\n';
    }
    if (a.is_partial()) out << "partial\n";
    serialize_trans(out, a.alphabet, a.n, a.delta);
    return out.str();
}

std::string serialize_aut(const ParsedAut& aut) {
    if (std::holds_alternative<Semiautomaton>(aut)) return serialize_aut(std::get<Semiautomaton>(aut));
    return serialize_aut(std::get<Acceptor>(aut));
}

std::pair<Alphabet, std::vector<Word>> parse_words(const std::string& text) {
    std::optional<Alphabet> alphabet;
    std::vector<Word> words;
    for (const Line& line : tokenize_lines(text)) {
        if (!alphabet) {
            if (line.tokens[0] != "alphabet")
                parse_fail(line.number, "word list must start with an alphabet directive");
            if (line.tokens.size() < 2) parse_fail(line.number, "alphabet needs at least one symbol");
            try {
                alphabet = Alphabet(std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end()));
            } catch (const Error& e) {
                parse_fail(line.number, e.what());
            }
            continue;
        }
        std::string joined;
        for (std::size_t i = 0; i < line.tokens.size(); ++i) {
            if (i > 0) joined += ' ';
            joined += line.tokens[i];
        }
        try {
            words.push_back(alphabet->parse_word(joined));
        } catch (const Error& e) {
            parse_fail(line.number, e.what());
        }
    }
    if (!alphabet) throw Error(ErrorCode::Parse, "missing alphabet directive");
    return {*alphabet, std::move(words)};
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string render_dot(const Alphabet& alphabet, int n, const std::vector<State>& delta,
                       std::optional<State> initial, const std::vector<bool>* final_mask,
                       const std::vector<std::string>& labels) {
    const int k = alphabet.size();
    std::ostringstream out;
    out << "digraph automaton {\n  rankdir=LR;\n";
    if (initial && n > 0) out << "  __init [shape=point, label=\"\"];\n";
    for (State q = 0; q < n; ++q) {
        bool fin = final_mask != nullptr && (*final_mask)[static_cast<std::size_t>(q)];
        std::string label = labels.empty() ? std::to_string(q) : labels[static_cast<std::size_t>(q)];
        out << "  q" << q << " [shape=" << (fin ? "doublecircle" : "circle") << ", label=\"" << dot_escape(label)
            << "\"];\n";
    }
    if (initial && n > 0) out << "  __init -> q" << *initial << ";\n";
    for (State q = 0; q < n; ++q) {
        std::map<State, std::string> merged;
        for (Letter a = 0; a < k; ++a) {
            State p = delta[static_cast<std::size_t>(q) * k + a];
            if (p == Acceptor::kUndefined) continue;
            auto& lbl = merged[p];
            if (!lbl.empty()) lbl += ',';
            lbl += alphabet.symbol(a);
        }
        for (const auto& [p, lbl] : merged)
            out << "  q" << q << " -> q" << p << " [label=\"" << dot_escape(lbl) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace

std::string export_dot(const ParsedAut& aut, const std::vector<std::string>& labels) {
    if (std::holds_alternative<Semiautomaton>(aut)) {
        const auto& a = std::get<Semiautomaton>(aut);
        return render_dot(a.alphabet, a.n, a.delta, std::nullopt, nullptr, labels);
    }
    const auto& a = std::get<Acceptor>(aut);
    std::optional<State> initial;
    if (a.n > 0) initial = a.initial;
    return render_dot(a.alphabet, a.n, a.delta, initial, &a.final_mask, labels);
}

namespace {

std::string format_trace(const TraceVector& x) {
    std::string out = "[";
    for (std::size_t i = 0; i < x.residues.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(x.residues[i]);
    }
    out += ']';
    return out;
}

}  // namespace

std::string format_tail_state(const TailState& s, const Alphabet& alphabet) {
    std::string out = "(" + alphabet.symbol(s.b) + ", " + format_trace(s.x) + ", {";
    for (std::size_t i = 0; i < s.omega.triples.size(); ++i) {
        const auto& t = s.omega.triples[i];
        if (i > 0) out += ", ";
        out += "(" + (t.head < 0 ? std::string("eps") : alphabet.symbol(t.head)) + "," + format_trace(t.trace) + "," +
               std::to_string(t.b_state) + ")";
    }
    out += "})";
    return out;
}

std::string format_tail_structure(const TailStructure& ts, const Alphabet& alphabet) {
    return "(" + alphabet.format_word(ts.lambda) + ", " + alphabet.format_word(ts.tau) + ")";
}

std::string format_analysis_text(const SyncReport& sync, const std::optional<MissingFactorReport>& mf,
                                 const Alphabet& alphabet) {
    std::ostringstream out;
    out << "states: " << sync.n << '\n';
    out << "strongly connected: " << (sync.strongly_connected ? "yes" : "no") << '\n';
    out << "synchronizing: " << (sync.is_synchronizing ? "yes" : "no") << '\n';
    if (!sync.is_synchronizing) return out.str();
    out << "shortest reset word: " << alphabet.format_word(*sync.shortest_reset) << " (length "
        << sync.shortest_reset->size() << ")\n";
    out << "cerny bound (n-1)^2: " << sync.cerny_bound << '\n';
    out << "cerny bound satisfied: " << (sync.bound_satisfied ? "yes" : "no") << '\n';
    if (!mf) return out.str();
    if (!mf->ell_star) {
        out << "missing factor: none found within the length limit\n";
        return out.str();
    }
    out << "missing factor: length " << *mf->ell_star << ", witness " << alphabet.format_word(*mf->witness) << '\n';
    out << "reset bound n(n-1)/2+2l: " << *mf->bound << '\n';
    out << "reset bound verified: " << (*mf->bound_verified ? "yes" : "FALSIFIED") << '\n';
    out << "cerny criterion applicable: " << (mf->cerny_applicable ? "yes" : "no") << '\n';
    out << "quadratic criterion applicable: " << (mf->quadratic_applicable ? "yes" : "no") << '\n';
    out << "quadratic bound (n-1/2)^2: " << mf->quadratic_bound_num << '/' << mf->quadratic_bound_den << '\n';
    return out.str();
}

std::string format_analysis_json(const SyncReport& sync, const std::optional<MissingFactorReport>& mf,
                                 const Alphabet& alphabet) {
    nlohmann::ordered_json j;
    j["states"] = sync.n;
    j["strongly_connected"] = sync.strongly_connected;
    j["synchronizing"] = sync.is_synchronizing;
    j["cerny_bound"] = sync.cerny_bound;
    if (sync.shortest_reset) {
        j["shortest_reset_word"] = alphabet.format_word(*sync.shortest_reset);
        j["shortest_reset_length"] = sync.shortest_reset->size();
        j["cerny_bound_satisfied"] = sync.bound_satisfied;
    }
    if (mf) {
        nlohmann::ordered_json f;
        if (mf->ell_star) {
            f["ell_star"] = *mf->ell_star;
            f["witness"] = alphabet.format_word(*mf->witness);
            f["bound"] = *mf->bound;
            f["bound_verified"] = *mf->bound_verified;
            f["cerny_applicable"] = mf->cerny_applicable;
            f["quadratic_applicable"] = mf->quadratic_applicable;
            f["quadratic_bound"] = {{"num", mf->quadratic_bound_num}, {"den", mf->quadratic_bound_den}};
        } else {
            f["ell_star"] = nullptr;
        }
        j["missing_factor"] = f;
    }
    return j.dump(2) + "\n";
}

std::string format_factors_text(const std::optional<std::pair<long long, Word>>& hit, long long ell_max,
                                const Alphabet& alphabet) {
    std::ostringstream out;
    if (!hit) {
        out << "missing factor: none up to length " << ell_max << '\n';
    } else {
        out << "missing factor length: " << hit->first << '\n';
        out << "witness: " << alphabet.format_word(hit->second) << '\n';
    }
    return out.str();
}

std::string format_factors_json(const std::optional<std::pair<long long, Word>>& hit, long long ell_max,
                                const Alphabet& alphabet) {
    nlohmann::ordered_json j;
    j["ell_max"] = ell_max;
    if (hit) {
        j["ell_star"] = hit->first;
        j["witness"] = alphabet.format_word(hit->second);
    } else {
        j["ell_star"] = nullptr;
    }
    return j.dump(2) + "\n";
}

std::string format_verdict_text(const Verdict& v, const Alphabet& alphabet) {
    std::ostringstream out;
    out << (v.ok ? "verified" : "FALSIFIED") << ": " << v.detail << '\n';
    if (v.counterexample) out << "counterexample: " << alphabet.format_word(*v.counterexample) << '\n';
    return out.str();
}

std::string format_lifted_text(const LiftedExploration& e, const Alphabet& alphabet) {
    std::ostringstream out;
    out << "states: " << e.states.size() << '\n';
    for (std::size_t i = 0; i < e.states.size(); ++i)
        out << "  " << i << ": " << format_tail_structure(e.states[i], alphabet) << '\n';
    out << "transitions:\n";
    for (const auto& edge : e.edges) {
        out << "  " << edge.from << " -" << alphabet.symbol(edge.letter) << "-> ";
        if (edge.to)
            out << *edge.to << '\n';
        else
            out << "open " << format_tail_structure(edge.target, alphabet) << '\n';
    }
    return out.str();
}

std::string format_lifted_dot(const LiftedExploration& e, const Alphabet& alphabet) {
    std::ostringstream out;
    out << "digraph lifted {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < e.states.size(); ++i)
        out << "  q" << i << " [shape=circle, label=\"" << dot_escape(format_tail_structure(e.states[i], alphabet))
            << "\"];\n";
    int open_id = 0;
    for (const auto& edge : e.edges) {
        if (edge.to) {
            out << "  q" << edge.from << " -> q" << *edge.to << " [label=\"" << alphabet.symbol(edge.letter)
                << "\"];\n";
        } else {
            out << "  open" << open_id << " [shape=none, label=\""
                << dot_escape(format_tail_structure(edge.target, alphabet)) << "\"];\n";
            out << "  q" << edge.from << " -> open" << open_id << " [style=dashed, label=\""
                << alphabet.symbol(edge.letter) << "\"];\n";
            ++open_id;
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace synkit
