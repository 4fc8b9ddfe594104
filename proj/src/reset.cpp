#include "synkit/reset.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace synkit {

bool is_synchronizing(const Semiautomaton& a) {
    a.validate();
    const int n = a.n;
    const int k = a.alphabet.size();
    if (n == 1) return true;
    if (n > 20000)
        throw Error(ErrorCode::LimitExceeded,
                    "pair-merge synchronization test needs O(n^2) space; refusing n = " + std::to_string(n));

    // every unordered pair {p,q} must reach a singleton; backward closure
    // over the pair graph from the diagonal, with pair predecessors
    // enumerated through per-state reverse lists
    std::vector<std::vector<State>> rev(static_cast<std::size_t>(n) * k);
    for (State q = 0; q < n; ++q)
        for (Letter x = 0; x < k; ++x) rev[static_cast<std::size_t>(a.step(q, x)) * k + x].push_back(q);

    auto pid = [n](State p, State q) {
        if (p > q) std::swap(p, q);
        return static_cast<std::size_t>(p) * n + q;
    };
    std::vector<bool> mergeable(static_cast<std::size_t>(n) * n, false);
    std::size_t marked = 0;
    std::deque<std::pair<State, State>> queue;
    for (State p = 0; p < n; ++p) {
        mergeable[pid(p, p)] = true;
        ++marked;
        queue.emplace_back(p, p);
    }
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        for (Letter x = 0; x < k; ++x) {
            const auto& rp = rev[static_cast<std::size_t>(p) * k + x];
            const auto& rq = rev[static_cast<std::size_t>(q) * k + x];
            for (State pp : rp)
                for (State qq : rq) {
                    std::size_t t = pid(pp, qq);
                    if (!mergeable[t]) {
                        mergeable[t] = true;
                        ++marked;
                        queue.emplace_back(pp, qq);
                    }
                }
        }
    }
    return marked == static_cast<std::size_t>(n) * (n + 1) / 2;
}

namespace {

StateSet full_set(int n) {
    StateSet s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = i;
    return s;
}

StateSet set_step(const Semiautomaton& a, const StateSet& s, Letter x) {
    StateSet next;
    next.reserve(s.size());
    for (State q : s) next.push_back(a.step(q, x));
    return sorted_unique(std::move(next));
}

}  // namespace

std::optional<Word> shortest_reset_word(const Semiautomaton& a) {
    a.validate();
    const int k = a.alphabet.size();
    StateSet start = full_set(a.n);
    if (start.size() == 1) return Word{};

    struct Node {
        State parent;
        Letter letter;
    };
    std::map<StateSet, State> ids;
    std::vector<Node> nodes;
    std::vector<StateSet> subsets;
    ids.emplace(start, 0);
    nodes.push_back({-1, -1});
    subsets.push_back(start);
    for (State cur = 0; cur < static_cast<State>(subsets.size()); ++cur) {
        for (Letter x = 0; x < k; ++x) {
            StateSet next = set_step(a, subsets[static_cast<std::size_t>(cur)], x);
            auto it = ids.find(next);
            if (it != ids.end()) continue;
            if (subsets.size() >= (1u << 22))
                throw Error(ErrorCode::LimitExceeded, "power-automaton search exceeded the subset budget");
            State id = static_cast<State>(subsets.size());
            ids.emplace(next, id);
            nodes.push_back({cur, x});
            if (next.size() == 1) {
                Word w;
                State s = id;
                while (nodes[static_cast<std::size_t>(s)].parent != -1) {
                    w.push_back(nodes[static_cast<std::size_t>(s)].letter);
                    s = nodes[static_cast<std::size_t>(s)].parent;
                }
                std::reverse(w.begin(), w.end());
                return w;
            }
            subsets.push_back(std::move(next));
        }
    }
    return std::nullopt;
}

SyncReport sync_report(const Semiautomaton& a) {
    SyncReport r;
    r.n = a.n;
    r.strongly_connected = is_strongly_connected(a);
    r.cerny_bound = static_cast<long long>(a.n - 1) * (a.n - 1);
    r.is_synchronizing = is_synchronizing(a);
    if (r.is_synchronizing) {
        r.shortest_reset = shortest_reset_word(a);
        r.bound_satisfied = static_cast<long long>(r.shortest_reset->size()) <= r.cerny_bound;
    }
    return r;
}

Acceptor syn_recognizer(const Semiautomaton& a, std::size_t state_limit) {
    a.validate();
    const int k = a.alphabet.size();
    std::map<StateSet, State> ids;
    std::vector<StateSet> subsets;
    std::vector<State> table;
    std::vector<bool> finals;

    auto intern = [&](StateSet s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        if (subsets.size() >= state_limit)
            throw Error(ErrorCode::LimitExceeded,
                        "power automaton exceeded the state budget of " + std::to_string(state_limit));
        State id = static_cast<State>(subsets.size());
        ids.emplace(s, id);
        finals.push_back(s.size() == 1);
        subsets.push_back(std::move(s));
        table.resize(subsets.size() * static_cast<std::size_t>(k), Acceptor::kUndefined);
        return id;
    };

    intern(full_set(a.n));
    for (State cur = 0; cur < static_cast<State>(subsets.size()); ++cur)
        for (Letter x = 0; x < k; ++x) {
            State id = intern(set_step(a, subsets[static_cast<std::size_t>(cur)], x));
            table[static_cast<std::size_t>(cur) * k + x] = id;
        }

    Acceptor out(a.alphabet, static_cast<int>(subsets.size()));
    out.initial = 0;
    out.delta = std::move(table);
    out.final_mask = std::move(finals);
    return trim_minimize(out);
}

Acceptor ideal_closure(const Acceptor& l) {
    Acceptor t = trim(l);
    if (t.n == 0) return t;
    const int k = t.alphabet.size();
    // fresh initial with self-loops feeding the old initial's transitions,
    // plus self-loops on finals
    Nfa nfa(t.alphabet, t.n + 1);
    State fresh = t.n;
    nfa.initials = {fresh};
    for (State q = 0; q < t.n; ++q)
        for (Letter a = 0; a < k; ++a) {
            State p = t.step(q, a);
            if (p != Acceptor::kUndefined) nfa.add_transition(q, a, p);
        }
    for (Letter a = 0; a < k; ++a) {
        nfa.add_transition(fresh, a, fresh);
        State p = t.step(t.initial, a);
        if (p != Acceptor::kUndefined) nfa.add_transition(fresh, a, p);
    }
    for (State q = 0; q < t.n; ++q)
        if (t.is_final(q)) {
            nfa.final_mask[static_cast<std::size_t>(q)] = true;
            for (Letter a = 0; a < k; ++a) nfa.add_transition(q, a, q);
        }
    if (t.is_final(t.initial)) nfa.final_mask[static_cast<std::size_t>(fresh)] = true;
    return trim_minimize(determinize(nfa));
}

bool is_ideal(const Acceptor& d) { return equivalent(d, ideal_closure(d)).equal; }

Acceptor minimal_words_recognizer(const Acceptor& i) {
    if (!is_ideal(i)) throw Error(ErrorCode::InvalidInput, "minimal words are defined for ideal languages only");
    // For an ideal: u in Sigma+ I  iff  drop-first(u) in I, i.e. u in Sigma.I;
    // u in I Sigma+ iff drop-last(u) in I, i.e. u in I.Sigma.
    Acceptor left = prepend_any_letter(i);
    Acceptor right = append_any_letter(i);
    return bool_ops(i, bool_ops(left, right, BoolOp::Union), BoolOp::Difference);
}

bool is_factor_free(const Acceptor& m) {
    Acceptor c = ideal_closure(m);
    if (c.n == 0) return true;
    // words with a proper factor in L(m): Sigma+ M Sigma*  u  Sigma* M Sigma+
    Acceptor proper = bool_ops(prepend_any_letter(c), append_any_letter(c), BoolOp::Union);
    return is_empty(bool_ops(m, proper, BoolOp::Intersect));
}

std::optional<long long> ideal_norm(const Acceptor& i) {
    auto w = shortest_accepted(i);
    if (!w) return std::nullopt;
    return static_cast<long long>(w->size());
}

Acceptor state_ideal_recognizer(const Semiautomaton& a, State q, std::size_t state_limit) {
    a.validate();
    if (q < 0 || q >= a.n) throw Error(ErrorCode::InvalidInput, "state index out of range");
    const int k = a.alphabet.size();
    std::map<StateSet, State> ids;
    std::vector<StateSet> subsets;
    std::vector<State> table;
    std::vector<bool> finals;
    StateSet target{q};

    auto intern = [&](StateSet s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        if (subsets.size() >= state_limit)
            throw Error(ErrorCode::LimitExceeded,
                        "power automaton exceeded the state budget of " + std::to_string(state_limit));
        State id = static_cast<State>(subsets.size());
        ids.emplace(s, id);
        finals.push_back(s == target);
        subsets.push_back(std::move(s));
        table.resize(subsets.size() * static_cast<std::size_t>(k), Acceptor::kUndefined);
        return id;
    };

    intern(full_set(a.n));
    for (State cur = 0; cur < static_cast<State>(subsets.size()); ++cur)
        for (Letter x = 0; x < k; ++x)
            table[static_cast<std::size_t>(cur) * k + x] = intern(set_step(a, subsets[static_cast<std::size_t>(cur)], x));

    Acceptor out(a.alphabet, static_cast<int>(subsets.size()));
    out.initial = 0;
    out.delta = std::move(table);
    out.final_mask = std::move(finals);
    return out;
}

Word suffix_prefix_overlap(const Word& u, const Acceptor& m) {
    Acceptor t = trim(m);
    for (std::size_t len = u.size(); len > 0; --len) {
        if (t.n == 0) break;
        Word h = suffix(u, len);
        if (t.run(t.initial, h) != Acceptor::kUndefined) return h;
    }
    return {};
}

}  // namespace synkit
