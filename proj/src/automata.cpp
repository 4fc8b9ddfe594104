#include "synkit/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>

namespace synkit {

Word suffix(const Word& u, std::size_t i) {
    if (i > u.size()) throw Error(ErrorCode::InvalidInput, "suffix length exceeds word length");
    return Word(u.end() - static_cast<std::ptrdiff_t>(i), u.end());
}

Word prefix(const Word& u, std::size_t i) {
    if (i > u.size()) throw Error(ErrorCode::InvalidInput, "prefix length exceeds word length");
    return Word(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(i));
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw Error(ErrorCode::InvalidInput, "alphabet must contain at least one symbol");
    std::set<std::string> seen;
    for (const auto& s : symbols_) {
        if (s.empty()) throw Error(ErrorCode::InvalidInput, "alphabet symbol must be non-empty");
        if (s == "eps") throw Error(ErrorCode::InvalidInput, "'eps' is reserved for the empty word");
        for (char c : s) {
            if (c <= ' ' || c == '#' || static_cast<unsigned char>(c) > 126)
                throw Error(ErrorCode::InvalidInput, "alphabet symbol '" + s + "' contains a non-printable character");
        }
        if (!seen.insert(s).second) throw Error(ErrorCode::InvalidInput, "duplicate alphabet symbol '" + s + "'");
    }
}

std::optional<Letter> Alphabet::index_of(const std::string& symbol) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == symbol) return static_cast<Letter>(i);
    return std::nullopt;
}

std::string Alphabet::format_word(const Word& w) const {
    if (w.empty()) return "eps";
    bool all_single = true;
    for (const auto& s : symbols_)
        if (s.size() != 1) all_single = false;
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && !all_single) out += ' ';
        out += symbol(w[i]);
    }
    return out;
}

Word Alphabet::parse_word(const std::string& text) const {
    if (text == "eps") return {};
    Word w;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        // longest-match tokenization against the symbol list
        std::size_t best_len = 0;
        Letter best = -1;
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            const std::string& s = symbols_[i];
            if (s.size() > best_len && text.compare(pos, s.size(), s) == 0) {
                best_len = s.size();
                best = static_cast<Letter>(i);
            }
        }
        if (best < 0)
            throw Error(ErrorCode::Parse, "cannot tokenize '" + text + "' at position " + std::to_string(pos));
        w.push_back(best);
        pos += best_len;
    }
    return w;
}

Semiautomaton::Semiautomaton(Alphabet alpha, int states)
    : alphabet(std::move(alpha)), n(states),
      delta(static_cast<std::size_t>(states) * alphabet.size(), -1) {}

State Semiautomaton::run(State q, const Word& w) const {
    for (Letter a : w) q = step(q, a);
    return q;
}

void Semiautomaton::validate() const {
    if (n < 1) throw Error(ErrorCode::InvalidInput, "semiautomaton needs at least one state");
    if (delta.size() != static_cast<std::size_t>(n) * alphabet.size())
        throw Error(ErrorCode::InvalidInput, "transition table has the wrong size");
    for (State p : delta)
        if (p < 0 || p >= n) throw Error(ErrorCode::InvalidInput, "transition table is incomplete or out of range");
}

Acceptor::Acceptor(Alphabet alpha, int states)
    : alphabet(std::move(alpha)), n(states),
      delta(static_cast<std::size_t>(states) * alphabet.size(), kUndefined),
      final_mask(static_cast<std::size_t>(states), false) {}

bool Acceptor::is_partial() const {
    for (State p : delta)
        if (p == kUndefined) return true;
    return false;
}

State Acceptor::run(State q, const Word& w) const {
    for (Letter a : w) {
        if (q == kUndefined) return kUndefined;
        q = step(q, a);
    }
    return q;
}

Nfa::Nfa(Alphabet alpha, int states)
    : alphabet(std::move(alpha)), n(states),
      trans(static_cast<std::size_t>(states), std::vector<std::vector<State>>(alphabet.size())),
      final_mask(static_cast<std::size_t>(states), false) {}

void Nfa::add_transition(State q, Letter a, State p) {
    auto& v = trans[static_cast<std::size_t>(q)][static_cast<std::size_t>(a)];
    if (std::find(v.begin(), v.end(), p) == v.end()) v.push_back(p);
}

bool Nfa::simulate(const Word& w) const {
    std::vector<bool> cur(static_cast<std::size_t>(n), false);
    for (State q : initials) cur[static_cast<std::size_t>(q)] = true;
    for (Letter a : w) {
        std::vector<bool> next(static_cast<std::size_t>(n), false);
        for (State q = 0; q < n; ++q)
            if (cur[static_cast<std::size_t>(q)])
                for (State p : trans[static_cast<std::size_t>(q)][static_cast<std::size_t>(a)])
                    next[static_cast<std::size_t>(p)] = true;
        cur = std::move(next);
    }
    for (State q = 0; q < n; ++q)
        if (cur[static_cast<std::size_t>(q)] && final_mask[static_cast<std::size_t>(q)]) return true;
    return false;
}

StateSet sorted_unique(StateSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

StateSet apply(const Semiautomaton& a, const StateSet& s, const Word& w) {
    for (State q : s)
        if (q < 0 || q >= a.n) throw Error(ErrorCode::InvalidInput, "state set contains an out-of-range state");
    for (Letter x : w)
        if (x < 0 || x >= a.alphabet.size()) throw Error(ErrorCode::InvalidInput, "word uses a letter outside the alphabet");
    StateSet cur = sorted_unique(s);
    for (Letter x : w) {
        StateSet next;
        next.reserve(cur.size());
        for (State q : cur) next.push_back(a.step(q, x));
        cur = sorted_unique(std::move(next));
    }
    return cur;
}

bool is_strongly_connected(const Semiautomaton& a) {
    if (a.n <= 1) return true;
    auto reach_all = [&](bool forward) {
        std::vector<bool> seen(static_cast<std::size_t>(a.n), false);
        std::vector<std::vector<State>> rev;
        if (!forward) {
            rev.assign(static_cast<std::size_t>(a.n), {});
            for (State q = 0; q < a.n; ++q)
                for (Letter x = 0; x < a.alphabet.size(); ++x) rev[static_cast<std::size_t>(a.step(q, x))].push_back(q);
        }
        std::deque<State> queue{0};
        seen[0] = true;
        int count = 1;
        while (!queue.empty()) {
            State q = queue.front();
            queue.pop_front();
            if (forward) {
                for (Letter x = 0; x < a.alphabet.size(); ++x) {
                    State p = a.step(q, x);
                    if (!seen[static_cast<std::size_t>(p)]) {
                        seen[static_cast<std::size_t>(p)] = true;
                        ++count;
                        queue.push_back(p);
                    }
                }
            } else {
                for (State p : rev[static_cast<std::size_t>(q)]) {
                    if (!seen[static_cast<std::size_t>(p)]) {
                        seen[static_cast<std::size_t>(p)] = true;
                        ++count;
                        queue.push_back(p);
                    }
                }
            }
        }
        return count == a.n;
    };
    return reach_all(true) && reach_all(false);
}

Acceptor determinize(const Nfa& nfa, std::size_t state_limit) {
    StateSet init = sorted_unique(nfa.initials);
    if (init.empty()) return Acceptor(nfa.alphabet, 0);

    const int k = nfa.alphabet.size();
    std::map<StateSet, State> ids;
    std::vector<StateSet> subsets;
    std::vector<State> table;
    std::vector<bool> finals;

    auto intern = [&](StateSet s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        State id = static_cast<State>(subsets.size());
        if (subsets.size() >= state_limit)
            throw Error(ErrorCode::LimitExceeded,
                        "subset construction exceeded the state budget of " + std::to_string(state_limit));
        ids.emplace(s, id);
        bool fin = false;
        for (State q : s)
            if (nfa.is_final(q)) fin = true;
        subsets.push_back(std::move(s));
        finals.push_back(fin);
        table.resize(subsets.size() * static_cast<std::size_t>(k), Acceptor::kUndefined);
        return id;
    };

    intern(init);
    for (State cur = 0; cur < static_cast<State>(subsets.size()); ++cur) {
        for (Letter a = 0; a < k; ++a) {
            StateSet next;
            for (State q : subsets[static_cast<std::size_t>(cur)])
                for (State p : nfa.trans[static_cast<std::size_t>(q)][static_cast<std::size_t>(a)]) next.push_back(p);
            next = sorted_unique(std::move(next));
            if (next.empty()) continue;  // undefined transition, keeps the acceptor partial
            State id = intern(std::move(next));
            table[static_cast<std::size_t>(cur) * k + a] = id;
        }
    }

    Acceptor out(nfa.alphabet, static_cast<int>(subsets.size()));
    out.initial = 0;
    out.delta = std::move(table);
    out.final_mask = std::move(finals);
    return out;
}

Acceptor trim(const Acceptor& d) {
    const int k = d.alphabet.size();
    if (d.n == 0 || d.initial == Acceptor::kUndefined) return Acceptor(d.alphabet, 0);

    std::vector<bool> reach(static_cast<std::size_t>(d.n), false);
    std::deque<State> queue{d.initial};
    reach[static_cast<std::size_t>(d.initial)] = true;
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < k; ++a) {
            State p = d.step(q, a);
            if (p != Acceptor::kUndefined && !reach[static_cast<std::size_t>(p)]) {
                reach[static_cast<std::size_t>(p)] = true;
                queue.push_back(p);
            }
        }
    }

    std::vector<std::vector<State>> rev(static_cast<std::size_t>(d.n));
    for (State q = 0; q < d.n; ++q)
        for (Letter a = 0; a < k; ++a) {
            State p = d.step(q, a);
            if (p != Acceptor::kUndefined) rev[static_cast<std::size_t>(p)].push_back(q);
        }
    std::vector<bool> live(static_cast<std::size_t>(d.n), false);
    for (State q = 0; q < d.n; ++q)
        if (d.is_final(q)) {
            live[static_cast<std::size_t>(q)] = true;
            queue.push_back(q);
        }
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (State p : rev[static_cast<std::size_t>(q)])
            if (!live[static_cast<std::size_t>(p)]) {
                live[static_cast<std::size_t>(p)] = true;
                queue.push_back(p);
            }
    }

    std::vector<bool> keep(static_cast<std::size_t>(d.n));
    for (State q = 0; q < d.n; ++q) keep[static_cast<std::size_t>(q)] = reach[static_cast<std::size_t>(q)] && live[static_cast<std::size_t>(q)];
    if (!keep[static_cast<std::size_t>(d.initial)]) return Acceptor(d.alphabet, 0);

    // renumber kept states in BFS discovery order from the initial state
    std::vector<State> order(static_cast<std::size_t>(d.n), Acceptor::kUndefined);
    std::vector<State> bfs;
    order[static_cast<std::size_t>(d.initial)] = 0;
    bfs.push_back(d.initial);
    for (std::size_t i = 0; i < bfs.size(); ++i) {
        for (Letter a = 0; a < k; ++a) {
            State p = d.step(bfs[i], a);
            if (p != Acceptor::kUndefined && keep[static_cast<std::size_t>(p)] && order[static_cast<std::size_t>(p)] == Acceptor::kUndefined) {
                order[static_cast<std::size_t>(p)] = static_cast<State>(bfs.size());
                bfs.push_back(p);
            }
        }
    }

    Acceptor out(d.alphabet, static_cast<int>(bfs.size()));
    out.initial = 0;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
        State q = bfs[i];
        out.final_mask[i] = d.is_final(q);
        for (Letter a = 0; a < k; ++a) {
            State p = d.step(q, a);
            if (p != Acceptor::kUndefined && keep[static_cast<std::size_t>(p)])
                out.set(static_cast<State>(i), a, order[static_cast<std::size_t>(p)]);
        }
    }
    return out;
}

Acceptor trim_minimize(const Acceptor& d) {
    Acceptor t = trim(d);
    if (t.n == 0) return t;
    const int k = t.alphabet.size();

    // Moore refinement; "undefined" acts as its own behavior class (-1).
    std::vector<int> cls(static_cast<std::size_t>(t.n));
    for (State q = 0; q < t.n; ++q) cls[static_cast<std::size_t>(q)] = t.is_final(q) ? 1 : 0;
    for (;;) {
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next(static_cast<std::size_t>(t.n));
        for (State q = 0; q < t.n; ++q) {
            std::vector<int> sig;
            sig.reserve(static_cast<std::size_t>(k) + 1);
            sig.push_back(cls[static_cast<std::size_t>(q)]);
            for (Letter a = 0; a < k; ++a) {
                State p = t.step(q, a);
                sig.push_back(p == Acceptor::kUndefined ? -1 : cls[static_cast<std::size_t>(p)]);
            }
            auto [it, inserted] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
            next[static_cast<std::size_t>(q)] = it->second;
        }
        bool changed = false;
        for (State q = 0; q < t.n; ++q)
            if (next[static_cast<std::size_t>(q)] != cls[static_cast<std::size_t>(q)]) changed = true;
        cls = std::move(next);
        if (!changed) break;
    }

    int num_classes = 0;
    for (State q = 0; q < t.n; ++q) num_classes = std::max(num_classes, cls[static_cast<std::size_t>(q)] + 1);

    // quotient, then renumber classes in BFS discovery order
    std::vector<State> rep(static_cast<std::size_t>(num_classes), Acceptor::kUndefined);
    for (State q = 0; q < t.n; ++q)
        if (rep[static_cast<std::size_t>(cls[static_cast<std::size_t>(q)])] == Acceptor::kUndefined)
            rep[static_cast<std::size_t>(cls[static_cast<std::size_t>(q)])] = q;

    std::vector<State> order(static_cast<std::size_t>(num_classes), Acceptor::kUndefined);
    std::vector<int> bfs;
    int init_cls = cls[static_cast<std::size_t>(t.initial)];
    order[static_cast<std::size_t>(init_cls)] = 0;
    bfs.push_back(init_cls);
    for (std::size_t i = 0; i < bfs.size(); ++i) {
        State q = rep[static_cast<std::size_t>(bfs[i])];
        for (Letter a = 0; a < k; ++a) {
            State p = t.step(q, a);
            if (p == Acceptor::kUndefined) continue;
            int c = cls[static_cast<std::size_t>(p)];
            if (order[static_cast<std::size_t>(c)] == Acceptor::kUndefined) {
                order[static_cast<std::size_t>(c)] = static_cast<State>(bfs.size());
                bfs.push_back(c);
            }
        }
    }

    Acceptor out(t.alphabet, static_cast<int>(bfs.size()));
    out.initial = 0;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
        State q = rep[static_cast<std::size_t>(bfs[i])];
        out.final_mask[i] = t.is_final(q);
        for (Letter a = 0; a < k; ++a) {
            State p = t.step(q, a);
            if (p != Acceptor::kUndefined) out.set(static_cast<State>(i), a, order[static_cast<std::size_t>(cls[static_cast<std::size_t>(p)])]);
        }
    }
    return out;
}

Acceptor complete(const Acceptor& d) {
    const int k = d.alphabet.size();
    if (d.n == 0 || d.initial == Acceptor::kUndefined) {
        Acceptor out(d.alphabet, 1);
        out.initial = 0;
        for (Letter a = 0; a < k; ++a) out.set(0, a, 0);
        return out;
    }
    if (!d.is_partial()) return d;
    Acceptor out(d.alphabet, d.n + 1);
    out.initial = d.initial;
    State sink = d.n;
    for (State q = 0; q < d.n; ++q) {
        out.final_mask[static_cast<std::size_t>(q)] = d.is_final(q);
        for (Letter a = 0; a < k; ++a) {
            State p = d.step(q, a);
            out.set(q, a, p == Acceptor::kUndefined ? sink : p);
        }
    }
    for (Letter a = 0; a < k; ++a) out.set(sink, a, sink);
    return out;
}

Acceptor complement(const Acceptor& d) {
    Acceptor c = complete(d);
    for (std::size_t i = 0; i < c.final_mask.size(); ++i) c.final_mask[i] = !c.final_mask[i];
    return trim_minimize(c);
}

Acceptor bool_ops(const Acceptor& d1, const Acceptor& d2, BoolOp op) {
    if (!(d1.alphabet == d2.alphabet)) throw Error(ErrorCode::InvalidInput, "boolean operation on acceptors over different alphabets");
    Acceptor a = complete(d1);
    Acceptor b = complete(d2);
    const int k = a.alphabet.size();
    Acceptor out(a.alphabet, a.n * b.n);
    out.initial = a.initial * b.n + b.initial;
    for (State p = 0; p < a.n; ++p)
        for (State q = 0; q < b.n; ++q) {
            State s = p * b.n + q;
            bool f1 = a.is_final(p), f2 = b.is_final(q);
            bool f = false;
            switch (op) {
                case BoolOp::Intersect: f = f1 && f2; break;
                case BoolOp::Union: f = f1 || f2; break;
                case BoolOp::Difference: f = f1 && !f2; break;
            }
            out.final_mask[static_cast<std::size_t>(s)] = f;
            for (Letter x = 0; x < k; ++x) out.set(s, x, a.step(p, x) * b.n + b.step(q, x));
        }
    return trim_minimize(out);
}

EquivalenceResult equivalent(const Acceptor& d1, const Acceptor& d2) {
    if (!(d1.alphabet == d2.alphabet)) throw Error(ErrorCode::InvalidInput, "equivalence check on acceptors over different alphabets");
    Acceptor a = complete(d1);
    Acceptor b = complete(d2);
    const int k = a.alphabet.size();

    struct Node {
        State parent;
        Letter letter;
    };
    std::vector<Node> nodes(static_cast<std::size_t>(a.n) * b.n, Node{-2, -1});
    auto id = [&](State p, State q) { return static_cast<std::size_t>(p) * b.n + q; };
    auto rebuild = [&](std::size_t s) {
        Word w;
        while (nodes[s].parent != -2) {
            w.push_back(nodes[s].letter);
            s = static_cast<std::size_t>(nodes[s].parent);
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    std::deque<std::size_t> queue;
    std::size_t start = id(a.initial, b.initial);
    nodes[start] = Node{-2, -1};
    std::vector<bool> seen(nodes.size(), false);
    seen[start] = true;
    if (a.is_final(a.initial) != b.is_final(b.initial)) return {false, Word{}};
    queue.push_back(start);
    while (!queue.empty()) {
        std::size_t s = queue.front();
        queue.pop_front();
        State p = static_cast<State>(s / b.n);
        State q = static_cast<State>(s % b.n);
        for (Letter x = 0; x < k; ++x) {
            std::size_t t = id(a.step(p, x), b.step(q, x));
            if (seen[t]) continue;
            seen[t] = true;
            nodes[t] = Node{static_cast<State>(s), x};
            if (a.is_final(static_cast<State>(t / b.n)) != b.is_final(static_cast<State>(t % b.n)))
                return {false, rebuild(t)};
            queue.push_back(t);
        }
    }
    return {true, std::nullopt};
}

std::optional<Word> shortest_accepted(const Acceptor& d) {
    if (d.n == 0 || d.initial == Acceptor::kUndefined) return std::nullopt;
    const int k = d.alphabet.size();
    if (d.is_final(d.initial)) return Word{};
    struct Node {
        State parent;
        Letter letter;
    };
    std::vector<Node> nodes(static_cast<std::size_t>(d.n), Node{-2, -1});
    std::vector<bool> seen(static_cast<std::size_t>(d.n), false);
    std::deque<State> queue{d.initial};
    seen[static_cast<std::size_t>(d.initial)] = true;
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < k; ++a) {
            State p = d.step(q, a);
            if (p == Acceptor::kUndefined || seen[static_cast<std::size_t>(p)]) continue;
            seen[static_cast<std::size_t>(p)] = true;
            nodes[static_cast<std::size_t>(p)] = Node{q, a};
            if (d.is_final(p)) {
                Word w;
                State s = p;
                while (nodes[static_cast<std::size_t>(s)].parent != -2) {
                    w.push_back(nodes[static_cast<std::size_t>(s)].letter);
                    s = nodes[static_cast<std::size_t>(s)].parent;
                }
                std::reverse(w.begin(), w.end());
                return w;
            }
            queue.push_back(p);
        }
    }
    return std::nullopt;
}

bool accepts(const Acceptor& d, const Word& w) {
    if (d.n == 0 || d.initial == Acceptor::kUndefined) return false;
    for (Letter a : w)
        if (a < 0 || a >= d.alphabet.size()) throw Error(ErrorCode::InvalidInput, "word uses a letter outside the alphabet");
    State q = d.run(d.initial, w);
    return q != Acceptor::kUndefined && d.is_final(q);
}

bool is_empty(const Acceptor& d) { return !shortest_accepted(d).has_value(); }

Acceptor acceptor_from_words(const Alphabet& alphabet, const std::vector<Word>& words) {
    // trie construction
    Acceptor t(alphabet, 1);
    t.initial = 0;
    for (const Word& w : words) {
        State q = 0;
        for (Letter a : w) {
            if (a < 0 || a >= alphabet.size()) throw Error(ErrorCode::InvalidInput, "word uses a letter outside the alphabet");
            State p = t.step(q, a);
            if (p == Acceptor::kUndefined) {
                p = t.n;
                t.n += 1;
                t.delta.resize(static_cast<std::size_t>(t.n) * alphabet.size(), Acceptor::kUndefined);
                t.final_mask.push_back(false);
                t.set(q, a, p);
            }
            q = p;
        }
        t.final_mask[static_cast<std::size_t>(q)] = true;
    }
    return trim_minimize(t);
}

Acceptor prepend_any_letter(const Acceptor& d) {
    const int k = d.alphabet.size();
    if (d.n == 0 || d.initial == Acceptor::kUndefined) return Acceptor(d.alphabet, 0);
    Acceptor out(d.alphabet, d.n + 1);
    State start = d.n;
    out.initial = start;
    for (State q = 0; q < d.n; ++q) {
        out.final_mask[static_cast<std::size_t>(q)] = d.is_final(q);
        for (Letter a = 0; a < k; ++a) out.set(q, a, d.step(q, a));
    }
    for (Letter a = 0; a < k; ++a) out.set(start, a, d.initial);
    return trim_minimize(out);
}

Acceptor append_any_letter(const Acceptor& d) {
    Acceptor c = complete(d);
    const int k = c.alphabet.size();
    // state (q, flag): flag records whether the previous state was final
    Acceptor out(c.alphabet, c.n * 2);
    out.initial = c.initial * 2;
    for (State q = 0; q < c.n; ++q)
        for (int flag = 0; flag < 2; ++flag) {
            State s = q * 2 + flag;
            out.final_mask[static_cast<std::size_t>(s)] = flag == 1;
            for (Letter a = 0; a < k; ++a) out.set(s, a, c.step(q, a) * 2 + (c.is_final(q) ? 1 : 0));
        }
    return trim_minimize(out);
}

}  // namespace synkit
