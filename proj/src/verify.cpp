#include "synkit/verify.hpp"

#include <algorithm>
#include <map>

#include "synkit/reset.hpp"

namespace synkit {

namespace {

unsigned long long words_up_to(int k, long long max_len, unsigned long long cap) {
    unsigned long long total = 0, level = 1;
    for (long long i = 0; i <= max_len; ++i) {
        total += level;
        if (total > cap) return cap + 1;
        if (level > cap / static_cast<unsigned long long>(k)) return cap + 1;
        level *= static_cast<unsigned long long>(k);
    }
    return total;
}

StateSet full_set(int n) {
    StateSet s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = i;
    return s;
}

/// Depth-first enumeration of all words of length <= max_len carrying the
/// image of the full state set; visit(word, image) is called per word.
template <typename Visit>
void walk_images(const Semiautomaton& a, long long max_len, Visit visit) {
    const int k = a.alphabet.size();
    Word word;
    std::vector<StateSet> stack{full_set(a.n)};
    visit(word, stack.back());
    while (true) {
        if (static_cast<long long>(word.size()) < max_len) {
            word.push_back(0);
            StateSet next;
            next.reserve(stack.back().size());
            for (State q : stack.back()) next.push_back(a.step(q, 0));
            stack.push_back(sorted_unique(std::move(next)));
            visit(word, stack.back());
            continue;
        }
        while (!word.empty() && word.back() == k - 1) {
            word.pop_back();
            stack.pop_back();
        }
        if (word.empty()) break;
        word.back() += 1;
        stack.pop_back();
        StateSet next;
        next.reserve(stack.back().size());
        for (State q : stack.back()) next.push_back(a.step(q, word.back()));
        stack.push_back(sorted_unique(std::move(next)));
        visit(word, stack.back());
    }
}

bool shortlex_less(const Word& x, const Word& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
}

}  // namespace

std::vector<Word> brute_force_syn(const Semiautomaton& a, long long max_len, unsigned long long word_budget) {
    a.validate();
    if (max_len < 0) throw Error(ErrorCode::InvalidInput, "max_len must be non-negative");
    unsigned long long total = words_up_to(a.alphabet.size(), max_len, word_budget);
    if (total > word_budget)
        throw Error(ErrorCode::LimitExceeded, "brute-force enumeration would visit more than " +
                                                  std::to_string(word_budget) + " words");
    std::vector<Word> out;
    walk_images(a, max_len, [&](const Word& w, const StateSet& image) {
        if (image.size() == 1) out.push_back(w);
    });
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
}

Verdict verify_syn_equals_ideal(const Semiautomaton& a, const Acceptor& m, VerifyMode mode, long long bound_len,
                                std::size_t state_budget) {
    if (!(a.alphabet == m.alphabet))
        throw Error(ErrorCode::InvalidInput, "automaton and generator set use different alphabets");
    Verdict v;
    v.mode = mode;
    if (mode == VerifyMode::Exact) {
        Acceptor syn = syn_recognizer(a, state_budget);
        Acceptor ideal = ideal_closure(m);
        EquivalenceResult eq = equivalent(syn, ideal);
        v.ok = eq.equal;
        v.counterexample = eq.counterexample;
        v.detail = eq.equal ? "exact: Syn(A) equals the ideal generated by M"
                            : "exact: languages differ at '" + a.alphabet.format_word(*eq.counterexample) + "'";
        return v;
    }
    if (bound_len < 0) throw Error(ErrorCode::InvalidInput, "bounded verification needs a length bound");
    if (words_up_to(a.alphabet.size(), bound_len, 1ull << 25) > (1ull << 25))
        throw Error(ErrorCode::LimitExceeded, "bounded verification would enumerate too many words");
    v.bound = bound_len;
    Acceptor ideal = ideal_closure(m);
    unsigned long long checked = 0;
    std::optional<Word> bad;
    walk_images(a, bound_len, [&](const Word& w, const StateSet& image) {
        ++checked;
        if (bad) return;
        bool resets = image.size() == 1;
        bool in_ideal = accepts(ideal, w);
        if (resets != in_ideal) bad = w;
    });
    v.ok = !bad.has_value();
    v.counterexample = bad;
    v.detail = v.ok ? "bounded(" + std::to_string(bound_len) + "): all " + std::to_string(checked) +
                          " words agree with ideal membership"
                    : "bounded(" + std::to_string(bound_len) + "): mismatch at '" + a.alphabet.format_word(*bad) + "'";
    return v;
}

Verdict verify_decomposition(const Semiautomaton& a, long long bound_len) {
    a.validate();
    if (bound_len < 0) throw Error(ErrorCode::InvalidInput, "bounded verification needs a length bound");
    if (words_up_to(a.alphabet.size(), bound_len, 1ull << 22) > (1ull << 22))
        throw Error(ErrorCode::LimitExceeded, "decomposition check would enumerate too many words");
    Verdict v;
    v.mode = VerifyMode::Bounded;
    v.bound = bound_len;
    if (!is_synchronizing(a)) {
        v.ok = true;
        v.detail = "vacuous: automaton is not synchronizing, Syn is empty";
        return v;
    }

    std::vector<Acceptor> ideals;
    ideals.reserve(static_cast<std::size_t>(a.n));
    for (State q = 0; q < a.n; ++q) ideals.push_back(state_ideal_recognizer(a, q));

    // class of each word: the q with delta(Q, w) = {q}, or -1
    std::map<Word, State> cls;
    std::optional<Word> bad;
    std::string reason;
    walk_images(a, bound_len, [&](const Word& w, const StateSet& image) {
        if (bad) return;
        State expected = image.size() == 1 ? image[0] : -1;
        cls.emplace(w, expected);
        int accepted = 0;
        for (State q = 0; q < a.n; ++q)
            if (accepts(ideals[static_cast<std::size_t>(q)], w)) {
                ++accepted;
                if (q != expected) {
                    bad = w;
                    reason = "recognizer of state " + std::to_string(q) + " disagrees with direct simulation";
                }
            }
        if (!bad && expected >= 0 && accepted != 1) {
            bad = w;
            reason = "word is not covered by exactly one class";
        }
        if (!bad && expected < 0 && accepted != 0) {
            bad = w;
            reason = "word outside Syn accepted by a class";
        }
    });
    if (bad) {
        v.ok = false;
        v.counterexample = bad;
        v.detail = reason;
        return v;
    }

    // left ideal property via suffixes: w in I_q forces zw in I_q
    for (const auto& [z, q] : cls) {
        for (std::size_t i = 1; i <= z.size(); ++i) {
            State qs = cls.at(suffix(z, z.size() - i));
            if (qs >= 0 && q != qs) {
                v.ok = false;
                v.counterexample = z;
                v.detail = "left-ideal property fails: a suffix lies in a different class";
                return v;
            }
        }
    }

    // reset-condition spot check: the image of the ideal under a
    // non-reset word must straddle at least two classes, witnessed by
    // reset words of length up to bound_len
    long long m = static_cast<long long>(shortest_reset_word(a)->size());
    std::vector<Word> resets;
    for (const auto& [w, q] : cls)
        if (q >= 0) resets.push_back(w);
    std::sort(resets.begin(), resets.end(), shortlex_less);
    unsigned long long spot_checked = 0;
    for (const auto& [u, q] : cls) {
        if (q >= 0 || static_cast<long long>(u.size()) > bound_len - m) continue;
        ++spot_checked;
        StateSet targets;
        for (const Word& w : resets) {
            targets.push_back(a.run(cls.at(w), u));
            targets = sorted_unique(std::move(targets));
            if (targets.size() >= 2) break;
        }
        if (targets.size() < 2) {
            v.ok = false;
            v.counterexample = u;
            v.detail = "reset-condition spot check: the image of the ideal under this word stays in one class";
            return v;
        }
    }

    v.ok = true;
    v.detail = "partition, left-ideal and reset-condition checks passed on all words up to length " +
               std::to_string(bound_len) + " (" + std::to_string(spot_checked) + " spot checks)";
    return v;
}

Verdict verify_construction(const Acceptor& m, long long bound_len, std::size_t state_budget) {
    TailAutomaton t = construct_tail_automaton(m);
    Verdict v;
    v.mode = VerifyMode::Exact;

    if (!is_strongly_connected(t.automaton)) {
        v.detail = "constructed automaton is not strongly connected";
        return v;
    }
    if (!is_synchronizing(t.automaton)) {
        v.detail = "constructed automaton is not synchronizing";
        return v;
    }
    Verdict eq;
    try {
        eq = verify_syn_equals_ideal(t.automaton, m, VerifyMode::Exact, -1, state_budget);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::LimitExceeded) throw;
        eq = verify_syn_equals_ideal(t.automaton, m, VerifyMode::Bounded, bound_len);
        v.mode = VerifyMode::Bounded;
        v.bound = bound_len;
    }
    if (!eq.ok) {
        v.counterexample = eq.counterexample;
        v.detail = "reset-word language mismatch: " + eq.detail;
        return v;
    }

    bool bound_ok = true;
    std::string bound_note;
    try {
        BigUint bound = state_bound(t.automaton.alphabet.size(), t.context.modulus, t.context.b.n);
        bound_ok = BigUint(static_cast<unsigned long long>(t.automaton.n)) <= bound;
        bound_note = bound.to_string();
    } catch (const Error& e) {
        if (e.code() != ErrorCode::LimitExceeded) throw;
        // the bound is too large to materialize, so any constructed
        // automaton is below it
        bound_note = "(beyond materialization limit)";
    }
    if (!bound_ok) {
        v.detail = "state count " + std::to_string(t.automaton.n) + " exceeds the bound " + bound_note;
        return v;
    }

    v.ok = true;
    v.detail = "strongly connected, synchronizing, " + eq.detail + "; " + std::to_string(t.automaton.n) +
               " states within bound " + bound_note;
    v.bound = eq.bound;
    return v;
}

}  // namespace synkit
