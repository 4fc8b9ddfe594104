#include "synkit/tail.hpp"

#include <algorithm>
#include <map>

#include "synkit/reset.hpp"

namespace synkit {

void OmegaSet::insert(OmegaTriple t) {
    auto it = std::lower_bound(triples.begin(), triples.end(), t);
    if (it == triples.end() || !(*it == t)) triples.insert(it, std::move(t));
}

bool OmegaSet::contains(const OmegaTriple& t) const {
    return std::binary_search(triples.begin(), triples.end(), t);
}

std::optional<OmegaTriple> OmegaSet::f_triple(State f) const {
    std::optional<OmegaTriple> found;
    for (const auto& t : triples)
        if (t.b_state == f) {
            if (found)
                throw Error(ErrorCode::Internal, "omega set contains two final-state triples");
            found = t;
        }
    return found;
}

void OmegaSet::erase(const OmegaTriple& t) {
    auto it = std::lower_bound(triples.begin(), triples.end(), t);
    if (it != triples.end() && *it == t) triples.erase(it);
}

Acceptor build_b(const Acceptor& m) {
    Acceptor b = trim_minimize(m);
    if (b.n == 0) throw Error(ErrorCode::InvalidInput, "generator set is empty");
    if (b.is_final(b.initial))
        throw Error(ErrorCode::InvalidInput, "generator set contains the empty word, so the ideal degenerates to Sigma*");
    if (!is_factor_free(m)) {
        // name a violating pair: a generator together with a proper factor
        // of it that is also a generator
        Acceptor c = ideal_closure(m);
        Acceptor proper = bool_ops(prepend_any_letter(c), append_any_letter(c), BoolOp::Union);
        Word w = shortest_accepted(bool_ops(m, proper, BoolOp::Intersect)).value();
        Word factor;
        bool found = false;
        for (std::size_t len = 1; len < w.size() && !found; ++len)
            for (std::size_t i = 0; i + len <= w.size() && !found; ++i) {
                Word cand(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + len));
                if (accepts(m, cand)) {
                    factor = cand;
                    found = true;
                }
            }
        throw Error(ErrorCode::InvalidInput, "generator set is not factor-free: '" + m.alphabet.format_word(factor) +
                                                 "' is a proper factor of '" + m.alphabet.format_word(w) + "'");
    }
    int finals = 0;
    for (State q = 0; q < b.n; ++q)
        if (b.is_final(q)) {
            ++finals;
            for (Letter a = 0; a < b.alphabet.size(); ++a)
                if (b.step(q, a) != Acceptor::kUndefined)
                    throw Error(ErrorCode::Internal, "final state of a factor-free minimal DFA has an out-transition");
        }
    if (finals != 1) throw Error(ErrorCode::Internal, "minimal DFA of a factor-free language must have one final state");
    return b;
}

namespace {

State unique_final(const Acceptor& b) {
    for (State q = 0; q < b.n; ++q)
        if (b.is_final(q)) return q;
    throw Error(ErrorCode::Internal, "acceptor has no final state");
}

}  // namespace

TailContext make_tail_context(const Acceptor& m) {
    if (m.alphabet.size() < 2)
        throw Error(ErrorCode::InvalidInput, "the construction requires a non-unary alphabet");
    TailContext ctx;
    ctx.b = build_b(m);
    ctx.ideal = ideal_closure(ctx.b);
    ctx.final_state = unique_final(ctx.b);
    ctx.seed_word = shortest_accepted(ctx.b).value();
    // trace counting needs at least two residues: with a trivial modulus
    // the classes of single-letter generators collapse and the resulting
    // automaton accepts words outside the ideal
    ctx.modulus = std::max<int>(static_cast<int>(ctx.seed_word.size()), 2);
    Word w(ctx.seed_word.begin() + 1, ctx.seed_word.end());
    ctx.seed = TailState{ctx.seed_word[0], trace(ctx.seed_word, ctx.modulus, m.alphabet.size()),
                         omega(w, ctx.b, ctx.ideal, ctx.modulus)};
    return ctx;
}

TailStructure tail_structure(const Word& u, const Acceptor& b, const Acceptor& ideal) {
    if (!accepts(ideal, u)) return TailStructure{{}, u};
    // shortest suffix inside the ideal; everything shorter is outside
    std::size_t j = 0;
    while (j <= u.size() && !accepts(ideal, suffix(u, j))) ++j;
    if (j == 0) throw Error(ErrorCode::Internal, "ideal contains the empty word");
    Word tau = suffix(u, j - 1);
    Word head = suffix(u, j);  // = a . tau
    Word lambda;
    State q = b.initial;
    State f = unique_final(b);
    for (Letter a : head) {
        q = b.step(q, a);
        if (q == Acceptor::kUndefined)
            throw Error(ErrorCode::Internal, "no generator prefix found while locating the last factor");
        lambda.push_back(a);
        if (q == f) break;
    }
    if (q != f) throw Error(ErrorCode::Internal, "no generator prefix found while locating the last factor");
    return TailStructure{lambda, tau};
}

TraceVector trace(const Word& u, int modulus, int alphabet_size) {
    if (modulus < 1) throw Error(ErrorCode::InvalidInput, "trace modulus must be at least 1");
    TraceVector t(modulus, alphabet_size);
    for (Letter a : u) t.add(a);
    return t;
}

StateSet visiting_states(const Word& u, const Acceptor& b) {
    StateSet out;
    for (std::size_t i = 0; i <= u.size(); ++i) {
        State q = b.run(b.initial, suffix(u, i));
        if (q != Acceptor::kUndefined) out.push_back(q);
    }
    return sorted_unique(std::move(out));
}

OmegaSet omega(const Word& u, const Acceptor& b, const Acceptor& ideal, int modulus) {
    TailStructure ts = tail_structure(u, b, ideal);
    Word v;
    if (!ts.lambda.empty()) v.push_back(ts.lambda[0]);
    v.insert(v.end(), ts.tau.begin(), ts.tau.end());

    OmegaSet out;
    for (std::size_t i = 0; i <= v.size(); ++i) {
        Word s = suffix(v, i);
        State q = b.run(b.initial, s);
        if (q == Acceptor::kUndefined) continue;
        OmegaTriple t;
        t.head = i == 0 ? -1 : v[v.size() - i];
        t.trace = trace(s, modulus, b.alphabet.size());
        t.b_state = q;
        out.insert(std::move(t));
    }
    return out;
}

OmegaSet omega_step(const OmegaSet& o, Letter a, const Acceptor& b, int modulus) {
    const int k = b.alphabet.size();
    OmegaSet out;
    OmegaTriple anchor{-1, TraceVector(modulus, k), b.initial};
    for (const auto& t : o.triples) {
        if (t == anchor) continue;
        State p = b.step(t.b_state, a);
        if (p == Acceptor::kUndefined) continue;
        OmegaTriple moved = t;
        moved.trace.add(a);
        moved.b_state = p;
        out.insert(std::move(moved));
    }
    State qa = b.step(b.initial, a);
    if (qa != Acceptor::kUndefined) {
        TraceVector single(modulus, k);
        single.add(a);
        out.insert(OmegaTriple{a, single, qa});
    }
    out.insert(anchor);
    return out;
}

TailState tail_action(const TailState& s, Letter a, const Acceptor& b, State final_state, int modulus) {
    OmegaSet next = omega_step(s.omega, a, b, modulus);
    auto f = next.f_triple(final_state);
    if (!f) {
        TailState out = s;
        out.x.add(a);
        out.omega = std::move(next);
        return out;
    }
    next.erase(*f);
    return TailState{f->head, f->trace, std::move(next)};
}

TailState word_class(const TailContext& ctx, const Word& u) {
    TailState s = ctx.seed;
    for (Letter a : u) s = tail_action(s, a, ctx.b, ctx.final_state, ctx.modulus);
    return s;
}

TailState direct_class_label(const TailContext& ctx, const Word& u) {
    TailStructure ts = tail_structure(u, ctx.b, ctx.ideal);
    if (ts.lambda.empty()) throw Error(ErrorCode::InvalidInput, "class labels are defined for ideal members only");
    Word bt;
    bt.push_back(ts.lambda[0]);
    bt.insert(bt.end(), ts.tau.begin(), ts.tau.end());
    TailState out;
    out.b = ts.lambda[0];
    out.x = trace(bt, ctx.modulus, ctx.b.alphabet.size());
    out.omega = omega(u, ctx.b, ctx.ideal, ctx.modulus);
    if (auto f = out.omega.f_triple(ctx.final_state)) out.omega.erase(*f);
    return out;
}

TailAutomaton construct_tail_automaton(const Acceptor& m, std::size_t state_limit) {
    TailAutomaton result;
    result.context = make_tail_context(m);
    const TailContext& ctx = result.context;
    const int k = ctx.b.alphabet.size();

    std::map<TailState, State> ids;
    std::vector<TailState> labels;
    std::vector<State> table;

    auto intern = [&](TailState s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        if (labels.size() >= state_limit)
            throw Error(ErrorCode::LimitExceeded,
                        "tail automaton exceeded the state budget of " + std::to_string(state_limit));
        State id = static_cast<State>(labels.size());
        ids.emplace(s, id);
        labels.push_back(std::move(s));
        table.resize(labels.size() * static_cast<std::size_t>(k), -1);
        return id;
    };

    intern(ctx.seed);
    for (State cur = 0; cur < static_cast<State>(labels.size()); ++cur)
        for (Letter a = 0; a < k; ++a) {
            TailState next = tail_action(labels[static_cast<std::size_t>(cur)], a, ctx.b, ctx.final_state, ctx.modulus);
            table[static_cast<std::size_t>(cur) * k + a] = intern(std::move(next));
        }

    result.automaton = Semiautomaton(ctx.b.alphabet, static_cast<int>(labels.size()));
    result.automaton.delta = std::move(table);
    result.labels = std::move(labels);
    return result;
}

BigUint state_bound(long long k, long long m, long long n) {
    if (k < 1 || m < 1 || n < 1) throw Error(ErrorCode::InvalidInput, "state bound needs positive arguments");
    // coefficient k * m^k
    BigUint coeff(static_cast<unsigned long long>(k));
    for (long long i = 0; i < k; ++i) coeff.mul_small(static_cast<unsigned long long>(m));
    if (!coeff.fits_u64())
        throw Error(ErrorCode::LimitExceeded, "state bound coefficient does not fit the exponent computation");
    unsigned long long c = coeff.to_u64();
    unsigned long long limit = 1ull << 26;  // keep the materialized value under ~8 MB
    if (c > limit / static_cast<unsigned long long>(n))
        throw Error(ErrorCode::LimitExceeded, "state bound too large to materialize");
    unsigned long long exponent = c * static_cast<unsigned long long>(n);
    BigUint r = BigUint::pow2(exponent);
    r.mul_small(c);
    return r;
}

Acceptor tails_recognizer(const Acceptor& m, const Acceptor& ideal) {
    Acceptor b = trim_minimize(m);
    if (b.n == 0) return b;
    const int k = b.alphabet.size();
    Nfa nfa(b.alphabet, b.n);
    for (State q = 0; q < b.n; ++q)
        for (Letter a = 0; a < k; ++a) {
            State p = b.step(q, a);
            if (p != Acceptor::kUndefined) nfa.add_transition(q, a, p);
        }
    for (Letter a = 0; a < k; ++a) {
        State p = b.step(b.initial, a);
        if (p != Acceptor::kUndefined) nfa.initials.push_back(p);
    }
    for (State q = 0; q < b.n; ++q)
        if (b.is_final(q)) {
            nfa.final_mask[static_cast<std::size_t>(q)] = true;
            for (Letter a = 0; a < k; ++a) nfa.add_transition(q, a, q);
        }
    nfa.initials = sorted_unique(std::move(nfa.initials));
    if (nfa.initials.empty()) return Acceptor(b.alphabet, 0);
    return bool_ops(trim_minimize(determinize(nfa)), ideal, BoolOp::Difference);
}

TailStructure lifted_transition(const TailStructure& ts, Letter c, const Acceptor& b, const Acceptor& ideal) {
    if (ts.lambda.empty())
        throw Error(ErrorCode::InvalidInput, "tail structure with empty last factor is not a class of the ideal");
    Word w;
    w.push_back(ts.lambda[0]);
    w.insert(w.end(), ts.tau.begin(), ts.tau.end());
    w.push_back(c);
    return tail_structure(w, b, ideal);
}

LiftedExploration lifted_explore(const Acceptor& m, int depth) {
    if (depth < 0) throw Error(ErrorCode::InvalidInput, "depth must be non-negative");
    TailContext ctx = make_tail_context(m);
    const int k = ctx.b.alphabet.size();

    LiftedExploration out;
    std::map<TailStructure, int> ids;
    std::vector<int> level;

    TailStructure seed = tail_structure(ctx.seed_word, ctx.b, ctx.ideal);
    ids.emplace(seed, 0);
    out.states.push_back(seed);
    level.push_back(0);

    for (int cur = 0; cur < static_cast<int>(out.states.size()); ++cur) {
        TailStructure src = out.states[static_cast<std::size_t>(cur)];
        for (Letter a = 0; a < k; ++a) {
            TailStructure dst = lifted_transition(src, a, ctx.b, ctx.ideal);
            auto it = ids.find(dst);
            if (it != ids.end()) {
                out.edges.push_back(LiftedEdge{cur, a, it->second, dst});
                continue;
            }
            if (level[static_cast<std::size_t>(cur)] >= depth) {
                out.edges.push_back(LiftedEdge{cur, a, std::nullopt, dst});
                continue;
            }
            int id = static_cast<int>(out.states.size());
            ids.emplace(dst, id);
            out.states.push_back(dst);
            level.push_back(level[static_cast<std::size_t>(cur)] + 1);
            out.edges.push_back(LiftedEdge{cur, a, id, dst});
        }
    }
    return out;
}

Acceptor sigma_star_m_acceptor(const Acceptor& b) {
    Acceptor t = trim(b);
    if (t.n == 0) return t;
    const int k = t.alphabet.size();
    Nfa nfa(t.alphabet, t.n);
    nfa.initials = {t.initial};
    for (State q = 0; q < t.n; ++q) {
        nfa.final_mask[static_cast<std::size_t>(q)] = t.is_final(q);
        for (Letter a = 0; a < k; ++a) {
            State p = t.step(q, a);
            if (p != Acceptor::kUndefined) nfa.add_transition(q, a, p);
        }
    }
    for (Letter a = 0; a < k; ++a) nfa.add_transition(t.initial, a, t.initial);
    return trim_minimize(determinize(nfa));
}

}  // namespace synkit
