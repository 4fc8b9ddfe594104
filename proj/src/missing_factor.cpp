#include "synkit/missing_factor.hpp"

#include <algorithm>

#include "synkit/reset.hpp"

namespace synkit {

Acceptor factor_recognizer(const Acceptor& m) {
    Acceptor t = trim(m);
    if (t.n == 0) return t;
    const int k = t.alphabet.size();
    Nfa nfa(t.alphabet, t.n);
    for (State q = 0; q < t.n; ++q) {
        nfa.initials.push_back(q);
        nfa.final_mask[static_cast<std::size_t>(q)] = true;
        for (Letter a = 0; a < k; ++a) {
            State p = t.step(q, a);
            if (p != Acceptor::kUndefined) nfa.add_transition(q, a, p);
        }
    }
    return trim_minimize(determinize(nfa));
}

namespace {

constexpr unsigned long long kSaturated = 1ull << 62;

unsigned long long sat_add(unsigned long long a, unsigned long long b) {
    if (a >= kSaturated || b >= kSaturated || a + b >= kSaturated) return kSaturated;
    return a + b;
}

unsigned long long sat_pow(unsigned long long base, long long exp) {
    unsigned long long r = 1;
    for (long long i = 0; i < exp; ++i) {
        if (r >= kSaturated / base) return kSaturated;
        r *= base;
    }
    return r;
}

}  // namespace

std::optional<std::pair<long long, Word>> find_missing_factor(const Acceptor& m, long long ell_max) {
    if (ell_max < 1) throw Error(ErrorCode::InvalidInput, "ell_max must be at least 1");
    Acceptor fac = factor_recognizer(m);
    const int k0 = m.alphabet.size();
    if (sat_pow(static_cast<unsigned long long>(k0), ell_max) >= kSaturated)
        throw Error(ErrorCode::InvalidInput, "ell_max too large for exact factor counting");

    // |Fact_l| by counting length-l paths in the factor DFA. Once a factor
    // is missing it stays missing, so a linear scan finds the minimal l.
    Acceptor c = complete(fac);
    const int k = c.alphabet.size();
    std::vector<unsigned long long> cnt(static_cast<std::size_t>(c.n), 0);
    cnt[static_cast<std::size_t>(c.initial)] = 1;
    long long found = -1;
    for (long long ell = 1; ell <= ell_max; ++ell) {
        std::vector<unsigned long long> next(static_cast<std::size_t>(c.n), 0);
        for (State q = 0; q < c.n; ++q) {
            if (cnt[static_cast<std::size_t>(q)] == 0) continue;
            for (Letter a = 0; a < k; ++a) {
                State p = c.step(q, a);
                next[static_cast<std::size_t>(p)] = sat_add(next[static_cast<std::size_t>(p)], cnt[static_cast<std::size_t>(q)]);
            }
        }
        cnt = std::move(next);
        unsigned long long accepted = 0;
        for (State q = 0; q < c.n; ++q)
            if (c.is_final(q)) accepted = sat_add(accepted, cnt[static_cast<std::size_t>(q)]);
        if (accepted < sat_pow(static_cast<unsigned long long>(k), ell)) {
            found = ell;
            break;
        }
    }
    if (found < 0) return std::nullopt;

    // lex-least witness: greedy walk in the complement, guided by a
    // can-reach-a-final-in-d-steps table
    Acceptor comp = complete(fac);
    for (std::size_t i = 0; i < comp.final_mask.size(); ++i) comp.final_mask[i] = !comp.final_mask[i];
    std::vector<std::vector<bool>> ok(static_cast<std::size_t>(found) + 1,
                                      std::vector<bool>(static_cast<std::size_t>(comp.n), false));
    for (State q = 0; q < comp.n; ++q) ok[0][static_cast<std::size_t>(q)] = comp.is_final(q);
    for (long long d = 1; d <= found; ++d)
        for (State q = 0; q < comp.n; ++q)
            for (Letter a = 0; a < k; ++a)
                if (ok[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(comp.step(q, a))])
                    ok[static_cast<std::size_t>(d)][static_cast<std::size_t>(q)] = true;

    if (!ok[static_cast<std::size_t>(found)][static_cast<std::size_t>(comp.initial)])
        throw Error(ErrorCode::Internal, "path count and reachability disagree on the missing factor length");
    Word witness;
    State q = comp.initial;
    for (long long d = found; d >= 1; --d) {
        for (Letter a = 0; a < k; ++a) {
            State p = comp.step(q, a);
            if (ok[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(p)]) {
                witness.push_back(a);
                q = p;
                break;
            }
        }
    }
    return std::make_pair(found, witness);
}

long long reset_length_bound(long long n, long long ell) {
    if (n < 1 || ell < 1) throw Error(ErrorCode::InvalidInput, "reset_length_bound needs n >= 1 and ell >= 1");
    return n * (n - 1) / 2 + 2 * ell;
}

Applicability applicability(long long n, long long ideal_norm, long long ell_star) {
    // ideal_norm 0 is the degenerate I = Sigma* case from the analysis
    // pipeline; the rational comparisons stay well-defined there
    if (n < 1 || ideal_norm < 0 || ell_star < 1)
        throw Error(ErrorCode::InvalidInput, "applicability needs positive arguments");
    Applicability r;
    r.cerny_applicable = 4 * ell_star <= n * n - 3 * n + 2;
    r.quadratic_applicable = 16 * ell_star <= 4 * ideal_norm + 1;
    r.quadratic_bound_num = (2 * n - 1) * (2 * n - 1);
    r.quadratic_bound_den = 4;
    return r;
}

MissingFactorReport analyze_missing_factors(const Semiautomaton& a, long long ell_max) {
    if (!is_synchronizing(a)) throw Error(ErrorCode::InvalidInput, "automaton is not synchronizing");
    Acceptor syn = syn_recognizer(a);
    Acceptor m = minimal_words_recognizer(syn);

    MissingFactorReport r;
    auto hit = find_missing_factor(m, ell_max);
    auto reset = shortest_reset_word(a);
    r.shortest_reset_length = static_cast<long long>(reset->size());
    if (!hit) return r;

    r.ell_star = hit->first;
    r.witness = hit->second;
    r.bound = reset_length_bound(a.n, hit->first);
    long long norm = ideal_norm(syn).value();
    Applicability ap = applicability(a.n, norm, hit->first);
    r.cerny_applicable = ap.cerny_applicable;
    r.quadratic_applicable = ap.quadratic_applicable;
    r.quadratic_bound_num = ap.quadratic_bound_num;
    r.quadratic_bound_den = ap.quadratic_bound_den;
    r.bound_verified = *r.shortest_reset_length <= *r.bound;
    return r;
}

}  // namespace synkit
