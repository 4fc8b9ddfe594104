#ifndef SYNKIT_RESET_HPP
#define SYNKIT_RESET_HPP

#include "synkit/automata.hpp"

namespace synkit {

struct SyncReport {
    bool is_synchronizing = false;
    std::optional<Word> shortest_reset;
    int n = 0;
    bool strongly_connected = false;
    long long cerny_bound = 0;  // (n-1)^2
    bool bound_satisfied = false;
};

/// Pairwise-merge synchronization test (polynomial; no witness).
bool is_synchronizing(const Semiautomaton& a);

/// BFS over the power automaton from the full state set; shortest reset
/// word, lexicographically least among shortest. nullopt iff not
/// synchronizing.
std::optional<Word> shortest_reset_word(const Semiautomaton& a);

SyncReport sync_report(const Semiautomaton& a);

/// Trim-minimized acceptor of Syn(a), built from the power automaton with
/// initial Q and singleton finals. Throws Error{LimitExceeded} when more
/// than state_limit subsets are reachable.
Acceptor syn_recognizer(const Semiautomaton& a, std::size_t state_limit = 1u << 22);

/// Acceptor of Sigma* . L . Sigma*.
Acceptor ideal_closure(const Acceptor& l);

/// True iff L(d) is a two-sided ideal.
bool is_ideal(const Acceptor& d);

/// Acceptor of the minimal generators M(I) = I \ (Sigma+ I  u  I Sigma+).
/// Requires is_ideal(i).
Acceptor minimal_words_recognizer(const Acceptor& i);

/// True iff no word of L(m) is a proper factor of another word of L(m).
bool is_factor_free(const Acceptor& m);

/// Length of a shortest word of the language; nullopt iff empty.
std::optional<long long> ideal_norm(const Acceptor& i);

/// Acceptor of I_q = { u : delta(Q, u) = {q} } (a left ideal; the
/// per-state component of the decomposition induced by the automaton).
Acceptor state_ideal_recognizer(const Semiautomaton& a, State q, std::size_t state_limit = 1u << 22);

/// Longest suffix of u that is a prefix of some word of L(m); the empty
/// word always qualifies.
Word suffix_prefix_overlap(const Word& u, const Acceptor& m);

}  // namespace synkit

#endif  // SYNKIT_RESET_HPP
