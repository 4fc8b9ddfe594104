#ifndef SYNKIT_TAIL_HPP
#define SYNKIT_TAIL_HPP

#include <compare>

#include "synkit/automata.hpp"
#include "synkit/bigint.hpp"

namespace synkit {

/// sigma(u) = (lambda, tau): lambda is the last generator occurrence in u
/// (empty when u is outside the ideal) and tau is the maximal suffix of u
/// outside the ideal (all of u when u itself is outside).
struct TailStructure {
    Word lambda;
    Word tau;
    bool operator==(const TailStructure&) const = default;
    auto operator<=>(const TailStructure&) const = default;
};

/// Per-letter occurrence counts modulo m.
struct TraceVector {
    int modulus = 1;
    std::vector<int> residues;  // one entry per letter, alphabet order

    TraceVector() = default;
    TraceVector(int m, int k) : modulus(m), residues(static_cast<std::size_t>(k), 0) {}

    void add(Letter a) { residues[static_cast<std::size_t>(a)] = (residues[static_cast<std::size_t>(a)] + 1) % modulus; }
    bool is_zero() const {
        for (int r : residues)
            if (r != 0) return false;
        return true;
    }
    bool operator==(const TraceVector&) const = default;
    auto operator<=>(const TraceVector&) const = default;
};

/// One element of an omega set: the first letter of a suffix of the
/// extended tail (-1 encodes the empty suffix), its trace, and the state
/// of B reached by it.
struct OmegaTriple {
    Letter head = -1;
    TraceVector trace;
    State b_state = 0;
    bool operator==(const OmegaTriple&) const = default;
    auto operator<=>(const OmegaTriple&) const = default;
};

/// Canonical sorted triple set; always contains the (eps, 0, q0) anchor.
struct OmegaSet {
    std::vector<OmegaTriple> triples;  // sorted, duplicate-free

    void insert(OmegaTriple t);
    bool contains(const OmegaTriple& t) const;
    /// The unique triple whose state is f, if any; two of them would
    /// contradict factor-freeness and raise Error{Internal}.
    std::optional<OmegaTriple> f_triple(State f) const;
    void erase(const OmegaTriple& t);

    bool operator==(const OmegaSet&) const = default;
    auto operator<=>(const OmegaSet&) const = default;
};

/// State of the constructed semiautomaton: (b, x, omega) with the omega
/// component stored f-free (the tail side of the labelling).
struct TailState {
    Letter b = 0;
    TraceVector x;
    OmegaSet omega;
    bool operator==(const TailState&) const = default;
    auto operator<=>(const TailState&) const = default;
};

/// Everything derived from a generator set M that the tail machinery
/// needs: the minimal partial DFA B, the ideal recognizer, the modulus,
/// and the seed.
struct TailContext {
    Acceptor b;       // minimal partial DFA of M; unique final with no out-transitions
    Acceptor ideal;   // recognizer of Sigma* M Sigma*
    int modulus = 2;  // length of a shortest word of M, raised to 2 for single-letter generators
    State final_state = 0;
    TailState seed;
    Word seed_word;
};

/// Minimal partial DFA of the generator set. Rejects an empty language,
/// the empty word as a generator, and languages that are not factor-free
/// (the error names a violating pair).
Acceptor build_b(const Acceptor& m);

/// Rejection gates of build_b plus the non-unary alphabet requirement;
/// computes the seed state (a, tr(aw), omega(w)) for the
/// lexicographically-least shortest generator aw.
TailContext make_tail_context(const Acceptor& m);

TailStructure tail_structure(const Word& u, const Acceptor& b, const Acceptor& ideal);

TraceVector trace(const Word& u, int modulus, int alphabet_size);

/// nu(u) = { q0 . u[i:] : 0 <= i <= |u|, defined }.
StateSet visiting_states(const Word& u, const Acceptor& b);

OmegaSet omega(const Word& u, const Acceptor& b, const Acceptor& ideal, int modulus);

/// omega(u) o a = omega(ua), computed by the one-step formula.
OmegaSet omega_step(const OmegaSet& o, Letter a, const Acceptor& b, int modulus);

/// The letter action on tail states. Total: every (state, letter) pair
/// yields a tail state.
TailState tail_action(const TailState& s, Letter a, const Acceptor& b, State final_state, int modulus);

/// Class label of the word (seed-word . u); for u in the ideal this is
/// the class of u itself.
TailState word_class(const TailContext& ctx, const Word& u);

/// Label computed directly from the definitions (sigma, trace, omega with
/// the f-triple stripped); defined for u in the ideal.
TailState direct_class_label(const TailContext& ctx, const Word& u);

struct TailAutomaton {
    Semiautomaton automaton;
    std::vector<TailState> labels;  // discovery order, parallel to states
    TailContext context;
};

/// Breadth-first construction of the tail-structure semiautomaton from
/// the seed state under the tail action.
TailAutomaton construct_tail_automaton(const Acceptor& m, std::size_t state_limit = 1u << 22);

/// k * m^k * 2^(k * m^k * n), exactly.
BigUint state_bound(long long k, long long m, long long n);

/// Acceptor of the union over letters a of (a^-1 M) Sigma* minus the
/// ideal: the language of all tails of ideal members.
Acceptor tails_recognizer(const Acceptor& m, const Acceptor& ideal);

/// Transition of the maximal lifted automaton on decomposition classes:
/// from class (lambda, tau) by letter c to sigma(lambda[0] . tau . c).
TailStructure lifted_transition(const TailStructure& ts, Letter c, const Acceptor& b, const Acceptor& ideal);

struct LiftedEdge {
    int from = 0;
    Letter letter = 0;
    std::optional<int> to;          // nullopt marks an open frontier edge
    TailStructure target;           // always filled, even for open edges
};

struct LiftedExploration {
    std::vector<TailStructure> states;  // BFS discovery order from sigma(seed word)
    std::vector<LiftedEdge> edges;
};

/// Bounded BFS of the maximal lifted automaton: `depth` levels from the
/// seed class; edges leaving the explored set are marked open.
LiftedExploration lifted_explore(const Acceptor& m, int depth);

/// Recognizer of Sigma* M built from B with self-loops on its initial
/// state; used as the independent "ends with a generator" test.
Acceptor sigma_star_m_acceptor(const Acceptor& b);

}  // namespace synkit

#endif  // SYNKIT_TAIL_HPP
