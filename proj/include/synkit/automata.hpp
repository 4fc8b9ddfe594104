#ifndef SYNKIT_AUTOMATA_HPP
#define SYNKIT_AUTOMATA_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace synkit {

/// Error categories surfaced through the C API and the CLI exit codes.
enum class ErrorCode {
    InvalidInput,   // bad argument, precondition violation, alphabet mismatch
    Parse,          // malformed text input
    LimitExceeded,  // an explicit state/size budget was exceeded
    Internal,       // broken invariant; indicates a bug
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

using Letter = int;
using State = int;

/// A word is a sequence of letter indices into some Alphabet.
using Word = std::vector<Letter>;

/// Suffix of u of length i (i = 0 gives the empty word).
Word suffix(const Word& u, std::size_t i);
/// Prefix of u of length i.
Word prefix(const Word& u, std::size_t i);

/// Ordered list of distinct printable symbols. The declaration order is
/// the lexicographic order used by every tie-break in the library.
class Alphabet {
  public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    int size() const { return static_cast<int>(symbols_.size()); }
    const std::string& symbol(Letter a) const { return symbols_.at(static_cast<std::size_t>(a)); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    std::optional<Letter> index_of(const std::string& symbol) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

    /// Renders a word using this alphabet. Single-character symbols are
    /// concatenated; longer symbols are joined with spaces. The empty word
    /// renders as "eps".
    std::string format_word(const Word& w) const;

    /// Inverse of format_word for one token line ("eps" denotes the empty
    /// word). Throws Error{Parse} when the text cannot be tokenized.
    Word parse_word(const std::string& text) const;

  private:
    std::vector<std::string> symbols_;
};

/// Complete deterministic action of an alphabet on a finite state set.
struct Semiautomaton {
    Alphabet alphabet;
    int n = 0;
    std::vector<State> delta;  // n*k table, delta[q*k + a]

    Semiautomaton() = default;
    Semiautomaton(Alphabet alpha, int states);

    State step(State q, Letter a) const { return delta[static_cast<std::size_t>(q) * alphabet.size() + a]; }
    void set(State q, Letter a, State p) { delta[static_cast<std::size_t>(q) * alphabet.size() + a] = p; }
    State run(State q, const Word& w) const;

    void validate() const;  // throws Error{InvalidInput} on an incomplete or out-of-range table
};

/// Possibly partial DFA with initial state and final set. The canonical
/// empty acceptor has n = 0 and initial = -1.
struct Acceptor {
    static constexpr State kUndefined = -1;

    Alphabet alphabet;
    int n = 0;
    std::vector<State> delta;  // n*k table, kUndefined marks a missing transition
    State initial = kUndefined;
    std::vector<bool> final_mask;

    Acceptor() = default;
    Acceptor(Alphabet alpha, int states);

    State step(State q, Letter a) const { return delta[static_cast<std::size_t>(q) * alphabet.size() + a]; }
    void set(State q, Letter a, State p) { delta[static_cast<std::size_t>(q) * alphabet.size() + a] = p; }
    bool is_final(State q) const { return final_mask[static_cast<std::size_t>(q)]; }
    bool is_partial() const;

    /// Runs w from q; kUndefined once the run leaves the defined table.
    State run(State q, const Word& w) const;
};

/// Nondeterministic automaton; the intermediate form for closures and
/// factor languages.
struct Nfa {
    Alphabet alphabet;
    int n = 0;
    std::vector<std::vector<std::vector<State>>> trans;  // [q][a] -> successors
    std::vector<State> initials;
    std::vector<bool> final_mask;

    Nfa() = default;
    Nfa(Alphabet alpha, int states);

    void add_transition(State q, Letter a, State p);
    bool is_final(State q) const { return final_mask[static_cast<std::size_t>(q)]; }

    /// Direct simulation of w from the initial set; used by tests as the
    /// determinization oracle.
    bool simulate(const Word& w) const;
};

/// Sorted duplicate-free state set.
using StateSet = std::vector<State>;

StateSet sorted_unique(StateSet s);

/// Image of S under the action of w: { delta(q, w) : q in S }.
StateSet apply(const Semiautomaton& a, const StateSet& s, const Word& w);

/// True iff the transition digraph is a single strongly connected component.
bool is_strongly_connected(const Semiautomaton& a);

/// Subset construction over reachable subsets; states are numbered in BFS
/// discovery order with letters tried in alphabet order, so the output is
/// canonical. Transitions into the empty subset are left undefined.
/// Throws Error{LimitExceeded} if more than state_limit subsets appear.
Acceptor determinize(const Nfa& nfa, std::size_t state_limit = 1u << 22);

/// Removes unreachable and dead states, then merges language-equivalent
/// states (Moore refinement treating "undefined" as a distinguished
/// behavior). The result is the canonical minimal partial DFA of L(d).
Acceptor trim_minimize(const Acceptor& d);

enum class BoolOp { Intersect, Union, Difference };

/// Product construction on completed copies, trim-minimized.
Acceptor bool_ops(const Acceptor& d1, const Acceptor& d2, BoolOp op);

struct EquivalenceResult {
    bool equal = false;
    std::optional<Word> counterexample;  // shortest, lex-least among shortest
};

/// Language equivalence with a shortest distinguishing witness on failure.
EquivalenceResult equivalent(const Acceptor& d1, const Acceptor& d2);

/// Shortest accepted word, ties broken lexicographically by alphabet
/// order; nullopt iff the language is empty.
std::optional<Word> shortest_accepted(const Acceptor& d);

bool accepts(const Acceptor& d, const Word& w);

/// True iff no word is accepted.
bool is_empty(const Acceptor& d);

/// Trie acceptor for a finite word list, trim-minimized.
Acceptor acceptor_from_words(const Alphabet& alphabet, const std::vector<Word>& words);

/// Completion: totalizes the table with a fresh non-final sink when the
/// input is partial (or empty). Used by product constructions.
Acceptor complete(const Acceptor& d);

/// Acceptor of the complement language.
Acceptor complement(const Acceptor& d);

/// Acceptor of Sigma . L(d)  (every word of L prefixed by one arbitrary letter).
Acceptor prepend_any_letter(const Acceptor& d);

/// Acceptor of L(d) . Sigma, built by tracking a "previous state was final" flag.
Acceptor append_any_letter(const Acceptor& d);

/// Keeps only states reachable from the initial state and from which a
/// final state is reachable; renumbers in BFS discovery order.
Acceptor trim(const Acceptor& d);

}  // namespace synkit

#endif  // SYNKIT_AUTOMATA_HPP
