#ifndef SYNKIT_VERIFY_HPP
#define SYNKIT_VERIFY_HPP

#include "synkit/automata.hpp"
#include "synkit/tail.hpp"

namespace synkit {

enum class VerifyMode { Exact, Bounded };

struct Verdict {
    bool ok = false;
    std::optional<Word> counterexample;
    std::string detail;
    VerifyMode mode = VerifyMode::Exact;
    long long bound = -1;  // the L of bounded mode
};

/// All reset words of length <= max_len, found by running every word on
/// the full state set; deliberately free of automata-theoretic shortcuts.
/// Refuses (Error{LimitExceeded}) when the enumeration would exceed
/// word_budget words.
std::vector<Word> brute_force_syn(const Semiautomaton& a, long long max_len,
                                  unsigned long long word_budget = 1ull << 25);

/// Checks Syn(a) == Sigma* L(m) Sigma*. Exact mode compares the syn
/// recognizer against the ideal closure and refuses (Error{LimitExceeded})
/// when the power construction exceeds state_budget; bounded mode compares
/// the brute-force word set with ideal membership up to length bound_len.
Verdict verify_syn_equals_ideal(const Semiautomaton& a, const Acceptor& m, VerifyMode mode, long long bound_len = -1,
                                std::size_t state_budget = 1000000);

/// Checks on all words of length <= bound_len that the per-state ideals
/// I_q partition Syn(a), are left ideals, and (spot check) that no word
/// outside Syn(a) maps the whole ideal into a single class.
Verdict verify_decomposition(const Semiautomaton& a, long long bound_len);

/// Runs the tail construction and checks strong connectivity,
/// synchronization, Syn == ideal (exact, falling back to bounded at
/// bound_len when the exact check is refused), and the state-count bound.
Verdict verify_construction(const Acceptor& m, long long bound_len, std::size_t state_budget = 1000000);

}  // namespace synkit

#endif  // SYNKIT_VERIFY_HPP
