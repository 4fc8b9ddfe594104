#ifndef SYNKIT_MISSING_FACTOR_HPP
#define SYNKIT_MISSING_FACTOR_HPP

#include "synkit/automata.hpp"

namespace synkit {

struct Applicability {
    bool cerny_applicable = false;      // ell* <= (n^2 - 3n + 2) / 4
    bool quadratic_applicable = false;  // ell* <= |I|/4 + 1/16
    long long quadratic_bound_num = 0;  // (n - 1/2)^2 as an exact rational
    long long quadratic_bound_den = 1;
};

struct MissingFactorReport {
    std::optional<long long> ell_star;     // smallest l with Fact_l != Sigma^l
    std::optional<Word> witness;           // lex-least missing factor of that length
    std::optional<long long> bound;        // n(n-1)/2 + 2*ell_star
    bool cerny_applicable = false;
    bool quadratic_applicable = false;
    long long quadratic_bound_num = 0;
    long long quadratic_bound_den = 1;
    std::optional<long long> shortest_reset_length;
    std::optional<bool> bound_verified;    // shortest reset <= bound; false is a falsification
};

/// Acceptor of all factors of words of L(m): every live state of the
/// trimmed automaton made both initial and final, determinized, minimized.
Acceptor factor_recognizer(const Acceptor& m);

/// Smallest l <= ell_max such that some word of Sigma^l is not a factor of
/// L(m), together with the lexicographically least witness of that length.
std::optional<std::pair<long long, Word>> find_missing_factor(const Acceptor& m, long long ell_max);

/// n(n-1)/2 + 2*ell.
long long reset_length_bound(long long n, long long ell);

/// Exact rational threshold checks for the two bound-applicability
/// conditions.
Applicability applicability(long long n, long long ideal_norm, long long ell_star);

/// Full pipeline on a synchronizing semiautomaton: minimal reset words,
/// missing-factor search, bound and applicability evaluation, and a check
/// of the bound against the true shortest reset length.
MissingFactorReport analyze_missing_factors(const Semiautomaton& a, long long ell_max);

}  // namespace synkit

#endif  // SYNKIT_MISSING_FACTOR_HPP
