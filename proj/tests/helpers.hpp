// Shared fixtures and independent oracles for the test suites. The
// oracles work on plain letter strings and never touch the library's
// automata algorithms, so they can arbitrate them.

#ifndef SYNKIT_TESTS_HELPERS_HPP
#define SYNKIT_TESTS_HELPERS_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include "synkit/automata.hpp"

namespace synkit::testing {

inline Alphabet ab() { return Alphabet({"a", "b"}); }
inline Alphabet abc() { return Alphabet({"a", "b", "c"}); }

inline Word W(const Alphabet& alpha, const std::string& text) { return alpha.parse_word(text); }

/// Cerny automaton C_n: a shifts cyclically, b sends 0 to 1 and fixes the rest.
inline Semiautomaton cerny(int n) {
    Semiautomaton a(ab(), n);
    for (State q = 0; q < n; ++q) {
        a.set(q, 0, (q + 1) % n);
        a.set(q, 1, q == 0 ? 1 % n : q);
    }
    return a;
}

inline Semiautomaton identity_automaton(int n, const Alphabet& alpha) {
    Semiautomaton a(alpha, n);
    for (State q = 0; q < n; ++q)
        for (Letter x = 0; x < alpha.size(); ++x) a.set(q, x, q);
    return a;
}

inline Semiautomaton one_state() {
    Semiautomaton a(ab(), 1);
    a.set(0, 0, 0);
    a.set(0, 1, 0);
    return a;
}

/// All words over k letters with length <= max_len, in shortlex order.
inline std::vector<Word> all_words(int k, int max_len) {
    std::vector<Word> out{{}};
    std::size_t level_start = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_start; i < level_end; ++i)
            for (Letter a = 0; a < k; ++a) {
                Word w = out[i];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        level_start = level_end;
    }
    return out;
}

inline bool is_factor_of(const Word& u, const Word& w) {
    if (u.size() > w.size()) return false;
    for (std::size_t i = 0; i + u.size() <= w.size(); ++i)
        if (std::equal(u.begin(), u.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) return true;
    return false;
}

/// Membership in Sigma* M Sigma* for a finite generator list.
inline bool in_ideal_of(const Word& w, const std::vector<Word>& m) {
    for (const Word& g : m)
        if (is_factor_of(g, w)) return true;
    return false;
}

/// Membership in Sigma* M for a finite generator list.
inline bool ends_with_generator(const Word& w, const std::vector<Word>& m) {
    for (const Word& g : m)
        if (g.size() <= w.size() && std::equal(g.begin(), g.end(), w.end() - static_cast<std::ptrdiff_t>(g.size())))
            return true;
    return false;
}

inline Semiautomaton random_semiautomaton(std::mt19937& rng, int n, const Alphabet& alpha) {
    Semiautomaton a(alpha, n);
    std::uniform_int_distribution<State> dist(0, n - 1);
    for (State q = 0; q < n; ++q)
        for (Letter x = 0; x < alpha.size(); ++x) a.set(q, x, dist(rng));
    return a;
}

inline Word random_word(std::mt19937& rng, int k, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<Letter> letter_dist(0, k - 1);
    Word w(static_cast<std::size_t>(len_dist(rng)));
    for (Letter& a : w) a = letter_dist(rng);
    return w;
}

/// Reset check by direct simulation of a single word.
inline bool resets(const Semiautomaton& a, const Word& w) {
    std::set<State> image;
    for (State q = 0; q < a.n; ++q) image.insert(a.run(q, w));
    return image.size() == 1;
}

}  // namespace synkit::testing

#endif  // SYNKIT_TESTS_HELPERS_HPP
