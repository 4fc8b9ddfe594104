#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "synkit/io.hpp"

using namespace synkit;
using namespace synkit::testing;

TEST_CASE("word prefix and suffix conventions") {
    Alphabet alpha = ab();
    Word u = W(alpha, "aab");
    CHECK(suffix(u, 0) == Word{});
    CHECK(suffix(u, 1) == W(alpha, "b"));
    CHECK(suffix(u, 3) == u);
    CHECK(prefix(u, 0) == Word{});
    CHECK(prefix(u, 2) == W(alpha, "aa"));
    CHECK_THROWS_AS(suffix(u, 4), Error);
}

TEST_CASE("apply acts on state sets") {
    Semiautomaton c4 = cerny(4);
    CHECK(apply(c4, {0, 1, 2, 3}, {}) == StateSet{0, 1, 2, 3});
    CHECK(apply(c4, {0, 1, 2, 3}, W(ab(), "b")) == StateSet{1, 2, 3});
    Semiautomaton single = one_state();
    CHECK(apply(single, {0}, W(ab(), "abba")) == StateSet{0});
    CHECK_THROWS_AS(apply(c4, {0}, Word{5}), Error);
}

TEST_CASE("apply is associative over concatenation") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Semiautomaton a = random_semiautomaton(rng, 5, ab());
        Word u = random_word(rng, 2, 5);
        Word v = random_word(rng, 2, 5);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        StateSet s = {0, 2, 4};
        CHECK(apply(a, s, uv) == apply(a, apply(a, s, u), v));
    }
}

TEST_CASE("strong connectivity") {
    CHECK(is_strongly_connected(cerny(4)));
    CHECK(is_strongly_connected(one_state()));
    // a sink state breaks strong connectivity
    Semiautomaton sink(ab(), 3);
    for (State q = 0; q < 3; ++q) {
        sink.set(q, 0, std::max(0, q - 1));
        sink.set(q, 1, 0);
    }
    CHECK_FALSE(is_strongly_connected(sink));
}

TEST_CASE("determinize keeps a deterministic automaton intact") {
    Alphabet alpha = ab();
    Nfa nfa(alpha, 3);
    nfa.initials = {0};
    nfa.add_transition(0, 0, 1);
    nfa.add_transition(1, 1, 2);
    nfa.final_mask[2] = true;
    Acceptor d = determinize(nfa);
    CHECK(d.n == 3);
    CHECK(d.initial == 0);
    CHECK(d.step(0, 0) == 1);
    CHECK(d.step(0, 1) == Acceptor::kUndefined);
    CHECK(d.step(1, 1) == 2);
    CHECK(d.is_final(2));
}

TEST_CASE("determinize of the Sigma*M automaton for M={ab,ba}") {
    Alphabet alpha = ab();
    std::vector<Word> m{W(alpha, "ab"), W(alpha, "ba")};
    // B for {ab, ba} with a self-looping initial state recognizes Sigma*M
    Nfa nfa(alpha, 4);
    nfa.initials = {0};
    nfa.add_transition(0, 0, 0);
    nfa.add_transition(0, 1, 0);
    nfa.add_transition(0, 0, 1);
    nfa.add_transition(0, 1, 2);
    nfa.add_transition(1, 1, 3);
    nfa.add_transition(2, 0, 3);
    nfa.final_mask[3] = true;
    Acceptor d = determinize(nfa);
    for (const Word& w : all_words(2, 6)) CHECK(accepts(d, w) == ends_with_generator(w, m));
}

TEST_CASE("determinize of an empty initial set is the empty acceptor") {
    Nfa nfa(ab(), 2);
    nfa.final_mask[1] = true;
    Acceptor d = determinize(nfa);
    CHECK(d.n == 0);
    CHECK(is_empty(d));
}

TEST_CASE("determinize agrees with direct NFA simulation") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Nfa nfa(ab(), 4);
        std::uniform_int_distribution<int> coin(0, 3);
        nfa.initials = {0};
        for (State q = 0; q < 4; ++q) {
            if (coin(rng) == 0) nfa.final_mask[static_cast<std::size_t>(q)] = true;
            for (Letter a = 0; a < 2; ++a)
                for (State p = 0; p < 4; ++p)
                    if (coin(rng) == 0) nfa.add_transition(q, a, p);
        }
        Acceptor d = determinize(nfa);
        for (const Word& w : all_words(2, 8)) CHECK(accepts(d, w) == nfa.simulate(w));
    }
}

TEST_CASE("trim_minimize produces the canonical 4-state acceptor for {ab,ba}") {
    Alphabet alpha = ab();
    Acceptor d = acceptor_from_words(alpha, {W(alpha, "ab"), W(alpha, "ba")});
    CHECK(d.n == 4);
    CHECK(d.initial == 0);
    CHECK(d.step(0, 0) == 1);
    CHECK(d.step(0, 1) == 2);
    CHECK(d.step(1, 1) == 3);
    CHECK(d.step(2, 0) == 3);
    CHECK(d.step(1, 0) == Acceptor::kUndefined);
    CHECK(d.is_final(3));
    CHECK_FALSE(d.is_final(0));
}

TEST_CASE("trim_minimize is idempotent and preserves the language") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        Acceptor d(ab(), 5);
        d.initial = 0;
        std::uniform_int_distribution<int> state(-1, 4);
        for (State q = 0; q < 5; ++q) {
            if (state(rng) > 2) d.final_mask[static_cast<std::size_t>(q)] = true;
            for (Letter a = 0; a < 2; ++a) {
                int p = state(rng);
                if (p >= 0) d.set(q, a, p);
            }
        }
        Acceptor m1 = trim_minimize(d);
        Acceptor m2 = trim_minimize(m1);
        CHECK(serialize_aut(m1) == serialize_aut(m2));
        CHECK(equivalent(d, m1).equal);
    }
}

TEST_CASE("trim_minimize of the empty language is the 0-state acceptor") {
    Acceptor d(ab(), 3);
    d.initial = 0;
    d.set(0, 0, 1);
    d.set(1, 1, 2);  // no finals at all
    CHECK(trim_minimize(d).n == 0);
    CHECK(acceptor_from_words(ab(), {}).n == 0);
}

TEST_CASE("boolean operations") {
    Alphabet alpha = ab();
    Acceptor aa_ideal = ideal_closure(acceptor_from_words(alpha, {W(alpha, "aa")}));
    SUBCASE("difference with itself is empty") {
        CHECK(is_empty(bool_ops(aa_ideal, aa_ideal, BoolOp::Difference)));
    }
    SUBCASE("intersection with the full language is the identity") {
        Acceptor full = complement(Acceptor(alpha, 0));
        CHECK(equivalent(bool_ops(aa_ideal, full, BoolOp::Intersect), aa_ideal).equal);
    }
    SUBCASE("alphabet mismatch is rejected") {
        Acceptor other(abc(), 1);
        other.initial = 0;
        CHECK_THROWS_AS(bool_ops(aa_ideal, other, BoolOp::Union), Error);
    }
    SUBCASE("difference of the {ab,ba} ideal with its letter-shift") {
        std::vector<Word> m{W(alpha, "ab"), W(alpha, "ba")};
        Acceptor ideal = ideal_closure(acceptor_from_words(alpha, m));
        Acceptor shifted = prepend_any_letter(ideal);
        Acceptor diff = bool_ops(ideal, shifted, BoolOp::Difference);
        for (const Word& w : all_words(2, 5)) {
            bool expected = in_ideal_of(w, m) && !(w.size() >= 1 && in_ideal_of(suffix(w, w.size() - 1), m));
            CHECK(accepts(diff, w) == expected);
        }
    }
}

TEST_CASE("equivalence with counterexamples") {
    Alphabet alpha = ab();
    Acceptor d1 = acceptor_from_words(alpha, {W(alpha, "ab")});
    Acceptor d2 = acceptor_from_words(alpha, {W(alpha, "ab"), W(alpha, "ba")});
    CHECK(equivalent(d1, d1).equal);
    EquivalenceResult r = equivalent(d1, d2);
    CHECK_FALSE(r.equal);
    CHECK(*r.counterexample == W(alpha, "ba"));
}

TEST_CASE("counterexamples are shortest and lexicographically least") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        Acceptor d1(ab(), 3);
        Acceptor d2(ab(), 3);
        std::uniform_int_distribution<int> state(0, 2);
        std::uniform_int_distribution<int> coin(0, 1);
        for (Acceptor* d : {&d1, &d2}) {
            d->initial = 0;
            for (State q = 0; q < 3; ++q) {
                d->final_mask[static_cast<std::size_t>(q)] = coin(rng) == 1;
                for (Letter a = 0; a < 2; ++a) d->set(q, a, state(rng));
            }
        }
        EquivalenceResult r = equivalent(d1, d2);
        if (r.equal) {
            for (const Word& w : all_words(2, 6)) CHECK(accepts(d1, w) == accepts(d2, w));
        } else {
            CHECK(accepts(d1, *r.counterexample) != accepts(d2, *r.counterexample));
            for (const Word& w : all_words(2, static_cast<int>(r.counterexample->size()))) {
                if (w.size() < r.counterexample->size() || (w.size() == r.counterexample->size() && w < *r.counterexample))
                    CHECK(accepts(d1, w) == accepts(d2, w));
            }
        }
    }
}

TEST_CASE("shortest accepted word") {
    Alphabet alpha = ab();
    CHECK_FALSE(shortest_accepted(Acceptor(alpha, 0)).has_value());
    Acceptor d = acceptor_from_words(alpha, {W(alpha, "ab"), W(alpha, "ba")});
    CHECK(*shortest_accepted(d) == W(alpha, "ab"));
}

TEST_CASE("accepts on the finite language {ab,ba}") {
    Alphabet alpha = ab();
    Acceptor d = acceptor_from_words(alpha, {W(alpha, "ab"), W(alpha, "ba")});
    CHECK(accepts(d, W(alpha, "ab")));
    CHECK_FALSE(accepts(d, W(alpha, "a")));
    CHECK_FALSE(accepts(d, W(alpha, "aba")));
}

TEST_CASE("minimal acceptors of factor-free finite languages have a single dead-end final") {
    Alphabet alpha = ab();
    for (auto words : {std::vector<std::string>{"ab", "ba"}, {"aa"}, {"aab", "bb"}, {"aba", "bab"}}) {
        std::vector<Word> m;
        for (const auto& s : words) m.push_back(W(alpha, s));
        Acceptor d = acceptor_from_words(alpha, m);
        int finals = 0;
        for (State q = 0; q < d.n; ++q)
            if (d.is_final(q)) {
                ++finals;
                for (Letter a = 0; a < 2; ++a) CHECK(d.step(q, a) == Acceptor::kUndefined);
            }
        CHECK(finals == 1);
    }
}
