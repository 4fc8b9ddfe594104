#include <doctest.h>

#include "helpers.hpp"
#include "synkit/missing_factor.hpp"
#include "synkit/reset.hpp"

using namespace synkit;
using namespace synkit::testing;

namespace {

bool is_factor_of_language(const Word& u, const std::vector<Word>& m) {
    for (const Word& w : m)
        if (is_factor_of(u, w)) return true;
    return false;
}

}  // namespace

TEST_CASE("factor recognizer of finite languages") {
    Alphabet alpha = ab();
    SUBCASE("factors of a single word") {
        Acceptor f = factor_recognizer(acceptor_from_words(alpha, {W(alpha, "ab")}));
        for (const Word& w : all_words(2, 3)) CHECK(accepts(f, w) == is_factor_of_language(w, {W(alpha, "ab")}));
    }
    SUBCASE("factors of {ab,ba}") {
        std::vector<Word> m{W(alpha, "ab"), W(alpha, "ba")};
        Acceptor f = factor_recognizer(acceptor_from_words(alpha, m));
        for (const Word& w : all_words(2, 3)) CHECK(accepts(f, w) == is_factor_of_language(w, m));
    }
    SUBCASE("factors of the empty language") {
        CHECK(factor_recognizer(Acceptor(alpha, 0)).n == 0);
    }
}

TEST_CASE("missing factor search") {
    Alphabet alpha = ab();
    SUBCASE("M={aa} misses b at length 1") {
        auto hit = find_missing_factor(acceptor_from_words(alpha, {W(alpha, "aa")}), 4);
        REQUIRE(hit.has_value());
        CHECK(hit->first == 1);
        CHECK(hit->second == W(alpha, "b"));
    }
    SUBCASE("M={ab,ba} misses aa at length 2") {
        auto hit = find_missing_factor(acceptor_from_words(alpha, {W(alpha, "ab"), W(alpha, "ba")}), 4);
        REQUIRE(hit.has_value());
        CHECK(hit->first == 2);
        CHECK(hit->second == W(alpha, "aa"));
    }
    SUBCASE("the full square language misses nothing up to 2") {
        std::vector<Word> sq;
        for (const Word& w : all_words(2, 2))
            if (w.size() == 2) sq.push_back(w);
        CHECK_FALSE(find_missing_factor(acceptor_from_words(alpha, sq), 2).has_value());
    }
}

TEST_CASE("missing factor minimality and witness order") {
    Alphabet alpha = ab();
    for (auto words : {std::vector<std::string>{"aa"}, {"ab", "ba"}, {"aab", "bb"}, {"aba"}}) {
        std::vector<Word> m;
        for (const auto& s : words) m.push_back(W(alpha, s));
        Acceptor macc = acceptor_from_words(alpha, m);
        auto hit = find_missing_factor(macc, 5);
        REQUIRE(hit.has_value());
        Acceptor f = factor_recognizer(macc);
        // exhaustive check below the reported length
        for (const Word& w : all_words(2, static_cast<int>(hit->first))) {
            if (static_cast<long long>(w.size()) < hit->first)
                CHECK(accepts(f, w));
            else if (w < hit->second)
                CHECK(accepts(f, w));
        }
        CHECK_FALSE(accepts(f, hit->second));
        // factorial monotonicity: extending a missing factor keeps it missing
        for (Letter a = 0; a < 2; ++a) {
            Word longer = hit->second;
            longer.push_back(a);
            CHECK_FALSE(accepts(f, longer));
        }
    }
}

TEST_CASE("reset bound arithmetic") {
    CHECK(reset_length_bound(4, 1) == 8);
    CHECK(reset_length_bound(1, 1) == 2);
    CHECK(reset_length_bound(10, 3) == 51);
    CHECK_THROWS_AS(reset_length_bound(0, 1), Error);
}

TEST_CASE("bound applicability thresholds") {
    SUBCASE("n=4, norm 9, l*=1: cerny holds") {
        Applicability r = applicability(4, 9, 1);
        CHECK(r.cerny_applicable);
    }
    SUBCASE("n=4, norm 8, l*=2: quadratic holds with bound 49/4") {
        Applicability r = applicability(4, 8, 2);
        CHECK(r.quadratic_applicable);
        CHECK(r.quadratic_bound_num == 49);
        CHECK(r.quadratic_bound_den == 4);
    }
    SUBCASE("n=3, norm 2, l*=2: neither holds") {
        Applicability r = applicability(3, 2, 2);
        CHECK_FALSE(r.cerny_applicable);
        CHECK_FALSE(r.quadratic_applicable);
    }
}

TEST_CASE("full missing-factor analysis") {
    SUBCASE("C4 satisfies the reset bound whenever a factor is missing") {
        MissingFactorReport r = analyze_missing_factors(cerny(4), 4);
        CHECK(r.shortest_reset_length == 9);
        if (r.ell_star) {
            CHECK(*r.bound == reset_length_bound(4, *r.ell_star));
            CHECK(*r.bound_verified);
        }
    }
    SUBCASE("one-state automaton degenerates to M={eps}") {
        MissingFactorReport r = analyze_missing_factors(one_state(), 4);
        REQUIRE(r.ell_star.has_value());
        CHECK(*r.ell_star == 1);
        CHECK(*r.bound == 2);
        CHECK(r.shortest_reset_length == 0);
        CHECK(*r.bound_verified);
    }
    SUBCASE("non-synchronizing input is rejected") {
        CHECK_THROWS_AS(analyze_missing_factors(identity_automaton(2, ab()), 4), Error);
    }
}

TEST_CASE("reset bound holds on random synchronizing automata") {
    std::mt19937 rng(31);
    int found = 0;
    while (found < 40) {
        Semiautomaton a = random_semiautomaton(rng, 5, ab());
        if (!is_synchronizing(a)) continue;
        MissingFactorReport r = analyze_missing_factors(a, 4);
        if (!r.ell_star) continue;
        ++found;
        CHECK(*r.bound_verified);
    }
}
