#include <doctest.h>

#include <cstdlib>

#include "altseq/errors.hpp"
#include "altseq/permstat.hpp"
#include "oracles.hpp"

using namespace altseq;
namespace oracle = altseq::testing;

TEST_CASE("permutation parsing and validation") {
    auto w = Permutation::parse("6 4 2 8 3 1 5 7");
    CHECK(w.size() == 8);
    CHECK(w[0] == 6);
    CHECK(Permutation::parse("3,1,2") == Permutation::from_values({3, 1, 2}));
    CHECK(Permutation::parse("").size() == 0);

    CHECK_THROWS_AS(Permutation::parse("1 1"), ParseError);
    CHECK_THROWS_AS(Permutation::parse("0 1"), ParseError);
    CHECK_THROWS_AS(Permutation::parse("1 2 4"), ParseError);
    CHECK_THROWS_AS(Permutation::parse("1 x 2"), ParseError);
    try {
        Permutation::parse("2 1 2");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("as_len on the named cases") {
    for (int n = 1; n <= 6; ++n) CHECK(as_len(Permutation::identity(n)) == 1);
    CHECK(as_len(Permutation::parse("6 4 2 8 3 1 5 7")) == 5);
    CHECK(as_len(Permutation::parse("2 1")) == 2);
    CHECK(as_len(Permutation()) == 0);
    CHECK(as_len_dp(Permutation()) == 0);
    // n 1 2 ... (n-1): the prefix n > 1 < 2 already alternates, so the
    // answer is 3 from n = 3 on (and 2 at n = 2)
    for (int n = 2; n <= 7; ++n) {
        std::vector<int> v = {n};
        for (int i = 1; i < n; ++i) v.push_back(i);
        Permutation w = Permutation::from_values(v);
        CHECK(as_len_dp(w) == (n == 2 ? 2 : 3));
        CHECK(as_len_dp(w) == oracle::as_len_exhaustive(w));
    }
}

TEST_CASE("run decomposition") {
    auto d = runs(Permutation::parse("6 4 2 8 3 1 5 7"));
    REQUIRE(d.count() == 4);
    CHECK(d.first_descent);
    // 642, 28, 831, 157 with shared boundary elements
    CHECK(d.runs[0].begin == 0);
    CHECK(d.runs[0].end == 2);
    CHECK(d.runs[0].dir == RunDir::decreasing);
    CHECK(d.runs[1].begin == 2);
    CHECK(d.runs[1].end == 3);
    CHECK(d.runs[1].dir == RunDir::increasing);
    CHECK(d.runs[2].begin == 3);
    CHECK(d.runs[2].end == 5);
    CHECK(d.runs[3].begin == 5);
    CHECK(d.runs[3].end == 7);
    CHECK(d.runs[3].dir == RunDir::increasing);

    CHECK(runs(Permutation::parse("1 2 3")).count() == 1);
    auto d213 = runs(Permutation::parse("2 1 3"));
    CHECK(d213.count() == 2);
    CHECK(d213.runs[0].dir == RunDir::decreasing);
    CHECK(d213.runs[1].dir == RunDir::increasing);
    CHECK(runs(Permutation::identity(1)).count() == 1);
    CHECK_THROWS_AS(runs(Permutation()), EmptyPermutation);
}

TEST_CASE("descent sets") {
    CHECK(descent_set(Permutation::parse("6 4 2 8 3 1 5 7")) == std::set<int>{1, 2, 4, 5});
    CHECK(descent_set(Permutation::identity(5)).empty());
    // w is alternating iff D(w) = {1,3,5,...} at every size up to 6
    for (int n = 1; n <= 6; ++n) {
        std::set<int> odd;
        for (int i = 1; i < n; i += 2) odd.insert(i);
        for_each_permutation(n, [&](const Permutation& w) {
            CHECK((as_len(w) == n) == (descent_set(w) == odd));
        });
    }
}

TEST_CASE("longest increasing subsequence") {
    CHECK(is_len(Permutation::identity(9)) == 9);
    CHECK(is_len(Permutation::reverse_identity(9)) == 1);
    CHECK(is_len(Permutation::parse("6 4 2 8 3 1 5 7")) == 4);
    for (int n = 0; n <= 7; ++n)
        for_each_permutation(n, [&](const Permutation& w) {
            CHECK(is_len(w) == oracle::is_len_quadratic(w));
        });
}

TEST_CASE("exhaustive oracle agreement for as and the run formula, n <= 8") {
    for (int n = 0; n <= 8; ++n)
        for_each_permutation(n, [&](const Permutation& w) {
            int a = as_len(w);
            CHECK(a == as_len_dp(w));
            if (n <= 6) CHECK(a == oracle::as_len_exhaustive(w));
            if (n >= 2) {
                auto d = runs(w);
                CHECK(a == d.count() + (d.first_descent ? 1 : 0));
            }
        });
    // the expensive full-subsequence oracle at n = 7, 8
    for (int n = 7; n <= 8; ++n)
        for_each_permutation(n, [&](const Permutation& w) {
            CHECK(as_len(w) == oracle::as_len_exhaustive(w));
        });
}

TEST_CASE("len_sigma") {
    auto U = DescentWord::parse("U");
    auto DU = DescentWord::parse("DU");
    auto UUD = DescentWord::parse("UUD");
    CHECK(len_sigma(Permutation::parse("1 2 3"), UUD) == 3); // UU prefixes (UUD)^inf
    CHECK(len_sigma(Permutation(), DU) == 0);
    CHECK_THROWS_AS(len_sigma(Permutation::identity(3), DescentWord()), EmptySigma);
    CHECK_THROWS_AS(DescentWord::parse("UXD"), ParseError);

    CHECK(DescentWord::of_length(3, true).str() == "DDD");
    CHECK(DescentWord::of_length(2, false).str() == "UU");
    auto word = DescentWord::of_sequence({6, 4, 2, 8, 3, 1, 5, 7});
    CHECK(word.str() == "DDUDDUU"); // length m-1 for a sequence of length m

    // degenerations: len_U = is, len_DU = as, exhaustively for n <= 8
    for (int n = 0; n <= 8; ++n)
        for_each_permutation(n, [&](const Permutation& w) {
            CHECK(len_sigma(w, U) == is_len(w));
            CHECK(len_sigma(w, DU) == as_len(w));
        });

    // arbitrary words against the exhaustive subsequence oracle
    for (const char* s : {"UUD", "DDU", "UDU", "DUUD"}) {
        auto sigma = DescentWord::parse(s);
        for (int n = 0; n <= 6; ++n)
            for_each_permutation(n, [&](const Permutation& w) {
                CHECK(len_sigma(w, sigma) == oracle::len_sigma_exhaustive(w, sigma));
            });
    }
}

TEST_CASE("max alternating subsequence through a fixed value") {
    CHECK(max_as_containing_value(Permutation::parse("1 2"), 1) == 1);
    CHECK(max_as_containing_value(Permutation::parse("6 4 2 8 3 1 5 7"), 8) == 5);
    CHECK_THROWS_AS(max_as_containing_value(Permutation::parse("2 1"), 3), ValueAbsent);

    // constrained oracle agreement and the key structural fact (value n)
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& w) {
            for (int v = 1; v <= n; ++v)
                CHECK(max_as_containing_value(w, v) == oracle::as_len_exhaustive_containing(w, v));
        });
    for (int n = 1; n <= 8; ++n)
        for_each_permutation(n, [&](const Permutation& w) {
            CHECK(max_as_containing_value(w, n) == as_len(w));
        });
}

TEST_CASE("parity bijection and complement symmetry, n <= 8") {
    for (int n = 2; n <= 8; ++n) {
        BigInt even(0), odd(0);
        for_each_permutation(n, [&](const Permutation& w) {
            int a = as_len(w);
            (a % 2 == 0 ? even : odd) += 1;

            // switching the last two elements moves as by exactly +-1
            std::vector<int> v = w.values();
            std::swap(v[n - 1], v[n - 2]);
            int swapped = as_len(Permutation::unchecked(std::move(v)));
            CHECK(std::abs(swapped - a) == 1);

            // complement preserves the run count and toggles the first descent
            auto d = runs(w);
            auto dc = runs(w.complement());
            CHECK(d.count() == dc.count());
            CHECK(d.first_descent != dc.first_descent);
        });
        CHECK(even == odd);
        CHECK(even + odd == factorial(static_cast<unsigned long>(n)));
    }
}

TEST_CASE("pattern avoidance") {
    CHECK(avoids(Permutation::parse("1 2 3"), Permutation::parse("2 1")));
    CHECK_FALSE(avoids(Permutation::parse("1 3 2"), Permutation::parse("2 1")));
    // patterns longer than the permutation are avoided vacuously
    for_each_permutation(3, [&](const Permutation& w) {
        CHECK(avoids(w, Permutation::parse("1 2 3 4")));
    });

    // #{w in S_4 avoiding 213 and 312} = 8 = b_2(4)
    int count = 0;
    for_each_permutation(4, [&](const Permutation& w) {
        if (avoids(w, Permutation::parse("2 1 3")) && avoids(w, Permutation::parse("3 1 2")))
            ++count;
    });
    CHECK(count == 8);
}

TEST_CASE("descent-class avoidance counts") {
    CHECK(patterns_with_descent_set(3, {1}).size() == 2); // 213 and 312
    CHECK(count_avoiders_descent_class(4, 3, {1}) == 8);
    // S = {} and k = 2 leaves only the reverse identity
    CHECK(count_avoiders_descent_class(4, 2, {}) == 1);
    // k=4, S={1,3}: the alternating class; counts must match b_3(n)
    for (int n = 1; n <= 6; ++n) {
        BigInt want = 0;
        // b_3(n) = (3^n - 2n + 3)/4
        want = (pow_int(BigInt(3), static_cast<unsigned long>(n)) - BigInt(2 * n) + 3) / 4;
        CHECK(count_avoiders_descent_class(n, 4, {1, 3}) == want);
    }
    CHECK_THROWS_AS(count_avoiders_descent_class(13, 3, {1}), SizeLimitExceeded);
    CHECK_THROWS_AS(count_avoiders_descent_class(5, 7, {1}), SizeLimitExceeded);
}
