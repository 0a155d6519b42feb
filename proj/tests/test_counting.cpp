#include <doctest.h>

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "altseq/counting.hpp"
#include "altseq/errors.hpp"
#include "altseq/permstat.hpp"

using namespace altseq;

namespace {

// T_1..T_7 coefficient rows, starting at k = 1.
const std::map<int, std::vector<long>> kTRows = {
    {1, {1}},
    {2, {1, 1}},
    {3, {1, 3, 2}},
    {4, {1, 7, 11, 5}},
    {5, {1, 15, 43, 45, 16}},
    {6, {1, 31, 148, 268, 211, 61}},
    {7, {1, 63, 480, 1344, 1767, 1113, 272}},
};

} // namespace

TEST_CASE("recurrence table reproduces the printed rows and row sums") {
    auto t = build_a_table(10);
    for (const auto& [n, row] : kTRows) {
        CHECK(t.a(n, 0) == 0);
        for (int k = 1; k <= n; ++k) CHECK(t.a(n, k) == row[static_cast<size_t>(k) - 1]);
    }
    for (int n = 0; n <= 10; ++n)
        CHECK(t.row_sum(n) == factorial(static_cast<unsigned long>(n)));
    CHECK(t.a(0, 0) == 1);
    CHECK_THROWS_AS(t.a(11, 0), OutOfRange);
    CHECK_THROWS_AS(t.a(3, 4), OutOfRange);
}

TEST_CASE("recurrence equals the defining brute force up to n = 7") {
    auto t = build_a_table(7);
    auto bf = a_table_bruteforce(7);
    for (int n = 0; n <= 7; ++n)
        for (int k = 0; k <= n; ++k) CHECK(t.a(n, k) == bf.a(n, k));
    // diagonal = Euler numbers, first column after 0 is constant 1
    auto e = euler_numbers(7);
    for (int n = 1; n <= 7; ++n) {
        CHECK(bf.a(n, n) == e[static_cast<size_t>(n)]);
        CHECK(bf.a(n, 1) == 1);
    }
    CHECK_THROWS_AS(a_table_bruteforce(9), SizeLimitExceeded);
}

TEST_CASE("closed form for b_k(n)") {
    CHECK(b_closed(2, 5) == 16);
    CHECK(b_closed(3, 4) == 19);
    for (int n = 1; n <= 8; ++n) // b_k(n) = n! once k >= n
        CHECK(b_closed(n, n) == factorial(static_cast<unsigned long>(n)));
    CHECK(b_closed(4, 4) == 24);
    CHECK_THROWS_AS(b_closed(0, 3), OutOfRange);

    // the five printed specializations, n <= 30
    for (long n = 1; n <= 30; ++n) {
        BigInt p2 = pow_int(BigInt(2), static_cast<unsigned long>(n));
        BigInt p3 = pow_int(BigInt(3), static_cast<unsigned long>(n));
        BigInt p4 = pow_int(BigInt(4), static_cast<unsigned long>(n));
        BigInt p5 = pow_int(BigInt(5), static_cast<unsigned long>(n));
        BigInt p6 = pow_int(BigInt(6), static_cast<unsigned long>(n));
        CHECK(b_closed(2, n) == p2 / 2);
        CHECK(b_closed(3, n) == (p3 - 2 * n + 3) / 4);
        CHECK(b_closed(4, n) == (p4 - 2 * (n - 2) * p2) / 8);
        CHECK(b_closed(5, n) == (p5 - (2 * n - 5) * p3 + 2 * (n * n - 5 * n + 5)) / 16);
        CHECK(b_closed(6, n) == (p6 - 2 * (n - 3) * p4 + (2 * n * n - 12 * n + 15) * p2) / 32);
    }

    // prefix sums of the table agree with the closed form up to n = 25
    auto t = build_a_table(25);
    for (int n = 1; n <= 25; ++n)
        for (int k = 1; k <= 25; ++k) CHECK(t.b(n, k) == b_closed(k, n));
    CHECK(t.b(4, 2) == 8);
    CHECK(t.b(6, 6) == 720);
    CHECK(t.b(6, 5) == 720 - 61);
    CHECK_THROWS_AS(t.b(26, 1), OutOfRange);
}

TEST_CASE("alternating-run counts by inversion match direct tallying") {
    auto t = build_a_table(8);
    auto g = g_table(t);
    for (int n = 2; n <= 8; ++n) {
        CHECK(g[n][1] == 2); // identity and its reverse
        BigInt sum(0);
        for (const auto& x : g[n]) sum += x;
        CHECK(sum == factorial(static_cast<unsigned long>(n)));
    }
    for (int n = 2; n <= 7; ++n) {
        std::vector<BigInt> direct(static_cast<size_t>(n) + 1, BigInt(0));
        for_each_permutation(n, [&](const Permutation& w) { ++direct[runs(w).count()]; });
        for (int k = 0; k <= n; ++k) CHECK(g[n][k] == direct[k]);
    }
    // 64283157 has four alternating runs, so it is one of g_4(8)
    CHECK(runs(Permutation::parse("6 4 2 8 3 1 5 7")).count() == 4);
    CHECK(g[8][4] > 0);

    // inconsistent input triangle is rejected
    CountTable bad(2);
    bad.a_mut(0, 0) = 1;
    bad.a_mut(2, 1) = 2;
    bad.a_mut(2, 2) = 1;
    CHECK_THROWS_AS(g_table(bad), NegativeEntry);
}

TEST_CASE("T, U and G polynomials") {
    auto t = build_a_table(12);
    CHECK(T_poly(t, 1) == Poly({BigRat(0), BigRat(1)}));
    CHECK(T_poly(t, 5) == Poly({BigRat(0), BigRat(1), BigRat(15), BigRat(43), BigRat(45), BigRat(16)}));
    for (int n = 0; n <= 12; ++n)
        CHECK(T_poly(t, n).eval(BigRat(1)) == BigRat(factorial(static_cast<unsigned long>(n))));
    for (int n = 2; n <= 12; ++n) CHECK(T_poly(t, n).eval(BigRat(-1)) == 0);

    auto u2 = U_poly(t, 2);
    CHECK(u2.u == Poly({BigRat(0), BigRat(1)}));
    CHECK(u2.value_at_minus1 == BigRat(-1));
    CHECK(U_poly(t, 5).value_at_minus1 == BigRat(-4));

    // T_n = (1+t) G_n / 2 for the table range
    for (int n = 2; n <= 12; ++n)
        CHECK(T_poly(t, n) == (Poly::one_plus_t() * G_poly(t, n)) * BigRat(1, 2));
}

TEST_CASE("Euler numbers by boustrophedon") {
    auto e = euler_numbers(10);
    std::vector<long> want = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
    for (size_t i = 0; i < want.size(); ++i) CHECK(e[i] == want[i]);
}

TEST_CASE("Eulerian polynomials") {
    CHECK(eulerian_poly(1) == Poly({BigRat(0), BigRat(1)}));
    CHECK(eulerian_poly(2) == Poly({BigRat(0), BigRat(1), BigRat(1)}));
    CHECK(eulerian_poly(3) == Poly({BigRat(0), BigRat(1), BigRat(4), BigRat(1)}));
    // direct descent tally up to n = 6
    for (int n = 1; n <= 6; ++n) {
        std::vector<BigRat> c(static_cast<size_t>(n) + 1, BigRat(0));
        for_each_permutation(n, [&](const Permutation& w) {
            c[descent_set(w).size() + 1] += 1;
        });
        CHECK(eulerian_poly(n) == Poly(std::move(c)));
        CHECK(eulerian_poly(n).eval(BigRat(1)) == BigRat(factorial(static_cast<unsigned long>(n))));
    }
    CHECK_THROWS_AS(eulerian_poly(0), OutOfRange);
}

TEST_CASE("David-Barton identity at rational points") {
    auto t = build_a_table(10);
    // w = 1 means t = 0; both sides vanish for n = 2
    std::vector<BigRat> one = {BigRat(1)};
    CHECK(david_barton_check(t, 2, one));
    CHECK(G_poly(t, 2).eval(BigRat(0)) == 0);

    for (int n = 2; n <= 8; ++n) {
        std::vector<BigRat> pts;
        for (int i = 1; i <= n; ++i) pts.emplace_back(i);
        CHECK(david_barton_check(t, n, pts));
    }

    // a corrupted table makes the mismatch point visible
    CountTable bad = build_a_table(4);
    bad.a_mut(3, 3) += 1; // keeps the g-inversion nonnegative but changes G_3
    std::vector<BigRat> pts = {BigRat(2)};
    CHECK_THROWS_AS(david_barton_check(bad, 3, pts), MismatchAt);
}

TEST_CASE("factorial moments and closed forms") {
    auto t = build_a_table(12);
    CHECK(factorial_moment(t, 1, 2).value == BigRat(3, 2));
    CHECK(factorial_moment(t, 2, 4).value == BigRat(35, 6));
    for (int n = 0; n <= 12; ++n) CHECK(factorial_moment(t, 0, n).value == 1);

    CHECK(mean_closed(4) == BigRat(17, 6));
    CHECK(factorial_moment(t, 1, 4).value == BigRat(17, 6));
    CHECK(var_closed(4) == BigRat(23, 36));
    for (int n = 2; n <= 12; ++n) CHECK(factorial_moment(t, 1, n).value == mean_closed(n));
    for (int n = 4; n <= 12; ++n) {
        BigRat nu1 = factorial_moment(t, 1, n).value;
        BigRat nu2 = factorial_moment(t, 2, n).value;
        CHECK(nu2 + nu1 - nu1 * nu1 == var_closed(n));
    }
    CHECK_THROWS_AS(mean_closed(1), OutOfValidityRange);
    CHECK_THROWS_AS(var_closed(3), OutOfValidityRange);
}

TEST_CASE("observed polynomiality thresholds match the stated ranges") {
    auto t = build_a_table(16);
    CHECK(nu_polynomiality_threshold(t, 1) == 2);
    CHECK(nu_polynomiality_threshold(t, 2) == 4);
    CHECK(nu_polynomiality_threshold(t, 3) == 6);
    CHECK(nu_polynomiality_threshold(t, 4) == 8);
}

TEST_CASE("CSV and JSON exports round-trip") {
    auto t = build_a_table(6);
    auto g = g_table(t);

    std::ostringstream csv;
    export_csv(t, csv, true, true, true);
    std::istringstream in(csv.str());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "n,k,a,b,g");
    int rows = 0;
    while (std::getline(in, line)) {
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        int n, k;
        std::string a_s, b_s, g_s;
        ls >> n >> k >> a_s >> b_s;
        CHECK(BigInt(a_s) == t.a(n, k));
        CHECK(BigInt(b_s) == t.b(n, k));
        if (ls >> g_s) CHECK(BigInt(g_s) == g[n][k]);
        else CHECK(n < 2);
        ++rows;
    }
    CHECK(rows == 7 * 8 / 2);

    std::ostringstream js;
    export_json(t, js, true, true, true);
    auto doc = nlohmann::json::parse(js.str());
    CHECK(doc["max_n"] == 6);
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(BigInt(doc["a"][n][k].get<std::string>()) == t.a(n, k));
            CHECK(BigInt(doc["b"][n][k].get<std::string>()) == t.b(n, k));
            if (n >= 2) CHECK(BigInt(doc["g"][n][k].get<std::string>()) == g[n][k]);
        }
    CHECK(doc["g"][0].empty());
}
