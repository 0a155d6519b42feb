#include <doctest.h>

#include "altseq/errors.hpp"
#include "altseq/permstat.hpp"
#include "altseq/series_identities.hpp"

using namespace altseq;

TEST_CASE("B(x,t) coefficients are the b_k(n)") {
    BiSeries b = expand_B(8, 8);
    CHECK(b.egf_coeff(4, 2) == 8);  // b_2(4) = 2^3
    CHECK(b.egf_coeff(4, 3) == 19); // b_3(4)
    for (int n = 1; n <= 8; ++n) CHECK(b.egf_coeff(n, 0) == 0);
    // B(0,t) = 1/(1-t): the empty permutation satisfies as = 0 <= k for every k
    for (int k = 0; k <= 8; ++k) CHECK(b.egf_coeff(0, k) == 1);
    CHECK(verify_b_coefficients(8, 8).pass());
}

TEST_CASE("Gessel's simplified form agrees") {
    BiSeries bg = expand_B_gessel(8, 8);
    CHECK(bg.egf_coeff(1, 1) == 1); // b_1(1)
    for (int k = 0; k <= 8; ++k) CHECK(bg.egf_coeff(0, k) == 1);
    CHECK(verify_gessel_form(8, 8).pass());
    CHECK(verify_A_from_B(8, 8).pass());
}

TEST_CASE("A(x,t) slices are the T_n rows") {
    BiSeries a = expand_A(8, 8);
    Poly t6 = a.t_slice_egf(6);
    std::vector<long> want = {0, 1, 31, 148, 268, 211, 61};
    for (size_t k = 0; k < want.size(); ++k) CHECK(t6.coeff(static_cast<int>(k)) == want[k]);
    // A(0, t) = 1
    CHECK(a.t_slice_egf(0) == Poly(BigRat(1)));
    for (int n = 1; n <= 8; ++n) CHECK(a.egf_coeff(n, 1) == 1); // a_1(n) = 1

    auto table = build_a_table(8);
    CHECK(verify_A_slices_vs_table(table, 8, 8).pass());
}

TEST_CASE("even/odd split and the square identity") {
    auto a = expand_A(8, 8);
    auto [ae, ao] = split_even_odd(a);
    CHECK(ae + ao == a);
    // A_e(x, 0) = 1: no nonempty permutation has even as = 0
    for (int n = 0; n <= 8; ++n) CHECK(ae.at(n, 0) == BigRat(n == 0 ? 1 : 0));
    CHECK(verify_even_odd_square(8, 8).pass());
}

TEST_CASE("differential system of Theorem 1") {
    auto rep = verify_ode_system(8, 8);
    CHECK(rep.pass());
    CHECK(rep.order_x == 7);

    // by hand at the t^1 x^1 slice: d/dx A_o there is a_1(2)/2! * 2 = 1,
    // matching F_1 = e^x - 1
    auto [ae, ao] = split_even_odd(expand_A(8, 8));
    CHECK(ao.dx().at(1, 1) == 1);
    // initial condition A(0,t) = 1
    CHECK(expand_A(8, 8).t_slice_egf(0) == Poly(BigRat(1)));
}

TEST_CASE("recurrence transported to the EGF slices") {
    auto table = build_a_table(9);
    CHECK(verify_recurrence_vs_series(table, 9, 9).pass());

    // F_0' = 0 and F_1' = F_0 F_0 + F_1 F_0 amount to e^x = 1 + (e^x - 1);
    // a corrupted entry must be caught and located
    CountTable bad = build_a_table(9);
    bad.a_mut(5, 2) += 1;
    auto rep = verify_recurrence_vs_series(bad, 9, 9);
    CHECK_FALSE(rep.pass());
    REQUIRE(rep.first_nonzero.has_value());
    auto [n, k, residual] = *rep.first_nonzero;
    CHECK(sgn(residual) != 0);
    // the corruption sits in row 5; the first broken derivative check is at x^4
    CHECK(n == 4);
    CHECK(rep.format().find("FAIL") == 0);
    CHECK(rep.format().find("residual=") != std::string::npos);
}

TEST_CASE("moment generating functions M_1..M_4") {
    auto table = build_a_table(14);
    CHECK(verify_moment_gfs(table, 14).pass());

    CountTable bad = build_a_table(14);
    bad.a_mut(7, 3) += 1;
    auto rep = verify_moment_gfs(bad, 14);
    CHECK_FALSE(rep.pass());
    REQUIRE(rep.first_nonzero.has_value());
    CHECK(std::get<0>(*rep.first_nonzero) == 7);
}

TEST_CASE("Eulerian generating function slices") {
    CHECK(verify_eulerian_gf(8).pass());
}

TEST_CASE("tangent-number limits of Corollary 2") {
    auto rep = verify_tangent_limit(10);
    CHECK(rep.pass());
    // E_3 = 2 and E_5 = 16 straight off the sech^2 coefficients:
    // [y^2] sech^2 = -1, [y^4] sech^2 = 2/3
    CHECK_THROWS_AS(verify_tangent_limit(1), OutOfRange);
}

TEST_CASE("Gessel's Bessel determinant") {
    auto u1 = gessel_determinant_u(1, 8);
    for (const auto& v : u1) CHECK(v == 1); // is(w) <= 1 means strictly decreasing

    auto u2 = gessel_determinant_u(2, 4);
    CHECK(u2[3] == 5); // everything in S_3 except 123

    // u_k(n) = n! once k >= n
    auto u4 = gessel_determinant_u(4, 4);
    CHECK(u4[3] == 6);
    CHECK(u4[4] == 24);
    auto u6 = gessel_determinant_u(6, 5);
    CHECK(u6[5] == 120);

    // brute-force filtered counts up to n = 6
    for (int k = 1; k <= 4; ++k) {
        auto u = gessel_determinant_u(k, 6);
        for (int n = 0; n <= 6; ++n) {
            BigInt brute(0);
            for_each_permutation(n, [&](const Permutation& w) {
                if (is_len(w) <= k) ++brute;
            });
            CHECK(u[static_cast<size_t>(n)] == brute);
        }
    }

    CHECK_THROWS_AS(gessel_determinant_u(7, 3), SizeLimitExceeded);
    CHECK_THROWS_AS(gessel_determinant_u(2, 9), SizeLimitExceeded);
}

TEST_CASE("report formatting and the suite driver") {
    auto rep = IdentityReport::passed("demo", 8, 8);
    CHECK(rep.format() == "PASS demo (8,8)");
    auto bad = IdentityReport::failed("demo", 8, 8, 3, 2, BigRat(1, 2));
    CHECK(bad.format() == "FAIL demo at (3,2) residual=1/2");

    SuiteOptions opt;
    opt.order_x = 6;
    opt.order_t = 6;
    opt.divisibility_max_n = 8;
    opt.rootedness_max_n = 7;
    opt.run_relation_max_n = 7;
    opt.david_barton_max_n = 5;
    opt.moments_up_to = 8;
    opt.closed_forms_max_n = 8;
    opt.eulerian_order = 5;
    for (auto suite : {VerifySuite::series, VerifySuite::polys, VerifySuite::moments}) {
        auto reports = run_verification_suite(suite, opt);
        CHECK(!reports.empty());
        for (const auto& r : reports) CHECK(r.pass());
    }
}
