#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "altseq/biseries.hpp"
#include "altseq/counting.hpp"

namespace altseq {

// Outcome of one exact identity verification. A nonzero residual is a hard
// failure and carries the first offending coefficient position.
struct IdentityReport {
    std::string name;
    int order_x = 0;
    int order_t = 0;
    bool residual_zero = false;
    std::optional<std::tuple<int, int, BigRat>> first_nonzero;
    std::string note;

    bool pass() const { return residual_zero; }
    std::string format() const; // "PASS name (x,t)" / "FAIL name at (n,k) residual=r"

    static IdentityReport from_residual(std::string name, const BiSeries& residual);
    static IdentityReport passed(std::string name, int order_x, int order_t, std::string note = "");
    static IdentityReport failed(std::string name, int order_x, int order_t, int n, int k,
                                 BigRat residual, std::string note = "");
};

// rho = sqrt(1 - t^2), the radical of Theorem 1, as a concrete t-series.
BiSeries rho_series(int order_x, int order_t);

// B(x,t) = (1 + rho + 2t e^{rho x} + (1-rho) e^{2 rho x})
//        / (1 + rho - t^2 + (1 - rho - t^2) e^{2 rho x}).
BiSeries expand_B(int order_x, int order_t);

// Gessel's simplification B = (2/rho) / (1 - ((1-rho)/t) e^{rho x}) - 1/rho;
// 1-rho is divisible by t^2, so (1-rho)/t is a genuine t-series.
BiSeries expand_B_gessel(int order_x, int order_t);

// A(x,t) = (1-t) B(x,t); its x^n/n! slice is T_n(t).
BiSeries expand_A(int order_x, int order_t);

// n! [x^n t^k] B against the closed form of Corollary 1 (set-definition
// values 1 at n = 0 and 0 at k = 0 < n).
IdentityReport verify_b_coefficients(int order_x, int order_t);
// expand_B == expand_B_gessel, coefficient for coefficient.
IdentityReport verify_gessel_form(int order_x, int order_t);
// A == (1-t) * B via the independent Gessel route.
IdentityReport verify_A_from_B(int order_x, int order_t);
// x^n/n! slices of A against T_n from the recurrence table.
IdentityReport verify_A_slices_vs_table(const CountTable& t, int order_x, int order_t);
// A_e^2 - A_o^2 == 1 to truncation.
IdentityReport verify_even_odd_square(int order_x, int order_t);
// dA_e/dx = t A_e A_o + A_o^2 and dA_o/dx = t A_e^2 + A_e A_o; residuals
// certified on (order_x - 1, order_t).
IdentityReport verify_ode_system(int order_x, int order_t);
// The EGF slices F_k(x) of the table satisfy
// F_k' = sum_{2r+s=k-1} (F_{2r} + F_{2r+1}) F_s to order (order_x - 1).
IdentityReport verify_recurrence_vs_series(const CountTable& t, int order_x, int order_t);
// Expansions of the rational M_j(x), j = 1..4, against exact factorial
// moments for n <= up_to.
IdentityReport verify_moment_gfs(const CountTable& t, int up_to);
// [x^n/n!] (1-t)/(1 - t e^{(1-t)x}) equals the n-th Eulerian polynomial.
IdentityReport verify_eulerian_gf(int order_x);
// In y = x/sqrt(2): sech^2 y = sum (-1)^n E_{2n+1} y^{2n}/(2n)! and
// tanh y = sum (-1)^n E_{2n+1} y^{2n+1}/(2n+1)!.
IdentityReport verify_tangent_limit(int order_x);

// u_k(0..order_n) from Gessel's Bessel determinant det(I_{i-j}(2x)).
// Guarded: 1 <= k <= 6, order_n <= 8.
std::vector<BigInt> gessel_determinant_u(int k, int order_n);

enum class VerifySuite { all, series, polys, moments };

struct SuiteOptions {
    int order_x = 12;
    int order_t = 12;
    int divisibility_max_n = 20;  // Corollary 2 range
    int rootedness_max_n = 15;    // Sturm / interlacing range
    int run_relation_max_n = 15;  // T_n = (1+t)G_n/2 range
    int david_barton_max_n = 10;
    int moments_up_to = 20;
    int closed_forms_max_n = 25;  // mean/variance closed forms
    int eulerian_order = 10;
};

std::vector<IdentityReport> run_verification_suite(VerifySuite which, const SuiteOptions& opt);

} // namespace altseq
