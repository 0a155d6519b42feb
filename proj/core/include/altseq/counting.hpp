#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "altseq/poly.hpp"
#include "altseq/rational.hpp"

namespace altseq {

// Triangular table a_k(n) = #{w in S_n : as(w) = k}, 0 <= k <= n <= N.
// Row sums are n!; a_0(0) = 1 and a_0(n) = 0 for n >= 1.
class CountTable {
public:
    explicit CountTable(int max_n);

    int max_n() const { return static_cast<int>(rows_.size()) - 1; }
    const BigInt& a(int n, int k) const; // throws OutOfRange
    BigInt& a_mut(int n, int k);
    // b_k(n) = a_1(n) + ... + a_k(n) as a prefix sum (k may exceed n).
    BigInt b(int n, int k) const;
    BigInt row_sum(int n) const;

private:
    std::vector<std::vector<BigInt>> rows_;
};

// a_k(n+1) = sum_j C(n,j) sum_{2r+s=k-1} (a_{2r}(j) + a_{2r+1}(j)) a_s(n-j),
// seeded with a_0(0) = 1.
CountTable build_a_table(int max_n);

// Defining oracle: tally as(w) over all of S_n. Throws SizeLimitExceeded
// past n = 8.
CountTable a_table_bruteforce(int max_n);

// Closed form
//   b_k(n) = 2^{1-k} sum_{r+2s<=k, r=k mod 2} (-2)^s C(k-s,(k+r)/2) C(n,s) r^n
// with 0^n = [n=0] and out-of-range binomials = 0. The rational intermediate
// must come out integral; anything else throws NonIntegerResult.
BigInt b_closed(long k, long n);

// Table of g_k(n) = #{w in S_n with k alternating runs}, recovered from
// a_k(n) = (g_{k-1}(n) + g_k(n))/2 with anchor g_0(n) = 0. Valid for rows
// n >= 2 only; rows 0 and 1 are left empty. Throws NegativeEntry if the
// input triangle is inconsistent.
std::vector<std::vector<BigInt>> g_table(const CountTable& t);

Poly T_poly(const CountTable& t, int n); // sum_k a_k(n) t^k
Poly G_poly(const CountTable& t, int n); // sum_k g_k(n) t^k, n >= 2

struct UPolyResult {
    Poly u;                 // T_n / (1+t)^{floor(n/2)}
    BigRat value_at_minus1; // equals +-E_{2m+1} / 2^m by Corollary 2
};
UPolyResult U_poly(const CountTable& t, int n); // throws NonzeroRemainder if divisibility fails

// E_0..E_N by the boustrophedon (Seidel) recurrence.
std::vector<BigInt> euler_numbers(int max_n);

// nth Eulerian polynomial sum_w t^{1+des(w)}, n >= 1, by the triangle
// recurrence A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1).
Poly eulerian_poly(int n);

// Certify G_n(t) = ((1+t)/2)^{n-1} (1+w)^{n+1} A_n((1-w)/(1+w)) at rational
// values of the radical w >= 0 (t = (1-w^2)/(1+w^2) is then rational). With
// deg G_n + 1 distinct points this is a proof of the polynomial identity.
// Returns true; throws MismatchAt on a failing point.
bool david_barton_check(const CountTable& t, int n, std::span<const BigRat> w_points);

struct MomentValue {
    int j = 0;
    int n = 0;
    BigRat value;
};

// nu_j(n) = (1/n!) sum_k a_k(n) k(k-1)...(k-j+1), exact.
MomentValue factorial_moment(const CountTable& t, int j, int n);

BigRat mean_closed(long n); // (4n+1)/6, n >= 2; OutOfValidityRange below
BigRat var_closed(long n);  // (32n-13)/180, n >= 4; OutOfValidityRange below

// Smallest n0 <= t.max_n() - j such that the (j+1)-st finite difference of
// nu_j(n) vanishes for every n in [n0, max_n - j - 1]; -1 if none observed.
// Reports the empirically observed polynomiality threshold, nothing more.
int nu_polynomiality_threshold(const CountTable& t, int j);

// Table exports. CSV header "n,k,a,b,g"; JSON carries integers as decimal
// strings so 64-bit consumers survive 25! and beyond.
void export_csv(const CountTable& t, std::ostream& os, bool col_a, bool col_b, bool col_g);
void export_json(const CountTable& t, std::ostream& os, bool col_a, bool col_b, bool col_g);

} // namespace altseq
