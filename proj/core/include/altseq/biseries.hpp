#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "altseq/poly.hpp"
#include "altseq/rational.hpp"

namespace altseq {

// Truncated bivariate power series sum c_{n,k} t^k x^n with exact rational
// coefficients, truncated to the rectangle n <= order_x, k <= order_t.
//
// Rectangular truncation is closed and exact under +, *, /, sqrt and
// exp(x*...): every coefficient inside the rectangle depends only on input
// coefficients inside the rectangle. Only d/dx genuinely loses an x-order.
// Binary operations require operands truncated to the same rectangle.
class BiSeries {
public:
    BiSeries(int order_x, int order_t);

    static BiSeries zero(int order_x, int order_t) { return BiSeries(order_x, order_t); }
    static BiSeries one(int order_x, int order_t);
    static BiSeries constant(const BigRat& c, int order_x, int order_t);
    // Embed a polynomial in t (coefficients beyond order_t fall away).
    static BiSeries from_poly_t(const Poly& p, int order_x, int order_t);

    int order_x() const { return nx_; }
    int order_t() const { return nt_; }

    const BigRat& at(int n, int k) const { return c_[idx(n, k)]; }
    BigRat& at(int n, int k) { return c_[idx(n, k)]; }

    // EGF view: n! * [x^n t^k], the combinatorial count the series encodes.
    BigRat egf_coeff(int n, int k) const;
    // Row n as a polynomial in t, scaled by n!.
    Poly t_slice_egf(int n) const;

    BiSeries operator-() const;
    BiSeries operator+(const BiSeries& o) const;
    BiSeries operator-(const BiSeries& o) const;
    BiSeries operator*(const BiSeries& o) const;
    BiSeries operator*(const BigRat& s) const;
    bool operator==(const BiSeries& o) const { return nx_ == o.nx_ && nt_ == o.nt_ && c_ == o.c_; }

    // Division; divisor needs a nonzero constant term (throws NonInvertible).
    BiSeries div(const BiSeries& b) const;
    // Square root with constant term +1 (throws BadConstantTerm otherwise).
    // Newton iteration r <- (r + a/r)/2; each step doubles the (x,t)-adic
    // precision, so the rectangle is exact once the iteration fixes.
    BiSeries sqrt() const;
    // exp of a series whose every monomial carries x-degree >= 1
    // (throws NonzeroConstant otherwise). Sum of a^j/j!, j <= order_x.
    BiSeries exp_x_multiple() const;

    BiSeries dx() const;               // d/dx, result order (order_x - 1, order_t)
    BiSeries mul_x() const;            // multiply by x (same rectangle, exact)
    BiSeries mul_t(int power) const;   // multiply by t^power
    // Divide by t^power; the low t-rows must vanish. The top `power` t-rows
    // of the result are unknown, so order_t shrinks by power.
    BiSeries div_t_exact(int power) const;
    BiSeries subst_neg_t() const;      // t -> -t
    // Shrink to a smaller rectangle (growing would invent coefficients).
    BiSeries truncated(int new_order_x, int new_order_t) const;

    bool is_zero() const;
    // First nonzero coefficient in (n, k) lexicographic order, if any.
    std::optional<std::tuple<int, int, BigRat>> first_nonzero() const;

private:
    size_t idx(int n, int k) const;
    void require_same_orders(const BiSeries& o) const;

    int nx_, nt_;
    std::vector<BigRat> c_; // row-major: (nx_+1) rows of (nt_+1)
};

// Even/odd split in t: first keeps even t-degrees, second odd; they sum back.
std::pair<BiSeries, BiSeries> split_even_odd(const BiSeries& a);

} // namespace altseq
