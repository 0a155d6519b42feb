#include "altseq/biseries.hpp"

#include <stdexcept>

#include "altseq/errors.hpp"

namespace altseq {

BiSeries::BiSeries(int order_x, int order_t) : nx_(order_x), nt_(order_t) {
    if (order_x < 0 || order_t < 0)
        throw std::invalid_argument("BiSeries truncation orders must be nonnegative");
    c_.assign(static_cast<size_t>(nx_ + 1) * (nt_ + 1), BigRat(0));
}

size_t BiSeries::idx(int n, int k) const {
    if (n < 0 || n > nx_ || k < 0 || k > nt_)
        throw std::out_of_range("BiSeries coefficient index outside truncation rectangle");
    return static_cast<size_t>(n) * (nt_ + 1) + k;
}

void BiSeries::require_same_orders(const BiSeries& o) const {
    if (nx_ != o.nx_ || nt_ != o.nt_)
        throw OrderMismatch("BiSeries truncation orders of operands must match");
}

BiSeries BiSeries::one(int order_x, int order_t) { return constant(BigRat(1), order_x, order_t); }

BiSeries BiSeries::constant(const BigRat& c, int order_x, int order_t) {
    BiSeries r(order_x, order_t);
    r.at(0, 0) = c;
    return r;
}

BiSeries BiSeries::from_poly_t(const Poly& p, int order_x, int order_t) {
    BiSeries r(order_x, order_t);
    for (int k = 0; k <= std::min(p.degree(), order_t); ++k) r.at(0, k) = p.coeff(k);
    return r;
}

BigRat BiSeries::egf_coeff(int n, int k) const {
    return at(n, k) * BigRat(factorial(static_cast<unsigned long>(n)));
}

Poly BiSeries::t_slice_egf(int n) const {
    BigRat f(factorial(static_cast<unsigned long>(n)));
    std::vector<BigRat> coeffs(nt_ + 1);
    for (int k = 0; k <= nt_; ++k) coeffs[k] = at(n, k) * f;
    return Poly(std::move(coeffs));
}

BiSeries BiSeries::operator-() const {
    BiSeries r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

BiSeries BiSeries::operator+(const BiSeries& o) const {
    require_same_orders(o);
    BiSeries r(*this);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

BiSeries BiSeries::operator-(const BiSeries& o) const {
    require_same_orders(o);
    BiSeries r(*this);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

BiSeries BiSeries::operator*(const BiSeries& o) const {
    require_same_orders(o);
    BiSeries r(nx_, nt_);
    for (int n1 = 0; n1 <= nx_; ++n1)
        for (int k1 = 0; k1 <= nt_; ++k1) {
            const BigRat& a = at(n1, k1);
            if (sgn(a) == 0) continue;
            for (int n2 = 0; n2 + n1 <= nx_; ++n2)
                for (int k2 = 0; k2 + k1 <= nt_; ++k2) {
                    const BigRat& b = o.at(n2, k2);
                    if (sgn(b) == 0) continue;
                    r.at(n1 + n2, k1 + k2) += a * b;
                }
        }
    return r;
}

BiSeries BiSeries::operator*(const BigRat& s) const {
    BiSeries r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

BiSeries BiSeries::div(const BiSeries& b) const {
    require_same_orders(b);
    const BigRat& lead = b.at(0, 0);
    if (sgn(lead) == 0)
        throw NonInvertible("series division by a series with zero constant term");
    // q(n,k) is determined by all earlier coefficients in (n, k)-lex order:
    // a(n,k) = sum q(i,j) b(n-i,k-j), the (i,j) = (n,k) term carrying b(0,0).
    BiSeries q(nx_, nt_);
    for (int n = 0; n <= nx_; ++n)
        for (int k = 0; k <= nt_; ++k) {
            BigRat acc = at(n, k);
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= k; ++j) {
                    if (i == n && j == k) continue;
                    const BigRat& qq = q.at(i, j);
                    if (sgn(qq) == 0) continue;
                    acc -= qq * b.at(n - i, k - j);
                }
            q.at(n, k) = acc / lead;
        }
    return q;
}

BiSeries BiSeries::sqrt() const {
    if (at(0, 0) != 1)
        throw BadConstantTerm("series square root requires constant term 1");
    BiSeries r = one(nx_, nt_);
    BigRat half(1, 2);
    // Precision doubles each step, so nx_+nt_ bounds the iteration count
    // long before this cap.
    for (int iter = 0; iter < 64; ++iter) {
        BiSeries next = (r + div(r)) * half;
        if (next == r) return r;
        r = next;
    }
    throw Error("series square root did not stabilize");
}

BiSeries BiSeries::exp_x_multiple() const {
    for (int k = 0; k <= nt_; ++k)
        if (sgn(at(0, k)) != 0)
            throw NonzeroConstant("series exp requires every monomial to carry x-degree >= 1");
    BiSeries sum = one(nx_, nt_);
    BiSeries term = one(nx_, nt_);
    for (int j = 1; j <= nx_; ++j) { // a^j vanishes on the rectangle past j = order_x
        term = term * *this * BigRat(1, j);
        sum = sum + term;
    }
    return sum;
}

BiSeries BiSeries::dx() const {
    if (nx_ == 0) throw OutOfRange("d/dx of a series with x-order 0");
    BiSeries r(nx_ - 1, nt_);
    for (int n = 0; n < nx_; ++n)
        for (int k = 0; k <= nt_; ++k) r.at(n, k) = at(n + 1, k) * BigRat(n + 1);
    return r;
}

BiSeries BiSeries::mul_x() const {
    BiSeries r(nx_, nt_);
    for (int n = 1; n <= nx_; ++n)
        for (int k = 0; k <= nt_; ++k) r.at(n, k) = at(n - 1, k);
    return r;
}

BiSeries BiSeries::mul_t(int power) const {
    BiSeries r(nx_, nt_);
    for (int n = 0; n <= nx_; ++n)
        for (int k = power; k <= nt_; ++k) r.at(n, k) = at(n, k - power);
    return r;
}

BiSeries BiSeries::div_t_exact(int power) const {
    if (power > nt_) throw OutOfRange("t-power exceeds truncation order");
    for (int n = 0; n <= nx_; ++n)
        for (int k = 0; k < power; ++k)
            if (sgn(at(n, k)) != 0)
                throw NonzeroRemainder("series not divisible by t^" + std::to_string(power));
    BiSeries r(nx_, nt_ - power);
    for (int n = 0; n <= nx_; ++n)
        for (int k = 0; k <= nt_ - power; ++k) r.at(n, k) = at(n, k + power);
    return r;
}

BiSeries BiSeries::subst_neg_t() const {
    BiSeries r(*this);
    for (int n = 0; n <= nx_; ++n)
        for (int k = 1; k <= nt_; k += 2) r.at(n, k) = -r.at(n, k);
    return r;
}

BiSeries BiSeries::truncated(int new_order_x, int new_order_t) const {
    if (new_order_x > nx_ || new_order_t > nt_)
        throw OrderMismatch("cannot grow a truncated series");
    BiSeries r(new_order_x, new_order_t);
    for (int n = 0; n <= new_order_x; ++n)
        for (int k = 0; k <= new_order_t; ++k) r.at(n, k) = at(n, k);
    return r;
}

bool BiSeries::is_zero() const {
    for (const auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

std::optional<std::tuple<int, int, BigRat>> BiSeries::first_nonzero() const {
    for (int n = 0; n <= nx_; ++n)
        for (int k = 0; k <= nt_; ++k)
            if (sgn(at(n, k)) != 0) return std::make_tuple(n, k, at(n, k));
    return std::nullopt;
}

std::pair<BiSeries, BiSeries> split_even_odd(const BiSeries& a) {
    BiSeries even(a.order_x(), a.order_t());
    BiSeries odd(a.order_x(), a.order_t());
    for (int n = 0; n <= a.order_x(); ++n)
        for (int k = 0; k <= a.order_t(); ++k)
            ((k % 2 == 0) ? even.at(n, k) : odd.at(n, k)) = a.at(n, k);
    return {std::move(even), std::move(odd)};
}

} // namespace altseq
